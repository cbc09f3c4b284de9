"""Text syntax for canonical-form expressions.

Grammar (whitespace is insignificant)::

    expr   := "basic(" INT ")"
            | "spread(" expr ", cols=" colset [", width=" INT] ")"
            | "sum(m=" INT "; " expr { ", " expr } ")"
            | "grassmann(" INT "," INT ")"
            | "flag(" INT {"," INT} "; " INT ")"
            | "preset:" NAME "(" args ")"
    colset := INT ".." INT | "{" INT {"," INT} "}"
    args   := item {"," item} {";" item {"," item}}      item := INT | expr

A spread's width defaults to the enclosing sum's ``m`` and otherwise to the
largest column in its colset.  ``width=`` is only needed for top-level spreads
whose support does not reach the last column.
"""
from __future__ import annotations

import re

from .errors import CfStructureError, CfSyntaxError
from .expr import Basic, CfExpr, Spread, Sum, require_nonempty

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\.\.|[(){},;=:]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise CfSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = "int" if m.group(1) else "name" if m.group(2) else "punct"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value or kind == "end":
            found = "end of input" if kind == "end" else repr(val)
            raise CfSyntaxError(f"expected {value!r}, found {found}", pos)

    def integer(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise CfSyntaxError(f"expected integer, found {val or 'end of input'!r}", pos)
        return int(val)

    def int_list(self) -> list[int]:
        out = [self.integer()]
        while self.peek[1] == ",":
            self.next()
            out.append(self.integer())
        return out

    def expr(self, width: int | None = None) -> CfExpr:
        kind, name, pos = self.next()
        if kind != "name":
            raise CfSyntaxError(f"expected an expression, found {name or 'end of input'!r}", pos)
        try:
            if name == "preset":
                return self._preset()
            self.expect("(")
            if name == "basic":
                node = Basic(self.integer())
            elif name == "spread":
                node = self._spread(width)
            elif name == "sum":
                node = self._sum()
            elif name == "grassmann":
                n = self.integer()
                self.expect(",")
                m = self.integer()
                _check_sizes(n, m)
                node = Spread(Basic(n), tuple(range(1, m + 1)), m)
            elif name == "flag":
                sizes = self.int_list()
                self.expect(";")
                m = self.integer()
                _check_sizes(sum(sizes), m)
                node = Sum(m, tuple(Spread(Basic(k), tuple(range(1, m + 1)), m) for k in sizes))
            else:
                raise CfSyntaxError(f"unknown form {name!r}", pos)
            self.expect(")")
        except (ValueError, TypeError) as exc:
            if isinstance(exc, (CfSyntaxError, CfStructureError)):
                raise
            raise CfSyntaxError(str(exc), pos) from None
        return node

    def _spread(self, width):
        base = self.expr(None)
        self.expect(",")
        self.expect("cols")
        self.expect("=")
        if self.peek[1] == "{":
            self.next()
            cols = self.int_list()
            self.expect("}")
        else:
            lo = self.integer()
            self.expect("..")
            hi = self.integer()
            if hi < lo:
                raise CfSyntaxError(f"empty column range {lo}..{hi}", self.peek[2])
            cols = list(range(lo, hi + 1))
        if self.peek[1] == ",":
            self.next()
            self.expect("width")
            self.expect("=")
            width = self.integer()
        self._closing()
        return Spread(base, tuple(cols), width if width is not None else max(cols))

    def _sum(self):
        self.expect("m")
        self.expect("=")
        m = self.integer()
        self.expect(";")
        blocks = [self.expr(m)]
        while self.peek[1] == ",":
            self.next()
            blocks.append(self.expr(m))
        self._closing()
        return Sum(m, tuple(blocks))

    def _closing(self):
        kind, val, pos = self.peek
        if val != ")" or kind == "end":
            found = "end of input" if kind == "end" else repr(val)
            raise CfSyntaxError(f"expected ')', found {found}", pos)

    def _preset(self):
        from .presets import build_preset_from_args

        self.expect(":")
        kind, name, pos = self.next()
        if kind != "name":
            raise CfSyntaxError("expected preset name", pos)
        self.expect("(")
        groups = [[]]
        while True:
            if self.peek[0] == "int":
                groups[-1].append(self.integer())
            else:
                groups[-1].append(self.expr(None))
            sep = self.peek[1]
            if sep == ",":
                self.next()
            elif sep == ";":
                self.next()
                groups.append([])
            else:
                break
        self.expect(")")
        try:
            return build_preset_from_args(name, groups)
        except CfStructureError:
            raise
        except (ValueError, TypeError) as exc:
            raise CfSyntaxError(str(exc), pos) from None


def _check_sizes(n, m):
    if n < 1 or m < 1:
        raise ValueError("sizes must be positive")


def parse(text: str) -> CfExpr:
    """Parse and structurally validate an expression (including nonemptiness)."""
    p = _Parser(text)
    node = p.expr(None)
    kind, val, pos = p.peek
    if kind != "end":
        raise CfSyntaxError(f"trailing input {val!r}", pos)
    require_nonempty(node)
    return node


def _colset(support) -> str:
    s = list(support)
    if s == list(range(s[0], s[-1] + 1)):
        return f"{s[0]}..{s[-1]}"
    return "{" + ",".join(map(str, s)) + "}"


def to_dsl(expr: CfExpr, enclosing_width: int | None = None) -> str:
    """Inverse of :func:`parse` up to sugar and preset markers."""
    if isinstance(expr, Basic):
        return f"basic({expr.n})"
    if isinstance(expr, Spread):
        implied = enclosing_width if enclosing_width is not None else expr.support[-1]
        extra = "" if implied == expr.width else f", width={expr.width}"
        return f"spread({to_dsl(expr.base)}, cols={_colset(expr.support)}{extra})"
    inner = ", ".join(to_dsl(b, expr.width) for b in expr.blocks)
    return f"sum(m={expr.width}; {inner})"
