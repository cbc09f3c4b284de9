"""Canonical-form expressions: basic forms, spreadings and inner sums.

Column indices are 1-based everywhere in this module, as in the DSL.

A ``Sum`` normalises its blocks on construction: bare ``Basic`` blocks become
``Spread(Basic(n), 1..n)`` and nested sums of the same width are flattened, so
every block of a constructed ``Sum`` is a ``Spread``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .errors import CfStructureError
from .scalar import REAL, FieldTag

ISSUE_CODES = (
    "WIDTH_MISMATCH", "NOT_SQUARE_BASE", "NOT_LAMINAR", "EMPTY_FORM", "NORM",
    "ORTHOGONALITY", "PIVOT_PHASE", "SUPPORT_VIOLATION", "FACTOR_RESIDUAL", "MIN_ORDER",
)


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    location: tuple = ()
    magnitude: float = 0.0
    detail: str = ""

    def __post_init__(self):
        if self.code not in ISSUE_CODES:
            raise ValueError(f"unknown issue code {self.code!r}")
        if not self.magnitude >= 0:
            raise ValueError("issue magnitude must be nonnegative")

    def to_json(self) -> dict:
        return {"code": self.code, "location": list(self.location),
                "magnitude": self.magnitude, "detail": self.detail}


def _fail(code, detail, location=(), magnitude=0.0):
    raise CfStructureError(ValidationIssue(code, tuple(location), magnitude, detail))


@dataclass(frozen=True)
class Basic:
    n: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"basic form size must be a positive integer, got {self.n!r}")

    @property
    def rows(self) -> int:
        return self.n

    @property
    def width(self) -> int:
        return self.n


@dataclass(frozen=True)
class Spread:
    base: "CfExpr"
    support: tuple[int, ...]
    width: int
    # row-group sizes for the strict block-minima check of example-4 presets
    min_order: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        support = tuple(sorted(set(int(c) for c in self.support)))
        object.__setattr__(self, "support", support)
        if self.base.rows != self.base.width:
            _fail("NOT_SQUARE_BASE",
                  f"spread base is {self.base.rows}x{self.base.width}, must be square")
        if not support or support[0] < 1 or support[-1] > self.width:
            _fail("WIDTH_MISMATCH", f"support {support} not inside 1..{self.width}")

    @property
    def n(self) -> int:
        return self.base.rows

    @property
    def rows(self) -> int:
        return self.base.rows


@dataclass(frozen=True)
class Sum:
    width: int
    blocks: tuple["CfExpr", ...]
    min_order: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        flat = []
        for b in self.blocks:
            if b.width != self.width:
                _fail("WIDTH_MISMATCH", f"block of width {b.width} in a sum of width {self.width}")
            if isinstance(b, Sum):
                flat.extend(b.blocks)
            elif isinstance(b, Basic):
                flat.append(Spread(b, tuple(range(1, b.n + 1)), b.n))
            else:
                flat.append(b)
        if not flat:
            raise ValueError("a sum needs at least one block")
        object.__setattr__(self, "blocks", tuple(flat))
        sets = [set(b.support) for b in flat]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                a, b = sets[i], sets[j]
                if a & b and not (a <= b or b <= a):
                    _fail("NOT_LAMINAR",
                          f"supports of blocks {i + 1} and {j + 1} overlap without nesting",
                          location=(i, j))

    @property
    def rows(self) -> int:
        return sum(b.rows for b in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(b.rows for b in self.blocks)


CfExpr = Union[Basic, Spread, Sum]


def support_of(expr: CfExpr) -> tuple[int, ...]:
    if isinstance(expr, Basic):
        return tuple(range(1, expr.n + 1))
    if isinstance(expr, Spread):
        return expr.support
    return tuple(sorted(set().union(*(b.support for b in expr.blocks))))


class Nesting(NamedTuple):
    block: int   # index into Sum.blocks
    ambient: int  # effective ambient size r_i


def nesting_order(expr: Sum) -> list[Nesting]:
    """Blocks from most to least constrained, with their effective ambients.

    Blocks are stably sorted by support size.  A block's effective ambient is
    its support size minus the rows of earlier blocks whose supports lie inside
    it; those rows already occupy part of its column space.
    """
    if not isinstance(expr, Sum):
        raise TypeError("nesting_order needs a Sum node")
    order = sorted(range(len(expr.blocks)), key=lambda i: (len(expr.blocks[i].support), i))
    sets = [set(b.support) for b in expr.blocks]
    out = []
    for pos, i in enumerate(order):
        used = sum(expr.blocks[k].rows for k in order[:pos] if sets[k] <= sets[i])
        r = len(sets[i]) - used
        if r < expr.blocks[i].rows:
            _fail("EMPTY_FORM",
                  f"block {i + 1} needs {expr.blocks[i].rows} rows but only {r} "
                  f"directions remain in its support", location=(i,))
        out.append(Nesting(i, r))
    return out


def require_nonempty(expr: CfExpr, path: tuple = ()) -> None:
    """Raise EMPTY_FORM if the family of matrices described by ``expr`` is empty."""
    if isinstance(expr, Basic):
        return
    if isinstance(expr, Spread):
        if len(expr.support) < expr.n:
            _fail("EMPTY_FORM", f"{expr.n} rows cannot fit in {len(expr.support)} columns",
                  location=path)
        require_nonempty(expr.base, path + ("base",))
        return
    nesting_order(expr)
    for i, b in enumerate(expr.blocks):
        require_nonempty(b.base, path + (i, "base"))


def is_empty(expr: CfExpr) -> bool:
    try:
        require_nonempty(expr)
    except CfStructureError as exc:
        if exc.issue.code == "EMPTY_FORM":
            return True
        raise
    return False


class Dimension(NamedTuple):
    dim_f: int
    dim_real: int


def _dim(expr: CfExpr) -> int:
    if isinstance(expr, Basic):
        return 0
    if isinstance(expr, Spread):
        return _dim(expr.base) + expr.n * (len(expr.support) - expr.n)
    total = 0
    for i, r in nesting_order(expr):
        b = expr.blocks[i]
        total += b.n * (r - b.n) + _dim(b.base)
    return total


def dimension(expr: CfExpr, field: FieldTag = REAL) -> Dimension:
    """Dimension over F and over R of the manifold described by ``expr``."""
    require_nonempty(expr)
    k = _dim(expr)
    return Dimension(k, k * field.d)


def shifted_blocks(expr: CfExpr, offset: int, width: int) -> list[Spread]:
    """Sum blocks placing ``expr`` on columns offset+1 .. offset+expr.width of ``width``."""
    if isinstance(expr, Basic):
        return [Spread(expr, tuple(range(offset + 1, offset + expr.n + 1)), width)]
    if isinstance(expr, Spread):
        return [Spread(expr.base, tuple(c + offset for c in expr.support), width)]
    out = []
    for b in expr.blocks:
        out.extend(shifted_blocks(b, offset, width))
    return out


def walk(expr: CfExpr):
    """Pre-order traversal of all nodes."""
    yield expr
    if isinstance(expr, Spread):
        yield from walk(expr.base)
    elif isinstance(expr, Sum):
        for b in expr.blocks:
            yield from walk(b)
