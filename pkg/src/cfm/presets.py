"""Builders for the four worked families of canonical forms and a test catalog."""
from __future__ import annotations

from .errors import CfStructureError
from .expr import (Basic, CfExpr, Spread, Sum, ValidationIssue, require_nonempty,
                   shifted_blocks)


def _cols(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


def _full_flag(k: int) -> CfExpr:
    if k == 1:
        return Basic(1)
    return Sum(k, tuple(Spread(Basic(1), _cols(1, k), k) for _ in range(k)))


def example1(n: int, m: int, s) -> Sum:
    """``n`` orthogonal projective rows, row ``i`` starting with at least ``s[i]`` zeros."""
    s = tuple(int(v) for v in s)
    if not (1 <= n <= m):
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    if len(s) != n:
        raise ValueError(f"expected {n} offsets, got {len(s)}")
    if any(not 0 <= v < m for v in s):
        raise ValueError(f"offsets must lie in 0..{m - 1}")
    expr = Sum(m, tuple(Spread(Basic(1), _cols(v + 1, m), m) for v in s))
    if m == n and any(v >= i for i, v in enumerate(sorted(s), start=1)):
        # square case: some reordering must give s_i < i
        raise CfStructureError(ValidationIssue(
            "EMPTY_FORM", (), 0.0, f"no ordering of {s} satisfies s_i < i"))
    require_nonempty(expr)
    return expr


def example2(blocks) -> CfExpr:
    """Block-diagonal inner sum: each block lives on its own run of columns."""
    blocks = [Basic(b) if isinstance(b, int) else b for b in blocks]
    if not blocks:
        raise ValueError("example2 needs at least one block")
    width = sum(b.width for b in blocks)
    out, offset = [], 0
    for b in blocks:
        out.extend(shifted_blocks(b, offset, width))
        offset += b.width
    expr = Sum(width, tuple(out))
    require_nonempty(expr)
    return expr


def example3(blocks, m_prime: int) -> Spread:
    """Spread of a block-diagonal sum of square forms over ``1..m_prime``.

    An integer block ``k`` stands for the full flag form of size ``k``.
    """
    blocks = [_full_flag(b) if isinstance(b, int) else b for b in blocks]
    for b in blocks:
        if b.rows != b.width:
            raise ValueError(f"example3 blocks must be square, got {b.rows}x{b.width}")
    base = example2(blocks)
    n = base.rows
    if m_prime < n:
        raise ValueError(f"cannot spread {n} rows over {m_prime} columns")
    expr = Spread(base, _cols(1, m_prime), m_prime)
    require_nonempty(expr)
    return expr


def _example4_blocks(sizes, support, width) -> list[Spread]:
    n = sum(sizes)
    singles = [Spread(Basic(1), support, width) for _ in range(sizes[0])]
    if len(sizes) == 1:
        return singles
    if len(support) == n:
        # square: the first group is free, every later row avoids the first column
        return singles + _example4_blocks(sizes[1:], support[1:], width)
    base = Sum(n, tuple(_example4_blocks(sizes, _cols(1, n), n)))
    return [Spread(base, support, width)]


def example4(sizes, m: int) -> CfExpr:
    """Row groups of the given sizes whose minimal leading-zero counts strictly increase."""
    sizes = tuple(int(k) for k in sizes)
    if not sizes or any(k < 1 for k in sizes):
        raise ValueError("group sizes must be positive")
    if sum(sizes) > m:
        raise ValueError(f"{sum(sizes)} rows do not fit in {m} columns")
    blocks = _example4_blocks(sizes, _cols(1, m), m)
    if len(blocks) == 1:
        b = blocks[0]
        expr = Spread(b.base, b.support, b.width, min_order=sizes)
    else:
        expr = Sum(m, tuple(blocks), min_order=sizes)
    require_nonempty(expr)
    return expr


PRESETS = {"example1": example1, "example2": example2, "example3": example3,
           "example4": example4}


def build_preset(name: str, *params) -> CfExpr:
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return PRESETS[name](*params)


def build_preset_from_args(name: str, groups: list[list]) -> CfExpr:
    """Map the ``;``-separated argument groups of ``preset:NAME(...)`` onto a builder."""
    def ints(group):
        if not all(isinstance(v, int) for v in group):
            raise ValueError(f"{name}: expected integers, got {group}")
        return group

    if name == "example1":
        if len(groups) != 2 or len(groups[0]) != 2:
            raise ValueError("usage: example1(n,m; s_1,...,s_n)")
        n, m = ints(groups[0])
        return example1(n, m, ints(groups[1]))
    if name == "example2":
        if len(groups) != 1:
            raise ValueError("usage: example2(block, block, ...)")
        return example2(groups[0])
    if name == "example3":
        if len(groups) != 2 or len(groups[1]) != 1:
            raise ValueError("usage: example3(block, ...; m')")
        return example3(groups[0], ints(groups[1])[0])
    if name == "example4":
        if len(groups) != 2 or len(groups[1]) != 1:
            raise ValueError("usage: example4(n_1,...,n_p; m)")
        return example4(ints(groups[0]), ints(groups[1])[0])
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


CATALOG_TEXT = [
    "basic(1)",
    "basic(3)",
    "grassmann(1,2)",
    "grassmann(1,3)",
    "grassmann(2,3)",
    "grassmann(2,4)",
    "grassmann(3,5)",
    "flag(1,1;3)",
    "flag(1,1,1;3)",
    "flag(1,2;4)",
    "flag(2,1;5)",
    "flag(1,1,1,1;4)",
    "sum(m=5; spread(basic(1), cols=1..2), spread(basic(2), cols=3..5))",
    "sum(m=4; spread(basic(1), cols=2..3), spread(basic(2), cols=1..4))",
    "spread(sum(m=2; spread(basic(1), cols=1..2), spread(basic(1), cols=2..2)), cols={1,3,4}, width=4)",
    "preset:example1(2,3; 0,1)",
    "preset:example1(3,3; 0,0,0)",
    "preset:example1(3,3; 0,2,1)",
    "preset:example1(3,5; 0,2,1)",
    "preset:example2(grassmann(1,2), flag(1,1;3))",
    "preset:example2(grassmann(2,3), 1, grassmann(1,2))",
    "preset:example3(2,1; 5)",
    "preset:example3(basic(2), flag(1,1,1;3); 6)",
    "preset:example4(2,1; 3)",
    "preset:example4(1,2; 3)",
    "preset:example4(2,1; 4)",
    "preset:example4(2,1,1; 5)",
    "preset:example4(1,1,1; 4)",
]


def catalog() -> list[tuple[str, CfExpr]]:
    """Named expressions covering every node type and every preset family."""
    from .dsl import parse
    return [(text, parse(text)) for text in CATALOG_TEXT]
