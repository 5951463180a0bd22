"""mn x mn permutation matrices of prefix reversals and their sums.

Decorated symbols ``j^k`` are ordered ``1^0 < 1^1 < ... < 1^{m-1} < 2^0 < ...``
so ``j^k`` sits at row/column ``(j-1)*m + k``.  Row ``e`` of ``P(r)`` has its
single 1 in column ``r(e)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .circulant import CirculantMatrix, c_plus, c_pm, expand_blocks
from .colored_group import PrefixReversal, Sign, all_reversals, flips
from .exact import ExactMatrix

Variant = Literal["both", "flips_only"]


@dataclass(frozen=True, order=True)
class EntryIndex:
    symbol: int
    color: int


def entry_position(e: EntryIndex, m: int, n: int | None = None) -> int:
    if not 0 <= e.color < m:
        raise ValueError(f"color {e.color} outside [0, {m - 1}]")
    if e.symbol < 1 or (n is not None and e.symbol > n):
        raise ValueError(f"symbol {e.symbol} out of range")
    return (e.symbol - 1) * m + e.color


def entry_at(pos: int, m: int) -> EntryIndex:
    s, c = divmod(pos, m)
    return EntryIndex(s + 1, c)


def perm_matrix(r: PrefixReversal, m: int, n: int) -> ExactMatrix:
    if r.index > n:
        raise ValueError(f"prefix length {r.index} exceeds n={n}")
    size = m * n
    rows = [[0] * size for _ in range(size)]
    for pos in range(size):
        e = entry_at(pos, m)
        s, c = r.act(e.symbol, e.color, m)
        rows[pos][(s - 1) * m + c] = 1
    return ExactMatrix(rows)


def generators_for(n: int, variant: Variant) -> list[PrefixReversal]:
    if variant == "both":
        return all_reversals(n)
    if variant == "flips_only":
        return flips(n)
    raise ValueError(f"unknown variant {variant!r}")


def sum_of(gens: Iterable[PrefixReversal], m: int, n: int) -> ExactMatrix:
    size = m * n
    rows = [[0] * size for _ in range(size)]
    for r in gens:
        for pos in range(size):
            e = entry_at(pos, m)
            s, c = r.act(e.symbol, e.color, m)
            rows[pos][(s - 1) * m + c] += 1
    return ExactMatrix(rows)


def build_sum(m: int, n: int, variant: Variant = "both") -> ExactMatrix:
    """``M+-(m,n)`` (variant ``both``) or ``M+(m,n)`` (``flips_only``)."""
    return sum_of(generators_for(n, variant), m, n)


def classical_generators(m: int, n: int) -> list[PrefixReversal]:
    """Generators of the pancake (m=1) and burnt pancake (m=2) graphs.

    For m = 1 the length-1 reversal is the identity and is dropped.
    """
    if m == 1:
        return [PrefixReversal(i, Sign.FLIP) for i in range(2, n + 1)]
    if m == 2:
        return flips(n)
    raise ValueError("classical generator sets exist only for m = 1, 2")


def classical_sum(m: int, n: int) -> ExactMatrix:
    return sum_of(classical_generators(m, n), m, n)


def block_of(M: ExactMatrix, a: int, b: int, m: int) -> ExactMatrix:
    """The m x m block at block row ``a``, block column ``b`` (1-based)."""
    nb = M.rows // m
    if not (1 <= a <= nb and 1 <= b <= nb):
        raise ValueError(f"block ({a},{b}) outside a {nb}x{nb} block grid")
    return M.submatrix((a - 1) * m, a * m, (b - 1) * m, b * m)


def build_D(m: int, n: int) -> ExactMatrix:
    return ExactMatrix.diag([2 * (i // m) for i in range(m * n)])


def half_D(m: int, n: int) -> ExactMatrix:
    d = build_D(m, n)
    assert all(d[i, i] % 2 == 0 for i in range(d.rows))
    return ExactMatrix.diag([d[i, i] // 2 for i in range(d.rows)])


def block_pattern(block: CirculantMatrix, n: int) -> list[list[CirculantMatrix]]:
    """Block ``(a, b)`` is ``block`` when ``a + b <= n + 1`` and zero otherwise."""
    zero = CirculantMatrix.scalar(0, block.order)
    return [[block if a + b <= n + 1 else zero for b in range(1, n + 1)] for a in range(1, n + 1)]


def build_C(m: int, n: int, variant: Variant = "both") -> ExactMatrix:
    return expand_blocks(block_pattern(c_pm(m) if variant == "both" else c_plus(m), n))


def build_closed_form(m: int, n: int, variant: Variant = "both") -> ExactMatrix:
    """``C+-(m,n) + D(m,n)`` or ``C+(m,n) + D(m,n)/2``."""
    if variant == "both":
        return build_C(m, n, "both") + build_D(m, n)
    if variant == "flips_only":
        return build_C(m, n, "flips_only") + half_D(m, n)
    raise ValueError(f"unknown variant {variant!r}")


def closed_form_blocks(m: int, n: int, lam: int = 0, variant: Variant = "both") -> list[list[CirculantMatrix]]:
    """``lam*I - M`` written as a grid of circulants (uses the closed form)."""
    base = c_pm(m) if variant == "both" else c_plus(m)
    step = 2 if variant == "both" else 1
    grid = block_pattern(base, n)
    out = []
    for a, row in enumerate(grid):
        new_row = []
        for b, blk in enumerate(row):
            x = -blk
            if a == b:
                x = x + CirculantMatrix.scalar(lam - step * a, m)
            new_row.append(x)
        out.append(new_row)
    return out
