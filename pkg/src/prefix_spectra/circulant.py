"""Integer circulant matrices as a commutative ring.

``C(c_0, ..., c_{l-1})`` has first row ``c`` and each later row is the
previous one shifted cyclically one place to the right.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .exact import ExactMatrix, bareiss_det


@dataclass(frozen=True)
class CirculantMatrix:
    first_row: tuple[int, ...]

    def __post_init__(self):
        row = tuple(int(c) for c in self.first_row)
        if not row:
            raise ValueError("circulant order must be >= 1")
        object.__setattr__(self, "first_row", row)

    @property
    def order(self) -> int:
        return len(self.first_row)

    @classmethod
    def scalar(cls, c: int, order: int) -> "CirculantMatrix":
        return cls((c,) + (0,) * (order - 1))

    @classmethod
    def shift(cls, k: int, order: int) -> "CirculantMatrix":
        """``C`` with a single 1 at offset ``k mod order``."""
        row = [0] * order
        row[k % order] = 1
        return cls(tuple(row))

    def entry(self, i: int, j: int) -> int:
        return self.first_row[(j - i) % self.order]

    def to_matrix(self) -> ExactMatrix:
        l = self.order
        return ExactMatrix([[self.entry(i, j) for j in range(l)] for i in range(l)])

    def _check(self, other: "CirculantMatrix"):
        if self.order != other.order:
            raise ValueError(f"circulant orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "CirculantMatrix") -> "CirculantMatrix":
        self._check(other)
        return CirculantMatrix(tuple(a + b for a, b in zip(self.first_row, other.first_row)))

    def __sub__(self, other: "CirculantMatrix") -> "CirculantMatrix":
        self._check(other)
        return CirculantMatrix(tuple(a - b for a, b in zip(self.first_row, other.first_row)))

    def __neg__(self) -> "CirculantMatrix":
        return CirculantMatrix(tuple(-a for a in self.first_row))

    def __mul__(self, other: "CirculantMatrix") -> "CirculantMatrix":
        # first row of a product is the cyclic convolution of the first rows
        self._check(other)
        l = self.order
        out = [0] * l
        for i, a in enumerate(self.first_row):
            if a:
                for j, b in enumerate(other.first_row):
                    out[(i + j) % l] += a * b
        return CirculantMatrix(tuple(out))

    def is_zero(self) -> bool:
        return not any(self.first_row)


def c_pm(m: int) -> CirculantMatrix:
    """``C(0,1,0,...,0) + C(0,...,0,1)``: one step up plus one step down mod m."""
    return CirculantMatrix.shift(1, m) + CirculantMatrix.shift(-1, m)


def c_plus(m: int) -> CirculantMatrix:
    return CirculantMatrix.shift(1, m)


def circ_eigenvalues(c: CirculantMatrix) -> list[complex]:
    """``lambda_k = sum_j c_j exp(-2 pi i k j / l)`` for k = 0..l-1."""
    l = c.order
    return [
        sum(cj * cmath.exp(-2j * cmath.pi * k * j / l) for j, cj in enumerate(c.first_row))
        for k in range(l)
    ]


def fourier_vector(k: int, l: int) -> list[complex]:
    return [cmath.exp(-2j * cmath.pi * k * j / l) for j in range(l)]


def circ_det(c: CirculantMatrix) -> int:
    return bareiss_det(c.to_matrix())


def is_cpm_singular(m: int) -> bool:
    """Singularity of ``C(0,1,0..0) + C(0..0,1)`` decided by its exact determinant."""
    if m < 1:
        raise ValueError("m must be >= 1")
    singular = circ_det(c_pm(m)) == 0
    if m >= 3:
        assert singular == (m % 4 == 0), f"singularity of C+-({m}) disagrees with m = 0 mod 4"
    return singular


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def ring_determinant(blocks: Sequence[Sequence[CirculantMatrix]]) -> CirculantMatrix:
    """Leibniz expansion of an n x n grid whose entries are circulants."""
    n = len(blocks)
    if n == 0 or any(len(row) != n for row in blocks):
        raise ValueError("need a square grid of blocks")
    order = blocks[0][0].order
    if any(b.order != order for row in blocks for b in row):
        raise ValueError("all blocks must share one order")
    total = CirculantMatrix.scalar(0, order)
    for perm in permutations(range(n)):
        term = CirculantMatrix.scalar(_perm_sign(perm), order)
        for i, j in enumerate(perm):
            term = term * blocks[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def expand_blocks(blocks: Sequence[Sequence[CirculantMatrix]]) -> ExactMatrix:
    order = blocks[0][0].order
    rows = []
    for brow in blocks:
        for i in range(order):
            rows.append([b.entry(i, j) for b in brow for j in range(order)])
    return ExactMatrix(rows)


def silvester_block_det(blocks: Sequence[Sequence[CirculantMatrix]]) -> int:
    """``det(M) = det(det_ring(M))`` for a block matrix of equal-order circulants."""
    return circ_det(ring_determinant(blocks))
