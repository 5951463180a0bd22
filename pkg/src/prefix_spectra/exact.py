"""Dense integer matrices and exact linear algebra over Z / Q.

Everything here stays in Python ints (or Fractions on the slow path).  The
modular route is only a speed-up: any kernel vector it produces is checked
by an exact integer mat-vec before being returned.
"""

from __future__ import annotations

import io
import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from sympy import isprime


class ExactMatrix:
    """Row-major dense matrix of Python ints. Treated as immutable."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if not data or not data[0]:
            raise ValueError("matrix dimensions must be positive")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def identity(cls, k: int) -> "ExactMatrix":
        return cls.diag([1] * k)

    @classmethod
    def diag(cls, values: Sequence[int]) -> "ExactMatrix":
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def _check_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self._data])

    def scale(self, k: int) -> "ExactMatrix":
        return ExactMatrix([[k * a for a in r] for r in self._data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._data))
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum(a * c[k] for k, a in nz) for c in cols])
        return ExactMatrix(out)

    def matvec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        return [sum(a * x for a, x in zip(r, v) if a) for r in self._data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._data))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        """Rows r0..r1-1, columns c0..c1-1 (0-based, half-open)."""
        return ExactMatrix([r[c0:c1] for r in self._data[r0:r1]])

    def shift_diagonal(self, lam: int) -> "ExactMatrix":
        """``lam * I - self`` for square matrices."""
        if self.rows != self.cols:
            raise ValueError("square matrix required")
        return ExactMatrix(
            [[(lam if i == j else 0) - a for j, a in enumerate(r)] for i, r in enumerate(self._data)]
        )

    def trace(self) -> int:
        return sum(self._data[i][i] for i in range(min(self.shape)))

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._data]

    def col_sums(self) -> list[int]:
        return [sum(c) for c in zip(*self._data)]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def is_permutation_matrix(self) -> bool:
        if self.rows != self.cols:
            return False
        if any(a not in (0, 1) for r in self._data for a in r):
            return False
        return all(s == 1 for s in self.row_sums()) and all(s == 1 for s in self.col_sums())

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self._data, dtype=dtype)

    def to_csv(self) -> str:
        return "".join(",".join(str(a) for a in r) + "\n" for r in self._data)

    @classmethod
    def from_csv(cls, text: str) -> "ExactMatrix":
        rows = [line.split(",") for line in io.StringIO(text).read().splitlines() if line.strip()]
        return cls(rows)


def as_rows(a) -> list[list[int]]:
    if isinstance(a, ExactMatrix):
        return a.tolist()
    return [[int(x) for x in r] for r in a]


# --- fraction-free elimination -------------------------------------------------

def bareiss_echelon(a) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free row echelon form.

    Returns ``(rows, pivot_cols, sign)`` where the first ``len(pivot_cols)``
    rows are the echelon rows and ``sign`` tracks row swaps.  Every entry stays
    an integer minor of the input, so the divisions are exact.
    """
    rows = as_rows(a)
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, n_rows):
            lead = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for j in range(c + 1, n_cols):
                num = piv * ri[j] - lead * rr[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                ri[j] = q
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def bareiss_det(a) -> int:
    rows = as_rows(a)
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("determinant needs a square matrix")
    ech, pivots, sign = bareiss_echelon(rows)
    if len(pivots) < k:
        return 0
    return sign * ech[k - 1][k - 1]


def bareiss_rank(a) -> int:
    return len(bareiss_echelon(a)[1])


def _primitive(vec: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in vec:
        den = math.lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    first = next((x for x in ints if x), 0)
    if first < 0:
        ints = [-x for x in ints]
    return ints


def kernel_vector_from_echelon(ech: list[list[int]], pivots: list[int], n_cols: int) -> list[int] | None:
    """Back-substitute with the first free column set to 1, other free columns 0."""
    free = [c for c in range(n_cols) if c not in set(pivots)]
    if not free:
        return None
    f = free[0]
    x: list[Fraction] = [Fraction(0)] * n_cols
    x[f] = Fraction(1)
    for t in range(len(pivots) - 1, -1, -1):
        c = pivots[t]
        row = ech[t]
        acc = sum((row[j] * x[j] for j in range(c + 1, n_cols) if row[j]), Fraction(0))
        x[c] = -acc / row[c]
    return _primitive(x)


def exact_kernel_vector(a) -> tuple[int, list[int] | None]:
    rows = as_rows(a)
    n_cols = len(rows[0])
    ech, pivots, _ = bareiss_echelon(rows)
    nullity = n_cols - len(pivots)
    return nullity, kernel_vector_from_echelon(ech, pivots, n_cols)


# --- modular route -------------------------------------------------------------

def random_primes(count: int, seed: int = 0, bits: int = 62) -> list[int]:
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        cand = rng.randrange(2 ** (bits - 1), 2**bits) | 1
        if cand not in out and isprime(cand):
            out.append(cand)
    return out


def rref_mod_p(a, p: int) -> tuple[list[list[int]], list[int]]:
    rows = [[x % p for x in r] for r in as_rows(a)]
    n_rows = len(rows)
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rational_reconstruction(a: int, modulus: int) -> Fraction | None:
    """Find ``r/s == a (mod modulus)`` with ``|r|, s <= sqrt(modulus/2)``."""
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, a % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _crt(residues: Sequence[int], moduli: Sequence[int]) -> tuple[int, int]:
    x, mod = 0, 1
    for r, p in zip(residues, moduli):
        t = ((r - x) * pow(mod, -1, p)) % p
        x += mod * t
        mod *= p
    return x % mod, mod


def modular_kernel_vector(a, primes: Sequence[int]) -> tuple[int, list[int] | None]:
    """Rank mod several primes, then lift the canonical kernel vector by CRT and
    rational reconstruction.  The candidate is NOT verified here."""
    n_cols = len(as_rows(a)[0])
    results = []
    for p in primes:
        rr, piv = rref_mod_p(a, p)
        results.append((p, rr, piv))
    best = max(len(piv) for _, _, piv in results)
    good = [(p, rr, piv) for p, rr, piv in results if len(piv) == best]
    pivots = good[0][2]
    good = [g for g in good if g[2] == pivots]
    nullity = n_cols - best
    if nullity == 0:
        return 0, None
    free = [c for c in range(n_cols) if c not in set(pivots)]
    f = free[0]
    per_prime = []
    for p, rr, _ in good:
        x = [0] * n_cols
        x[f] = 1
        for t, c in enumerate(pivots):
            x[c] = (-rr[t][f]) % p
        per_prime.append(x)
    moduli = [p for p, _, _ in good]
    lifted = []
    for j in range(n_cols):
        v, mod = _crt([x[j] for x in per_prime], moduli)
        q = rational_reconstruction(v, mod)
        if q is None:
            return nullity, None
        lifted.append(q)
    return nullity, _primitive(lifted)


def is_kernel_vector(a, v: Sequence[int]) -> bool:
    if not any(v):
        return False
    return all(x == 0 for x in (a if isinstance(a, ExactMatrix) else ExactMatrix(a)).matvec(v))


def exact_nullity(a, *, exact_limit: int = 64, n_primes: int = 3, seed: int = 0) -> tuple[int, list[int] | None]:
    """Nullity of a square integer matrix plus one kernel vector when positive.

    Matrices of dimension <= ``exact_limit`` go through Bareiss directly.
    Larger ones use ranks modulo ``n_primes`` random 62-bit primes; a lifted
    kernel vector that fails the exact check sends us back to Bareiss.
    """
    m = a if isinstance(a, ExactMatrix) else ExactMatrix(a)
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    if m.rows <= exact_limit:
        return exact_kernel_vector(m)
    nullity, v = modular_kernel_vector(m, random_primes(n_primes, seed))
    if nullity == 0:
        return 0, None
    if v is not None and is_kernel_vector(m, v):
        return nullity, v
    return exact_kernel_vector(m)
