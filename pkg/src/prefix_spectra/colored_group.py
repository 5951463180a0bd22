"""Colored permutations: the wreath product C_m wr S_n.

An element is stored as its one-line notation ``pi_1^{e_1} ... pi_n^{e_n}``:
``symbols`` holds the permutation (values 1..n) and ``colors`` the exponents
reduced mod m.

Viewed as a map on decorated symbols, an element sends ``j^k`` to
``pi_j^{k + e_j}``.  A prefix reversal ``r`` applied to ``p`` (positionally,
as in the pancake picture) is then the map ``p o r``, so the group product is
written here with the "left factor acts first" convention::

    compose(a, b)(x) == b(a(x))

which makes ``compose(generator_element(r), p) == apply(r, p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterator, Sequence


class Sign(str, Enum):
    FLIP = "+"
    FLOP = "-"


@dataclass(frozen=True)
class ColoredPermutation:
    m: int
    n: int
    symbols: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        symbols = tuple(int(s) for s in self.symbols)
        colors = tuple(int(c) for c in self.colors)
        if len(symbols) != self.n or len(colors) != self.n:
            raise ValueError("symbols and colors must both have length n")
        if sorted(symbols) != list(range(1, self.n + 1)):
            raise ValueError(f"{symbols} is not a permutation of 1..{self.n}")
        if any(not 0 <= c < self.m for c in colors):
            raise ValueError(f"colors {colors} not reduced mod {self.m}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "colors", colors)

    def __str__(self):
        return format_colored(self)

    def __call__(self, symbol: int, color: int) -> tuple[int, int]:
        """Image of the decorated symbol ``symbol^color``."""
        return self.symbols[symbol - 1], (color + self.colors[symbol - 1]) % self.m

    @property
    def order(self) -> int:
        return group_order(self.m, self.n)


@dataclass(frozen=True)
class PrefixReversal:
    index: int
    sign: Sign = Sign.FLIP

    def __post_init__(self):
        object.__setattr__(self, "sign", Sign(self.sign))
        if self.index < 1:
            raise ValueError(f"prefix length must be >= 1, got {self.index}")

    @property
    def shift(self) -> int:
        return 1 if self.sign is Sign.FLIP else -1

    @property
    def label(self) -> str:
        return f"r{self.index}{self.sign.value}"

    def inverse(self) -> "PrefixReversal":
        return PrefixReversal(self.index, Sign.FLOP if self.sign is Sign.FLIP else Sign.FLIP)

    def act(self, symbol: int, color: int, m: int) -> tuple[int, int]:
        """Action on one decorated symbol: ``j^k -> (i-j+1)^{k +- 1}`` for j <= i."""
        if symbol > self.index:
            return symbol, color
        return self.index - symbol + 1, (color + self.shift) % m


def flips(n: int) -> list[PrefixReversal]:
    return [PrefixReversal(i, Sign.FLIP) for i in range(1, n + 1)]


def flops(n: int) -> list[PrefixReversal]:
    return [PrefixReversal(i, Sign.FLOP) for i in range(1, n + 1)]


def all_reversals(n: int) -> list[PrefixReversal]:
    """R^pm_n in the fixed order r_1^+, ..., r_n^+, r_1^-, ..., r_n^-."""
    return flips(n) + flops(n)


def group_order(m: int, n: int) -> int:
    return m**n * math.factorial(n)


def identity(m: int, n: int) -> ColoredPermutation:
    return ColoredPermutation(m, n, tuple(range(1, n + 1)), (0,) * n)


def _check_index(i: int, n: int):
    if not 1 <= i <= n:
        raise ValueError(f"prefix length {i} outside [1, {n}]")


def _reverse_prefix(i: int, p: ColoredPermutation, shift: int) -> ColoredPermutation:
    _check_index(i, p.n)
    head_s = p.symbols[:i][::-1]
    head_c = tuple((c + shift) % p.m for c in p.colors[:i][::-1])
    return ColoredPermutation(p.m, p.n, head_s + p.symbols[i:], head_c + p.colors[i:])


def apply_flip(i: int, p: ColoredPermutation) -> ColoredPermutation:
    """Reverse the first ``i`` entries of ``p`` and add 1 to their colors."""
    return _reverse_prefix(i, p, 1)


def apply_flop(i: int, p: ColoredPermutation) -> ColoredPermutation:
    """Reverse the first ``i`` entries of ``p`` and subtract 1 from their colors."""
    return _reverse_prefix(i, p, -1)


def apply(r: PrefixReversal, p: ColoredPermutation) -> ColoredPermutation:
    return _reverse_prefix(r.index, p, r.shift)


def generator_element(r: PrefixReversal, m: int, n: int) -> ColoredPermutation:
    """The reversal as a group element: ``(+-1,...,+-1,0,...,0) x (1 i)(2 i-1)...``."""
    _check_index(r.index, n)
    return apply(r, identity(m, n))


def _check_same(p: ColoredPermutation, q: ColoredPermutation):
    if (p.m, p.n) != (q.m, q.n):
        raise ValueError(f"mismatched groups S({p.m},{p.n}) and S({q.m},{q.n})")


def compose(p: ColoredPermutation, q: ColoredPermutation) -> ColoredPermutation:
    """Group product with ``compose(p, q)(x) == q(p(x))``."""
    _check_same(p, q)
    m = p.m
    symbols = []
    colors = []
    for j in range(p.n):
        s = p.symbols[j]
        symbols.append(q.symbols[s - 1])
        colors.append((p.colors[j] + q.colors[s - 1]) % m)
    return ColoredPermutation(m, p.n, tuple(symbols), tuple(colors))


def product_formula(p: ColoredPermutation, q: ColoredPermutation) -> ColoredPermutation:
    """Product in ``s x sigma`` notation: ``(s + sigma_1(r)) x (sigma_2 after sigma_1)``.

    Here ``sigma_1(r)_j = r_{sigma_1(j)}``, i.e. every subscript uses the first
    factor's permutation.  Kept separate from :func:`compose` so the two can be
    checked against each other.
    """
    _check_same(p, q)
    s, sigma1 = p.colors, p.symbols
    r, sigma2 = q.colors, q.symbols
    permuted_r = [r[sigma1[j] - 1] for j in range(p.n)]
    colors = tuple((a + b) % p.m for a, b in zip(s, permuted_r))
    symbols = tuple(sigma2[sigma1[j] - 1] for j in range(p.n))
    return ColoredPermutation(p.m, p.n, symbols, colors)


def inverse(p: ColoredPermutation) -> ColoredPermutation:
    symbols = [0] * p.n
    colors = [0] * p.n
    for j, (s, c) in enumerate(zip(p.symbols, p.colors), start=1):
        symbols[s - 1] = j
        colors[s - 1] = (-c) % p.m
    return ColoredPermutation(p.m, p.n, tuple(symbols), tuple(colors))


def power(p: ColoredPermutation, k: int) -> ColoredPermutation:
    out = identity(p.m, p.n)
    for _ in range(k):
        out = compose(out, p)
    return out


# Ranking: permutation part by lexicographic rank (most significant), colors
# as a base-m number with the first position most significant.

def _perm_rank(symbols: Sequence[int]) -> int:
    n = len(symbols)
    remaining = list(range(1, n + 1))
    rank = 0
    for j, s in enumerate(symbols):
        k = remaining.index(s)
        rank += k * math.factorial(n - 1 - j)
        remaining.pop(k)
    return rank


def _perm_unrank(idx: int, n: int) -> tuple[int, ...]:
    remaining = list(range(1, n + 1))
    out = []
    for j in range(n):
        f = math.factorial(n - 1 - j)
        k, idx = divmod(idx, f)
        out.append(remaining.pop(k))
    return tuple(out)


def rank(p: ColoredPermutation) -> int:
    color_value = 0
    for c in p.colors:
        color_value = color_value * p.m + c
    return _perm_rank(p.symbols) * p.m**p.n + color_value


def unrank(idx: int, m: int, n: int) -> ColoredPermutation:
    size = group_order(m, n)
    if not 0 <= idx < size:
        raise ValueError(f"rank {idx} outside [0, {size - 1}]")
    perm_idx, color_value = divmod(idx, m**n)
    colors = []
    for _ in range(n):
        color_value, c = divmod(color_value, m)
        colors.append(c)
    return ColoredPermutation(m, n, _perm_unrank(perm_idx, n), tuple(reversed(colors)))


def enumerate_group(m: int, n: int) -> Iterator[ColoredPermutation]:
    """All elements of S(m, n) in rank order."""
    for symbols in permutations(range(1, n + 1)):
        for idx in range(m**n):
            colors = []
            for _ in range(n):
                idx, c = divmod(idx, m)
                colors.append(c)
            yield ColoredPermutation(m, n, symbols, tuple(reversed(colors)))


def format_colored(p: ColoredPermutation) -> str:
    return " ".join(f"{s}^{c}" for s, c in zip(p.symbols, p.colors))


def parse_colored(text: str, m: int) -> ColoredPermutation:
    """Parse ``"3^1 5^0 2^0 4^2 1^0"``."""
    symbols = []
    colors = []
    for token in text.split():
        s, sep, c = token.partition("^")
        if not sep:
            raise ValueError(f"token {token!r} is not of the form symbol^color")
        symbols.append(int(s))
        colors.append(int(c))
    if not symbols:
        raise ValueError("empty colored permutation")
    return ColoredPermutation(m, len(symbols), tuple(symbols), tuple(colors))
