"""Exact spectral toolkit for prefix-reversal graphs over colored permutations."""

from .colored_group import (
    ColoredPermutation,
    PrefixReversal,
    Sign,
    apply_flip,
    apply_flop,
    compose,
    identity,
    inverse,
    rank,
    unrank,
)
from .exact import ExactMatrix, exact_nullity

__version__ = "0.1.0"
