"""Equitable partitions of the Cayley graphs and their quotient matrices.

The partition used throughout tracks where the symbol 1 sits in a vertex's
one-line notation and which color it carries: vertex ``pi`` goes to the class
of the decorated entry ``j^e_j`` with ``pi_j = 1``.  A reversal ``r`` moves
that entry exactly as it moves decorated symbols, so the class of ``r pi`` is
``r(class of pi)`` and out-neighbor counts between classes are the entries of
``sum_r P(r)``.  In matrix form: ``A @ M_P == M_P @ B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import colored_group as cg
from .cayley import CayleyGraph
from .exact import ExactMatrix
from .reversal_matrices import EntryIndex, entry_position


@dataclass(frozen=True)
class VertexPartition:
    class_of: tuple[int, ...]
    k: int

    def __post_init__(self):
        sizes = self.class_sizes
        if any(s == 0 for s in sizes):
            raise ValueError("partition has an empty class")

    @property
    def class_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for c in self.class_of:
            if not 0 <= c < self.k:
                raise ValueError(f"class index {c} outside [0, {self.k - 1}]")
            sizes[c] += 1
        return sizes

    def members(self, c: int) -> list[int]:
        return [v for v, cls in enumerate(self.class_of) if cls == c]


@dataclass(frozen=True)
class EquitableCheck:
    equitable: bool
    quotient: ExactMatrix | None = None
    # (class, vertex, target class) of the first vertex disagreeing with its class representative
    violation: tuple[int, int, int] | None = None


def tracked_class(p: cg.ColoredPermutation) -> int:
    j = p.symbols.index(1)
    return entry_position(EntryIndex(j + 1, p.colors[j]), p.m)


def position_partition(m: int, n: int) -> VertexPartition:
    return VertexPartition(tuple(tracked_class(p) for p in cg.enumerate_group(m, n)), m * n)


def characteristic_matrix(p: VertexPartition) -> ExactMatrix:
    return ExactMatrix([[1 if c == j else 0 for j in range(p.k)] for c in p.class_of])


def _class_counts(g: CayleyGraph, p: VertexPartition, u: int) -> list[int]:
    counts = [0] * p.k
    for w in g.adjacency[u]:
        counts[p.class_of[w]] += 1
    return counts


def check_equitable(g: CayleyGraph, p: VertexPartition) -> EquitableCheck:
    """Verify every vertex of a class sees the same (out-)neighbor counts."""
    if len(p.class_of) != g.vertex_count:
        raise ValueError("partition and graph have different vertex sets")
    reps: list[list[int] | None] = [None] * p.k
    for u in range(g.vertex_count):
        c = p.class_of[u]
        counts = _class_counts(g, p, u)
        if reps[c] is None:
            reps[c] = counts
            continue
        if counts != reps[c]:
            bad = next(j for j in range(p.k) if counts[j] != reps[c][j])
            return EquitableCheck(False, violation=(c, u, bad))
    return EquitableCheck(True, quotient=ExactMatrix(reps))


def godsil_orientation(A: ExactMatrix, MP: ExactMatrix, B: ExactMatrix) -> str | None:
    """Which of ``A M = M B`` / ``A^T M = M B`` holds exactly (first match)."""
    rhs = MP @ B
    if A @ MP == rhs:
        return "A@M == M@B"
    if A.T @ MP == rhs:
        return "A.T@M == M@B"
    return None


def lift_eigenvector(p: VertexPartition, v: Sequence[int]) -> list[int]:
    if len(v) != p.k:
        raise ValueError(f"vector has length {len(v)}, partition has {p.k} classes")
    return [v[c] for c in p.class_of]


def find_class_relabeling(B: ExactMatrix, target: ExactMatrix) -> list[int] | None:
    """Search for a permutation ``s`` with ``B[s[i]][s[j]] == target[i][j]``.

    Only used as a fallback when the fixed class order does not already give
    ``target``; backtracking over a k-class quotient.
    """
    k = B.rows
    if target.shape != B.shape:
        return None
    perm: list[int] = []
    used = [False] * k

    def ok(i: int, cand: int) -> bool:
        if B[cand, cand] != target[i, i]:
            return False
        return all(B[perm[j], cand] == target[j, i] and B[cand, perm[j]] == target[i, j] for j in range(i))

    def search(i: int) -> bool:
        if i == k:
            return True
        for cand in range(k):
            if not used[cand] and ok(i, cand):
                used[cand] = True
                perm.append(cand)
                if search(i + 1):
                    return True
                perm.pop()
                used[cand] = False
        return False

    return perm if search(0) else None
