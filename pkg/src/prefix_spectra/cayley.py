"""Prefix-reversal Cayley graphs over S(m, n).

Vertices are group ranks; the edge for vertex ``v`` and generator ``r`` goes
to ``r v`` (the reversal applied to ``v``).  Each vertex keeps one neighbor per
generator, in generator order, so multi-edges and self-loops are counted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import colored_group as cg
from .colored_group import PrefixReversal
from .exact import ExactMatrix
from .reversal_matrices import classical_generators

DEFAULT_CAP = 100_000
CAP_ENV = "PREFIX_SPECTRA_CAP"


class GraphTooLarge(ValueError):
    pass


def vertex_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


@dataclass(frozen=True)
class CayleyGraph:
    m: int
    n: int
    directed: bool
    generators: tuple[PrefixReversal, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def degree(self) -> int:
        return len(self.generators)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def in_degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for nbrs in self.adjacency:
            for w in nbrs:
                deg[w] += 1
        return deg


def generator_set(m: int, n: int, directed: bool, classical: bool = False) -> list[PrefixReversal]:
    if classical:
        return classical_generators(m, n)
    return cg.flips(n) if directed else cg.all_reversals(n)


def build_graph(
    m: int,
    n: int,
    directed: bool,
    *,
    classical: bool = False,
    cap: int | None = None,
) -> CayleyGraph:
    """Build ``P(m,n)`` (directed) or the undirected graph on ``R+-_n``.

    ``classical=True`` swaps in the pancake / burnt pancake generator sets for
    m = 1, 2 (flips only, and no length-1 flip when m = 1).
    """
    order = cg.group_order(m, n)
    limit = vertex_cap(cap)
    if order > limit:
        raise GraphTooLarge(f"S({m},{n}) has {order} elements, above the cap of {limit}")
    gens = tuple(generator_set(m, n, directed, classical))
    adjacency = []
    for v in cg.enumerate_group(m, n):
        adjacency.append(tuple(cg.rank(cg.apply(r, v)) for r in gens))
    return CayleyGraph(m, n, directed, gens, tuple(adjacency))


def adjacency_matrix(g: CayleyGraph) -> ExactMatrix:
    size = g.vertex_count
    rows = [[0] * size for _ in range(size)]
    for u, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            rows[u][w] += 1
    return ExactMatrix(rows)


def graph_matvec(g: CayleyGraph, v) -> list[int]:
    """``A @ v`` straight from the adjacency lists."""
    if len(v) != g.vertex_count:
        raise ValueError("vector length does not match vertex count")
    return [sum(v[w] for w in nbrs) for nbrs in g.adjacency]


def edge_count(g: CayleyGraph) -> int:
    """Edges counted with multiplicity; undirected edges are counted once."""
    total = g.vertex_count * g.degree
    return total if g.directed else total // 2


def multi_edge_audit(g: CayleyGraph) -> dict:
    """Count vertices whose generator images collide, and self-loops."""
    collisions = 0
    loops = 0
    for u, nbrs in enumerate(g.adjacency):
        if len(set(nbrs)) < len(nbrs):
            collisions += 1
        loops += sum(1 for w in nbrs if w == u)
    return {"m": g.m, "n": g.n, "vertices_with_collisions": collisions, "self_loops": loops}


def _require_undirected(g: CayleyGraph):
    if g.directed:
        raise ValueError("boundary/expansion are defined for undirected graphs only")


def boundary_size(g: CayleyGraph, S: Iterable[int]) -> int:
    _require_undirected(g)
    inside = set(S)
    return sum(1 for u in inside for w in g.adjacency[u] if w not in inside)


def expansion_ratio_exact(g: CayleyGraph, vertex_cap: int = 20) -> tuple[Fraction, frozenset[int]]:
    """Exhaustive ``min |dS|/|S|`` over nonempty S with ``|S| <= |V|/2``.

    Walks all subsets in Gray-code order, updating the boundary by one vertex
    at a time.
    """
    _require_undirected(g)
    V = g.vertex_count
    if V > vertex_cap:
        raise GraphTooLarge(f"{V} vertices exceeds exhaustive cap {vertex_cap}; use Cheeger bounds")
    nbrs = [[w for w in g.adjacency[u] if w != u] for u in range(V)]
    half = V // 2
    inside = [False] * V
    size = 0
    boundary = 0
    best_num, best_den = -1, 1
    best_mask = 0
    mask = 0
    for k in range(1, 2**V):
        v = (k & -k).bit_length() - 1
        to_inside = sum(1 for w in nbrs[v] if inside[w])
        if inside[v]:
            boundary -= len(nbrs[v]) - 2 * to_inside
            inside[v] = False
            size -= 1
        else:
            boundary += len(nbrs[v]) - 2 * to_inside
            inside[v] = True
            size += 1
        mask ^= 1 << v
        if 0 < size <= half and (best_num < 0 or boundary * best_den < best_num * size):
            best_num, best_den, best_mask = boundary, size, mask
    witness = frozenset(i for i in range(V) if best_mask >> i & 1)
    return Fraction(best_num, best_den), witness


# --- exports ------------------------------------------------------------------

def _edge_records(g: CayleyGraph):
    """Directed graphs: every generator edge. Undirected: one record per edge,
    taken from the flips (flop edges are the same edges reversed)."""
    for u, nbrs in enumerate(g.adjacency):
        for r, w in zip(g.generators, nbrs):
            if g.directed or r.sign is cg.Sign.FLIP:
                yield u, w, r.label


def edge_list_csv(g: CayleyGraph) -> str:
    lines = ["src,dst,generator"]
    lines += [f"{u},{w},{label}" for u, w, label in _edge_records(g)]
    return "\n".join(lines) + "\n"


def adjacency_csv(g: CayleyGraph) -> str:
    return adjacency_matrix(g).to_csv()


def to_dot(g: CayleyGraph, labels: bool = True) -> str:
    kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    name = f"P_{g.m}_{g.n}" if g.directed else f"PP_{g.m}_{g.n}"
    out = [f"{kind} {name} {{"]
    if labels:
        for v in range(g.vertex_count):
            out.append(f'  {v} [label="{cg.format_colored(cg.unrank(v, g.m, g.n))}"];')
    for u, w, label in _edge_records(g):
        out.append(f'  {u} {arrow} {w} [label="{label}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def degree_profile(g: CayleyGraph, v: int) -> tuple[int, ...]:
    """Sorted multiplicities of the neighbor multiset of ``v``."""
    counts: dict[int, int] = {}
    for w in g.adjacency[v]:
        counts[w] = counts.get(w, 0) + 1
    return tuple(sorted(counts.values()))


def is_symmetric_relation(g: CayleyGraph) -> bool:
    return adjacency_matrix(g).is_symmetric()

