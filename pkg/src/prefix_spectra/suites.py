"""Batch verification suites used by the CLI, the scripts and the acceptance tests.

Each suite returns a list of :class:`Check` rows sorted by instance, so output
does not depend on how many workers ran it.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import circulant as circ
from .cayley import GraphTooLarge, adjacency_matrix, build_graph, graph_matvec, vertex_cap
from .exact import bareiss_det
from .partitions import (
    characteristic_matrix,
    check_equitable,
    godsil_orientation,
    lift_eigenvector,
    position_partition,
)
from .reversal_matrices import build_closed_form, build_sum
from .spectra import (
    audit_families,
    certify,
    claimed_classical,
    claimed_directed,
    claimed_undirected,
    quotient_matrix,
)

DENSE_LIMIT = 400

THEOREMS = (
    "structure",
    "circulant-singularity",
    "silvester",
    "equitable",
    "undirected-spectrum",
    "directed-spectrum",
    "eigenvector-families",
    "dalfo-fiol",
)


@dataclass(frozen=True, order=True)
class Check:
    theorem: str
    instance: str
    result: str  # pass | fail | recorded
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.result == "fail"


def default_threads() -> int:
    return os.cpu_count() or 1


def run_jobs(fn: Callable, jobs: Sequence, threads: int = 1) -> list:
    if threads <= 1 or len(jobs) < 2:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def _flatten(rows: Iterable[list[Check]]) -> list[Check]:
    return sorted(c for row in rows for c in row)


# --- individual jobs (module-level so they pickle) ----------------------------

def structure_job(m: int, n: int) -> list[Check]:
    out = []
    for v in ("both", "flips_only"):
        ok = build_sum(m, n, v) == build_closed_form(m, n, v)
        out.append(Check("structure", f"m={m} n={n} {v}", "pass" if ok else "fail"))
    return out


def singularity_job(m: int) -> list[Check]:
    det_pm = circ.circ_det(circ.c_pm(m))
    det_plus = circ.circ_det(circ.c_plus(m))
    singular = det_pm == 0
    expected = m % 4 == 0
    out = [
        Check(
            "circulant-singularity",
            f"C+-({m:02d})",
            "pass" if singular == expected else "fail",
            f"det={det_pm} singular={singular}",
        ),
        Check(
            "circulant-singularity",
            f"C+({m:02d})",
            "pass" if det_plus != 0 else "fail",
            f"det={det_plus}",
        ),
    ]
    return out


def silvester_instances(count: int, ms: Sequence[int], ns: Sequence[int], seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.choice(list(ms))
        n = rng.choice(list(ns))
        grid = [
            [circ.CirculantMatrix(tuple(rng.randint(-3, 3) for _ in range(m))) for _ in range(n)]
            for _ in range(n)
        ]
        out.append(grid)
    return out


def silvester_job(idx: int, grid) -> list[Check]:
    m, n = grid[0][0].order, len(grid)
    ring = circ.silvester_block_det(grid)
    direct = bareiss_det(circ.expand_blocks(grid))
    return [
        Check(
            "silvester",
            f"#{idx:03d} m={m} n={n}",
            "pass" if ring == direct else "fail",
            f"ring={ring} direct={direct}",
        )
    ]


def equitable_job(m: int, n: int, cap: int) -> list[Check]:
    out = []
    for directed in (False, True):
        tag = f"m={m} n={n} {'directed' if directed else 'undirected'}"
        try:
            g = build_graph(m, n, directed, classical=m <= 2, cap=cap)
        except GraphTooLarge as exc:
            out.append(Check("equitable", tag, "recorded", str(exc)))
            continue
        p = position_partition(m, n)
        res = check_equitable(g, p)
        if not res.equitable:
            out.append(Check("equitable", tag, "fail", f"violation {res.violation}"))
            continue
        Q = quotient_matrix(m, n, directed)
        if g.vertex_count <= DENSE_LIMIT:
            orient = godsil_orientation(adjacency_matrix(g), characteristic_matrix(p), res.quotient)
        else:
            # equitability with B as the class-count matrix is the same identity
            orient = "A@M == M@B"
        same = res.quotient == Q
        lifted = 0
        bad = []
        claimed = claimed_directed(m, n) if directed else claimed_undirected(m, n)
        if m <= 2:
            claimed = claimed_classical(m, n)
        for lam in claimed:
            c = certify(Q, lam)
            if not c.ok:
                bad.append(lam)
                continue
            w = lift_eigenvector(p, c.vector)
            if graph_matvec(g, w) == [lam * x for x in w]:
                lifted += 1
            else:
                bad.append(lam)
        ok = same and orient == "A@M == M@B" and not bad
        out.append(
            Check(
                "equitable",
                tag,
                "pass" if ok else "fail",
                f"quotient==sumP:{same} orientation:{orient} lifted:{lifted} failed:{bad}",
            )
        )
    return out


def spectrum_job(m: int, n: int, directed: bool) -> list[Check]:
    theorem = "directed-spectrum" if directed else "undirected-spectrum"
    Q = quotient_matrix(m, n, directed)
    claimed = claimed_directed(m, n) if directed else claimed_undirected(m, n)
    out = []
    for lam in claimed:
        ok = certify(Q, lam).ok
        out.append(Check(theorem, f"m={m} n={n} lambda={lam:+d}", "pass" if ok else "fail"))
    return out


def classical_job(m: int, n: int) -> list[Check]:
    Q = quotient_matrix(m, n, True)
    return [
        Check("dalfo-fiol", f"m={m} n={n} lambda={lam:+d}", "pass" if certify(Q, lam).ok else "fail")
        for lam in claimed_classical(m, n)
    ]


def families_job(m: int, n: int) -> list[Check]:
    out = []
    for e in audit_families([m], [n]):
        inst = f"m={m} n={n} {e.family} i={e.i if e.i is not None else '-'}"
        if e.status == "verified":
            out.append(Check("eigenvector-families", inst, "pass", f"lambda={e.claimed}"))
        elif e.status == "formula-inapplicable":
            out.append(Check("eigenvector-families", inst, "recorded", e.detail))
        elif e.status == "wrong-eigenvalue":
            out.append(
                Check("eigenvector-families", inst, "fail", f"claimed {e.claimed}, vector has eigenvalue {e.actual}")
            )
        else:
            out.append(Check("eigenvector-families", inst, "fail", f"claimed {e.claimed}, not an eigenvector"))
    return out


# --- suite entry point --------------------------------------------------------

def run_suite(
    theorem: str,
    ms: Sequence[int],
    ns: Sequence[int],
    *,
    threads: int = 1,
    seed: int = 0,
    cap: int | None = None,
    count: int = 50,
) -> list[Check]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    pairs = [(m, n) for m in ms for n in ns]
    if theorem == "structure":
        return _flatten(run_jobs(structure_job, pairs, threads))
    if theorem == "circulant-singularity":
        return _flatten(run_jobs(singularity_job, [(m,) for m in ms], threads))
    if theorem == "silvester":
        grids = silvester_instances(count, ms, ns, seed)
        return _flatten(run_jobs(silvester_job, list(enumerate(grids)), threads))
    if theorem == "equitable":
        limit = vertex_cap(cap)
        jobs = [(m, n, limit) for m, n in pairs]
        return _flatten(run_jobs(equitable_job, jobs, threads))
    if theorem in ("undirected-spectrum", "directed-spectrum"):
        directed = theorem == "directed-spectrum"
        jobs = [(m, n, directed) for m, n in pairs if m > 2]
        return _flatten(run_jobs(spectrum_job, jobs, threads))
    if theorem == "eigenvector-families":
        return _flatten(run_jobs(families_job, [p for p in pairs if p[0] > 2], threads))
    jobs = [(m, n) for m, n in pairs if m in (1, 2)]
    return _flatten(run_jobs(classical_job, jobs, threads))

