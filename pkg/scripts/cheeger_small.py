"""Exact expansion ratio against the Cheeger window for graphs small enough to enumerate.

    python scripts/cheeger_small.py --cap 20
"""

import argparse
import time
from dataclasses import dataclass

from prefix_spectra.cayley import adjacency_matrix, build_graph, expansion_ratio_exact
from prefix_spectra.colored_group import group_order
from prefix_spectra.spectra import cheeger_bounds, jacobi_eigenvalues


@dataclass
class CheegerConfig:
    cap: int = 20
    max_m: int = 8
    max_n: int = 4


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=20, help="largest vertex count to enumerate")
    a = ap.parse_args(argv)
    cfg = CheegerConfig(cap=a.cap)

    print("m,n,vertices,h,lower,upper,seconds")
    for m in range(1, cfg.max_m + 1):
        for n in range(1, cfg.max_n + 1):
            order = group_order(m, n)
            if order > cfg.cap or order < 2:
                continue
            g = build_graph(m, n, False)
            t0 = time.perf_counter()
            h, _ = expansion_ratio_exact(g, vertex_cap=cfg.cap)
            dt = time.perf_counter() - t0
            lam2 = jacobi_eigenvalues(adjacency_matrix(g))[1]
            lo, hi = cheeger_bounds(2 * n, lam2)
            print(f"{m},{n},{order},{h},{lo:.6f},{hi:.6f},{dt:.3f}")


if __name__ == "__main__":
    main()
