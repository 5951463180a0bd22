"""Spectral gap of the undirected quotient across a grid of (m, n).

    python scripts/gap_table.py --m 3..8 --n 2..6 --out gaps.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from prefix_spectra.cli import parse_range
from prefix_spectra.spectra import jacobi_eigenvalues, quotient_matrix, spectral_gap


@dataclass
class GapConfig:
    ms: list[int]
    ns: list[int]
    directed: bool = False
    out: str | None = None


def rows(cfg: GapConfig):
    for m in cfg.ms:
        for n in cfg.ns:
            Q = quotient_matrix(m, n, cfg.directed)
            if cfg.directed:
                # M+ is not symmetric; rank eigenvalues by real part
                ev = sorted(np.linalg.eigvals(Q.to_numpy()).real, reverse=True)
                gap = ev[0] - ev[1]
            else:
                gap = spectral_gap(jacobi_eigenvalues(Q), 2 * n)
            yield m, n, f"{gap:.10f}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=parse_range, default=parse_range("3..8"))
    ap.add_argument("--n", type=parse_range, default=parse_range("2..6"))
    ap.add_argument("--directed", action="store_true")
    ap.add_argument("--out")
    a = ap.parse_args(argv)
    cfg = GapConfig(a.m, a.n, a.directed, a.out)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["m", "n", "gap"])
    w.writerows(rows(cfg))
    if cfg.out:
        fh.close()


if __name__ == "__main__":
    main()
