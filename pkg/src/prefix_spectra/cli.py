"""Command line front end: ``prefix-spectra {spectrum,verify,conjecture,export}``.

Exit codes: 0 when every asserted claim is certified, 1 on a verification
failure, 2 on usage or size errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field

from . import cayley
from .colored_group import PrefixReversal, Sign, group_order
from .partitions import check_equitable, position_partition
from .reversal_matrices import build_closed_form, build_sum, perm_matrix
from .spectra import (
    cheeger_bounds,
    exact_multiplicities,
    jacobi_eigenvalues,
    quotient_matrix,
    spectral_gap,
    spectrum_report,
)
from .suites import THEOREMS, default_threads, run_suite

log = logging.getLogger("prefix_spectra")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ms: list[int] = field(default_factory=list)
    ns: list[int] = field(default_factory=list)
    variant: str = "undirected"
    scope: str = "quotient"
    fmt: str = "json"
    out: str | None = None
    with_vectors: bool = False
    exact_cheeger: bool = False
    cap: int | None = None
    threads: int = 1
    seed: int = 0

    @property
    def directed(self) -> bool:
        return self.variant == "directed"


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"3..8"`` or ``"3,5,7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _write(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- commands -----------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig) -> int:
    reports = []
    for m in cfg.ms:
        for n in cfg.ns:
            reports.append(spectrum_report(m, n, cfg.directed, cfg.scope, cap=cfg.cap, seed=cfg.seed))
    if cfg.fmt == "json":
        docs = [r.to_dict(cfg.with_vectors) for r in reports]
        payload = docs[0] if len(docs) == 1 else docs
        _write(cfg, json.dumps(payload, indent=2) + "\n")
    elif cfg.fmt == "csv":
        rows = []
        for r in reports:
            for c in r.certificates:
                rows.append([r.m, r.n, r.variant, r.scope, c.lam, c.kind, c.residual])
        _write(cfg, _csv(rows, ["m", "n", "variant", "scope", "lambda", "kind", "residual"]))
    else:
        raise UsageError(f"spectrum supports json or csv, not {cfg.fmt}")
    return EXIT_OK if all(r.all_certified for r in reports) else EXIT_FAIL


def cmd_verify(cfg: RunConfig, theorem: str, count: int = 50) -> int:
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    ns = cfg.ns or [1]
    checks = run_suite(theorem, cfg.ms, ns, threads=cfg.threads, seed=cfg.seed, cap=cfg.cap, count=count)
    rows = [[c.theorem, c.instance, c.result, c.detail] for c in checks]
    _write(cfg, _csv(rows, ["theorem", "instance", "result", "detail"]))
    n_fail = sum(c.failed for c in checks)
    n_rec = sum(c.result == "recorded" for c in checks)
    log.info("%s: %d checks, %d failed, %d recorded", theorem, len(checks), n_fail, n_rec)
    return EXIT_FAIL if n_fail else EXIT_OK


def conjecture_rows(cfg: RunConfig, table: str) -> list[list]:
    rows: list[list] = []
    for m in cfg.ms:
        for n in cfg.ns:
            if table == "gap":
                Q = quotient_matrix(m, n, False)
                spec = jacobi_eigenvalues(Q)
                rows.append([m, n, "gap_quotient", f"{spectral_gap(spec, 2 * n):.12g}"])
                if cfg.scope == "full":
                    rep = spectrum_report(m, n, False, "full", cap=cfg.cap)
                    rows.append([m, n, "gap_full", f"{rep.gap:.12g}"])
            elif table == "multiplicity":
                Q = quotient_matrix(m, n, False)
                for lam, k in exact_multiplicities(Q, range(-2 * n, 2 * n + 1)).items():
                    rows.append([m, n, f"mult[{lam}]", k])
            elif table == "cheeger":
                d = 2 * n
                spec = jacobi_eigenvalues(quotient_matrix(m, n, False))
                # quotient lambda2 <= graph lambda2, so only the upper bound is valid here
                _, upper = cheeger_bounds(d, spec[1])
                rows.append([m, n, "h_upper_from_quotient", f"{upper:.12g}"])
                if cfg.exact_cheeger:
                    order = group_order(m, n)
                    limit = 20 if cfg.cap is None else cfg.cap
                    if order > limit:
                        rows.append([m, n, "h_exact", f"skipped: {order} vertices > {limit}"])
                        continue
                    g = cayley.build_graph(m, n, False)
                    h, _ = cayley.expansion_ratio_exact(g, vertex_cap=limit)
                    full = jacobi_eigenvalues(cayley.adjacency_matrix(g))
                    lo, hi = cheeger_bounds(d, full[1])
                    rows.append([m, n, "h_exact", str(h)])
                    rows.append([m, n, "cheeger_lower", f"{lo:.12g}"])
                    rows.append([m, n, "cheeger_upper", f"{hi:.12g}"])
                    rows.append([m, n, "h_within_bounds", str(lo - 1e-9 <= float(h) <= hi + 1e-9)])
            else:
                raise UsageError(f"unknown table {table!r}")
    return rows


def cmd_conjecture(cfg: RunConfig, table: str) -> int:
    rows = conjecture_rows(cfg, table)
    _write(cfg, _csv(rows, ["m", "n", "quantity", "value"]))
    return EXIT_OK


def _parse_generator(text: str) -> PrefixReversal:
    t = text.strip().lstrip("r")
    if not t or t[-1] not in "+-":
        raise UsageError(f"generator must look like r2+ or r3-, got {text!r}")
    return PrefixReversal(int(t[:-1]), Sign(t[-1]))


def cmd_export(cfg: RunConfig, obj: str, generator: str | None = None) -> int:
    m, n = cfg.ms[0], cfg.ns[0]
    variant = "flips_only" if cfg.directed else "both"
    if obj == "perm":
        if generator is None:
            raise UsageError("--generator is required for perm export")
        text = perm_matrix(_parse_generator(generator), m, n).to_csv()
    elif obj == "sum":
        text = build_sum(m, n, variant).to_csv()
    elif obj == "closed-form":
        text = build_closed_form(m, n, variant).to_csv()
    elif obj == "quotient":
        g = cayley.build_graph(m, n, cfg.directed, classical=m <= 2, cap=cfg.cap)
        res = check_equitable(g, position_partition(m, n))
        if not res.equitable:
            log.error("tracked partition is not equitable: %s", res.violation)
            return EXIT_FAIL
        text = res.quotient.to_csv()
    elif obj in ("graph", "adjacency"):
        g = cayley.build_graph(m, n, cfg.directed, classical=m <= 2, cap=cfg.cap)
        if obj == "adjacency":
            text = cayley.adjacency_csv(g)
        elif cfg.fmt == "dot":
            text = cayley.to_dot(g)
        else:
            text = cayley.edge_list_csv(g)
    else:
        raise UsageError(f"unknown export object {obj!r}")
    _write(cfg, text)
    return EXIT_OK


# --- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=parse_range, default=None, help="m value or range, e.g. 3..8")
    common.add_argument("--n", type=parse_range, default=None, help="n value or range, e.g. 2..6")
    common.add_argument("--variant", choices=["directed", "undirected"], default="undirected")
    common.add_argument("--scope", choices=["quotient", "full"], default="quotient")
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "dot"], default=None)
    common.add_argument("--out", default=None, help="output path (stdout when omitted)")
    common.add_argument("--with-vectors", action="store_true")
    common.add_argument("--exact-cheeger", action="store_true")
    common.add_argument("--cap", type=int, default=None, help="vertex cap (env PREFIX_SPECTRA_CAP)")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="prefix-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="certify claimed eigenvalues")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--theorem", required=True)
    p.add_argument("--count", type=int, default=50, help="random instances (silvester)")
    p = sub.add_parser("conjecture", parents=[common], help="evidence tables")
    p.add_argument("--table", choices=["gap", "multiplicity", "cheeger"], required=True)
    p = sub.add_parser("export", parents=[common], help="dump matrices and graphs")
    p.add_argument("--object", dest="obj", required=True,
                   choices=["perm", "sum", "closed-form", "quotient", "graph", "adjacency"])
    p.add_argument("--generator", default=None, help="e.g. r2+ (perm export)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    default_fmt = {"spectrum": "json", "export": "csv"}.get(args.command, "csv")
    try:
        if args.m is None or (args.n is None and args.command != "verify"):
            raise UsageError("--m and --n are required")
        cfg = RunConfig(
            command=args.command,
            ms=args.m,
            ns=args.n or [],
            variant=args.variant,
            scope=args.scope,
            fmt=args.fmt or default_fmt,
            out=args.out,
            with_vectors=args.with_vectors,
            exact_cheeger=args.exact_cheeger,
            cap=args.cap,
            threads=args.threads if args.threads is not None else default_threads(),
            seed=args.seed,
        )
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.theorem, args.count)
        if args.command == "conjecture":
            return cmd_conjecture(cfg, args.table)
        return cmd_export(cfg, args.obj, args.generator)
    except (UsageError, cayley.GraphTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
