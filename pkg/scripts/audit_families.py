"""Instantiate every printed eigenvector family and report what it really is.

    python scripts/audit_families.py --m 3,4 --n 2..6
"""

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass

from prefix_spectra.cli import parse_range
from prefix_spectra.spectra import audit_families


@dataclass
class AuditConfig:
    ms: list[int]
    ns: list[int]
    only_failures: bool = False


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=parse_range, default=parse_range("3,4"))
    ap.add_argument("--n", type=parse_range, default=parse_range("2..6"))
    ap.add_argument("--only-failures", action="store_true")
    a = ap.parse_args(argv)
    cfg = AuditConfig(a.m, a.n, a.only_failures)

    entries = audit_families(cfg.ms, cfg.ns)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["family", "m", "n", "i", "status", "claimed", "actual", "detail"])
    for e in entries:
        if cfg.only_failures and e.status == "verified":
            continue
        w.writerow([e.family, e.m, e.n, "" if e.i is None else e.i, e.status, e.claimed, e.actual, e.detail])
    print(dict(Counter(e.status for e in entries)), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
