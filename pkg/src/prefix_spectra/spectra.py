"""Eigenvalues, exact eigenvalue certificates and the explicit eigenvector families.

Containment claims are only ever backed by an integer vector ``v != 0`` with
``M v == lam v`` checked in exact arithmetic.  Floating point (cyclic Jacobi)
is used for full symmetric spectra, gaps and Cheeger bounds.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .exact import ExactMatrix, exact_nullity
from .reversal_matrices import build_sum, classical_sum

INT_TOL = 1e-8
JACOBI_LIMIT = 400
MULT_TOL = 1e-6

Kind = Literal["exact-kernel", "float-residual", "none"]


class JacobiNotConverged(RuntimeError):
    pass


# --- numerical eigenvalues ----------------------------------------------------

def _off_norm(a: np.ndarray) -> float:
    # summing the off-diagonal squares directly avoids the cancellation in
    # ||A||^2 - ||diag A||^2, which stalls near sqrt(eps) * ||A||
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(A, *, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending."""
    if isinstance(A, ExactMatrix):
        if not A.is_symmetric():
            raise ValueError("Jacobi needs a symmetric matrix")
        a = A.to_numpy(float)
    else:
        a = np.array(A, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.allclose(a, a.T, rtol=0, atol=1e-12):
            raise ValueError("Jacobi needs a symmetric matrix")
    k = a.shape[0]
    fro = np.linalg.norm(a)
    if fro == 0.0:
        return [0.0] * k
    target = tol * fro
    for _ in range(max_sweeps):
        off = _off_norm(a)
        if off < target:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        off = _off_norm(a)
        if off >= target:
            raise JacobiNotConverged(f"off-diagonal norm {off:.3e} after {max_sweeps} sweeps")
    return sorted((float(x) for x in np.diag(a)), reverse=True)


# --- exact certificates -------------------------------------------------------

@dataclass
class EigenCertificate:
    lam: int
    kind: Kind
    vector: list | None = None
    residual: float = 0.0

    @property
    def ok(self) -> bool:
        return self.kind != "none"

    def to_dict(self, with_vectors: bool = False) -> dict:
        d = {"lambda": self.lam, "kind": self.kind, "residual": self.residual}
        if with_vectors:
            d["vector"] = self.vector
        return d


def verify_eigenpair(M: ExactMatrix, lam: int, v: Sequence[int]) -> bool:
    if len(v) != M.cols:
        raise ValueError(f"vector length {len(v)} != {M.cols}")
    if not any(v):
        raise ValueError("zero vector is not an eigenvector")
    return M.matvec(v) == [lam * x for x in v]


def certify(M: ExactMatrix, lam: int, **kw) -> EigenCertificate:
    """Exact certificate that ``lam`` is an eigenvalue of the integer matrix ``M``."""
    nullity, v = exact_nullity(M.shift_diagonal(lam), **kw)
    if nullity > 0 and v is not None and verify_eigenpair(M, lam, v):
        return EigenCertificate(lam, "exact-kernel", v, 0.0)
    return EigenCertificate(lam, "none")


def exact_multiplicities(M: ExactMatrix, candidates: Sequence[int]) -> dict[int, int]:
    """Geometric multiplicity ``nullity(lam I - M)`` for each integer candidate."""
    out = {}
    for lam in candidates:
        nullity, _ = exact_nullity(M.shift_diagonal(lam))
        if nullity:
            out[lam] = nullity
    return out


def numeric_multiplicities(spectrum: Sequence[float], tol: float = MULT_TOL) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in spectrum:
        r = round(x)
        if abs(x - r) < tol:
            out[r] = out.get(r, 0) + 1
    return dict(sorted(out.items()))


# --- gap and Cheeger ----------------------------------------------------------

def spectral_gap(spectrum: Sequence[float], d: int | None = None) -> float:
    if not spectrum:
        raise ValueError("empty spectrum")
    if any(a < b for a, b in zip(spectrum, spectrum[1:])):
        raise ValueError("spectrum must be sorted in descending order")
    if d is not None and abs(spectrum[0] - d) > INT_TOL:
        raise ValueError(f"largest eigenvalue {spectrum[0]} is not the degree {d}")
    if len(spectrum) == 1:
        return 0.0
    return spectrum[0] - spectrum[1]


def cheeger_bounds(d: float, lambda2: float) -> tuple[float, float]:
    """``((d - l2)/2, sqrt(2 d (d - l2)))`` for a d-regular graph."""
    if lambda2 > d + INT_TOL:
        raise ValueError(f"second eigenvalue {lambda2} exceeds degree {d}")
    slack = max(0.0, d - lambda2)
    return slack / 2.0, math.sqrt(2.0 * d * slack)


# --- claimed eigenvalue sets --------------------------------------------------

def claimed_undirected(m: int, n: int) -> list[int]:
    """Even integers of [0, 2n], minus 2*floor(n/2) unless m = 0 mod 4."""
    lams = list(range(0, 2 * n + 1, 2))
    if m % 4 != 0:
        lams.remove(2 * (n // 2))
    return lams


def claimed_directed(m: int, n: int) -> list[int]:
    return [x for x in range(0, n + 1) if x != n // 2]


def claimed_classical(m: int, n: int) -> list[int]:
    if m == 1:
        return [x for x in range(-1, n) if x != n // 2 - 1]
    if m == 2:
        return [x for x in range(0, n + 1) if x != n // 2]
    raise ValueError("classical sets exist only for m = 1, 2")


def claimed_set(m: int, n: int, directed: bool) -> list[int]:
    if m <= 2:
        return claimed_classical(m, n)
    return claimed_directed(m, n) if directed else claimed_undirected(m, n)


def quotient_matrix(m: int, n: int, directed: bool) -> ExactMatrix:
    """``M+(m,n)`` / ``M+-(m,n)``; for m <= 2 the pancake / burnt pancake quotient."""
    if m <= 2:
        return classical_sum(m, n)
    return build_sum(m, n, "flips_only" if directed else "both")


# --- eigenvector families -----------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    directed: bool
    label: str

    def __str__(self):
        return self.name


FAMILIES = {
    f.name: f
    for f in [
        Family("U-ones", False, "2n, all ones"),
        Family("U-n-i", False, "2(n-i), 1 <= i < floor(n/2)"),
        Family("U-even", False, "2(l-i), n = 2l, 1 <= i <= l"),
        Family("U-odd-top", False, "2(l+1), n = 2l+1"),
        Family("U-odd", False, "2(l+1-i), n = 2l+1, 1 <= i <= l+1"),
        Family("D-ones", True, "n, all ones"),
        Family("D-n-i", True, "n-i, 1 <= i < floor(n/2)"),
        Family("D-even", True, "l-i, n = 2l, 1 <= i <= l"),
        Family("D-odd-top", True, "l+1, n = 2l+1"),
        Family("D-odd", True, "l-i, n = 2l+1, 1 <= i <= l"),
    ]
}


class FormulaInapplicable(Exception):
    """The printed block pattern cannot be instantiated (negative length or zero vector)."""


class OutOfRange(ValueError):
    pass


def _blocks(m: int, *parts: tuple[int, int]) -> list[int]:
    """Concatenate ``(value, count)`` blocks, each count a number of length-m runs."""
    out: list[int] = []
    for value, count in parts:
        if count < 0:
            raise FormulaInapplicable(f"block of {value}s has negative length {count}*m")
        out.extend([value] * (count * m))
    return out


def family_parameters(family: str, n: int, worked: bool = False) -> list[int | None]:
    """The parameter values ``i`` the family is stated for at this n.

    The ``n-i`` families are stated for ``i < floor(n/2)``; their worked check
    runs up to ``i = floor(n/2)``, which ``worked=True`` admits.
    """
    half = n // 2
    l = n // 2
    even = n % 2 == 0
    kind = family.split("-", 1)[1]
    if kind == "ones":
        return [None]
    if kind == "n-i":
        return list(range(1, half + 1 if worked else half))
    if kind == "even":
        return list(range(1, l + 1)) if even else []
    if kind == "odd-top":
        return [None] if not even and l >= 1 else []
    if kind == "odd":
        if even or l < 1:
            return []
        return list(range(1, l + 2)) if family.startswith("U") else list(range(1, l + 1))
    raise KeyError(family)


def paper_eigenvector(m: int, n: int, family: str, i: int | None = None) -> tuple[int, list[int]]:
    """Claimed eigenvalue and block-patterned vector for one family member.

    Raises :class:`OutOfRange` for a parameter outside the family's (worked)
    range and
    :class:`FormulaInapplicable` when the pattern cannot be built.
    """
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}")
    if i not in family_parameters(family, n, worked=True):
        raise OutOfRange(f"{family}: parameter {i} not in range for n={n}")
    undirected = family.startswith("U")
    scale = 2 if undirected else 1
    l = n // 2
    kind = family.split("-", 1)[1]
    if kind == "ones":
        lam, v = scale * n, [1] * (m * n)
    elif kind == "n-i":
        lam = scale * (n - i)
        v = _blocks(m, (0, i), (-1, n - 2 * i), (n - 2 * i, 1), (0, i - 1))
    elif kind == "even":
        lam = scale * (l - i)
        v = _blocks(m, (0, l - i), (-2 * i + 1, 1), (1, 2 * i - 1), (0, l - i))
    elif kind == "odd-top":
        lam = scale * (l + 1)
        v = _blocks(m, (0, l), (-1, 1), (1, 1), (0, l - 1))
    else:
        lam = 2 * (l + 1 - i) if undirected else l - i
        v = _blocks(m, (0, l - i), (-2 * i, 1), (1, 2 * i), (0, l - i))
    if len(v) != m * n:
        raise FormulaInapplicable(f"pattern has length {len(v)}, expected {m * n}")
    if not any(v):
        raise FormulaInapplicable("pattern is the zero vector")
    return lam, v


@dataclass
class AuditEntry:
    family: str
    m: int
    n: int
    i: int | None
    status: str  # verified | wrong-eigenvalue | not-eigenvector | formula-inapplicable
    claimed: int | None = None
    actual: int | None = None
    detail: str = ""


def audit_family_member(m: int, n: int, family: str, i: int | None) -> AuditEntry:
    M = quotient_matrix(m, n, FAMILIES[family].directed)
    try:
        lam, v = paper_eigenvector(m, n, family, i)
    except FormulaInapplicable as exc:
        return AuditEntry(family, m, n, i, "formula-inapplicable", detail=str(exc))
    if verify_eigenpair(M, lam, v):
        return AuditEntry(family, m, n, i, "verified", lam, lam)
    # The printed vector may still be an eigenvector for a different eigenvalue.
    Mv = M.matvec(v)
    j = next(k for k, x in enumerate(v) if x)
    mu, rem = divmod(Mv[j], v[j])
    if rem == 0 and Mv == [mu * x for x in v]:
        return AuditEntry(family, m, n, i, "wrong-eigenvalue", lam, mu)
    return AuditEntry(family, m, n, i, "not-eigenvector", lam)


def audit_families(ms: Sequence[int], ns: Sequence[int]) -> list[AuditEntry]:
    out = []
    for m in ms:
        for n in ns:
            for name in FAMILIES:
                for i in family_parameters(name, n):
                    out.append(audit_family_member(m, n, name, i))
    return out


# --- reports ------------------------------------------------------------------

@dataclass
class SpectrumReport:
    m: int
    n: int
    variant: str
    scope: str
    claimed: list[int]
    certificates: list[EigenCertificate]
    spectrum: list[float] = field(default_factory=list)
    gap: float | None = None
    cheeger: tuple[float, float] | None = None
    multiplicities: dict[int, int] = field(default_factory=dict)
    multiplicity_kind: str = "exact"
    runtime_ms: float = 0.0

    @property
    def all_certified(self) -> bool:
        return all(c.ok for c in self.certificates) and len(self.certificates) == len(self.claimed)

    def to_dict(self, with_vectors: bool = False) -> dict:
        return {
            "params": {"m": self.m, "n": self.n, "variant": self.variant, "scope": self.scope},
            "claimed": self.claimed,
            "certificates": [c.to_dict(with_vectors) for c in self.certificates],
            "spectrum": self.spectrum,
            "gap": self.gap,
            "cheeger": list(self.cheeger) if self.cheeger is not None else None,
            "multiplicities": {str(k): v for k, v in self.multiplicities.items()},
            "multiplicity_kind": self.multiplicity_kind,
            "runtime_ms": self.runtime_ms,
        }


def spectrum_report(
    m: int,
    n: int,
    directed: bool,
    scope: str = "quotient",
    *,
    cap: int | None = None,
    seed: int = 0,
) -> SpectrumReport:
    """Certify the claimed integer eigenvalues at quotient or full-graph scope.

    At full scope each quotient kernel vector is lifted through the tracked
    partition and re-verified against the full adjacency matrix.
    """
    from .cayley import GraphTooLarge, adjacency_matrix, build_graph, graph_matvec
    from .partitions import lift_eigenvector, position_partition

    start = time.perf_counter()
    variant = "directed" if directed else "undirected"
    Q = quotient_matrix(m, n, directed)
    d = Q.row_sums()[0]
    claimed = claimed_set(m, n, directed)
    certs = [certify(Q, lam, seed=seed) for lam in claimed]
    spectrum: list[float] = []
    mults: dict[int, int]
    mult_kind = "exact"

    if scope == "quotient":
        M = Q
        mults = exact_multiplicities(Q, range(-d, d + 1))
    elif scope == "full":
        g = build_graph(m, n, directed, classical=m <= 2, cap=cap)
        p = position_partition(m, n)
        lifted = []
        for c in certs:
            if c.ok:
                w = lift_eigenvector(p, c.vector)
                ok = graph_matvec(g, w) == [c.lam * x for x in w]
                lifted.append(EigenCertificate(c.lam, "exact-kernel", w) if ok else EigenCertificate(c.lam, "none"))
            else:
                lifted.append(c)
        certs = lifted
        mults = {}
        if not directed:
            if g.vertex_count > JACOBI_LIMIT:
                raise GraphTooLarge(
                    f"{g.vertex_count} vertices is above the dense eigensolver limit of {JACOBI_LIMIT}"
                )
            M = adjacency_matrix(g)
    else:
        raise ValueError(f"unknown scope {scope!r}")

    gap = cheeger = None
    if not directed:
        spectrum = jacobi_eigenvalues(M)
        gap = spectral_gap(spectrum, d)
        cheeger = cheeger_bounds(d, spectrum[1] if len(spectrum) > 1 else spectrum[0])
        if scope == "full":
            mults = numeric_multiplicities(spectrum)
            mult_kind = "numeric"
    runtime = (time.perf_counter() - start) * 1000.0
    return SpectrumReport(m, n, variant, scope, claimed, certs, spectrum, gap, cheeger, mults, mult_kind, runtime)
