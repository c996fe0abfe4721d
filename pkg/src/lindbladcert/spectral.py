"""Eigen-analysis of generator superoperators: spectrum classification,
steady states, the dissipative gap, and spectral certification checks.

Eigenvalues are classified against a scale-aware tolerance as

    zero       |lambda| <= tol
    imaginary  |Re lambda| <= tol < |lambda|
    decaying   otherwise

and the dissipative gap is -max Re lambda over the decaying class.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .liouvillian import ADJOINT, FORWARD, LindbladModel, Superoperator, to_superoperator, unvec
from .operators import PsdWitness, dag, default_tol, frob, is_psd
from .report import CheckResult

CLASS_ZERO = "zero"
CLASS_IMAGINARY = "imaginary"
CLASS_DECAYING = "decaying"


class CertificationError(RuntimeError):
    """A structural property expected of every Lindblad generator failed."""


@dataclass(frozen=True)
class SteadyCandidate:
    """Hermitized zero-eigenvector of a forward generator, with PSD evidence.

    Candidates are trace-normalized when the trace is resolvable, but never
    positivity-projected: degenerate zero eigenspaces legitimately contain
    non-positive basis elements, and hiding that would mask structure.
    """

    operator: np.ndarray
    eigenvalue: complex
    psd: PsdWitness
    trace_normalized: bool


@dataclass
class SpectrumReport:
    """Full spectrum of a superoperator with classification and diagnostics."""

    eigenvalues: np.ndarray
    classes: list[str]
    gap: float | None
    steady_candidates: list[SteadyCandidate]
    residuals: np.ndarray
    tolerance_used: float
    direction: str
    matrix_norm: float
    eigenvector_condition: float
    label: str = ""
    eigenvectors: np.ndarray = field(repr=False, default=None)

    @property
    def max_real_part(self) -> float:
        return float(np.max(self.eigenvalues.real))


def classify_eigenvalue(lam: complex, tol: float) -> str:
    if abs(lam) <= tol:
        return CLASS_ZERO
    if abs(lam.real) <= tol:
        return CLASS_IMAGINARY
    return CLASS_DECAYING


def eigenspectrum(S: Superoperator, tol: float | None = None) -> SpectrumReport:
    """Dense non-Hermitian eigendecomposition of a superoperator matrix.

    Eigenvalues are sorted by descending real part, then descending imaginary
    part. Defective matrices are not special-cased: eigenpair residuals and
    the eigenvector-matrix condition number are reported so a consumer can see
    when eigenvectors are unreliable even though eigenvalues remain valid.
    """
    M = S.matrix
    norm = frob(M)
    if tol is None:
        tol = default_tol(norm)
    try:
        w, V = scipy.linalg.eig(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise RuntimeError(f"eigensolver failed on superoperator {S.label!r}: {exc}") from exc

    order = np.lexsort((-w.imag, -w.real))
    w = w[order]
    V = V[:, order]

    col_norms = np.linalg.norm(V, axis=0)
    residuals = np.linalg.norm(M @ V - V * w, axis=0) / np.where(col_norms > 0, col_norms, 1.0)
    try:
        cond = float(np.linalg.cond(V))
    except np.linalg.LinAlgError:  # pragma: no cover
        cond = np.inf

    classes = [classify_eigenvalue(lam, tol) for lam in w]
    decaying = [lam.real for lam, c in zip(w, classes) if c == CLASS_DECAYING]
    gap = -max(decaying) if decaying else None

    candidates: list[SteadyCandidate] = []
    if S.direction == FORWARD:
        candidates = _steady_candidates(S, w, V, tol)

    return SpectrumReport(
        eigenvalues=w,
        classes=classes,
        gap=gap,
        steady_candidates=candidates,
        residuals=residuals,
        tolerance_used=tol,
        direction=S.direction,
        matrix_norm=norm,
        eigenvector_condition=cond,
        label=S.label,
        eigenvectors=V,
    )


def _steady_candidates(S: Superoperator, w: np.ndarray, V: np.ndarray, tol: float) -> list[SteadyCandidate]:
    out = []
    for lam, v in zip(w, V.T):
        if abs(lam) > tol:
            continue
        X = unvec(v, S.dim)
        X = (X + dag(X)) / 2
        tr = np.trace(X).real  # real because X was Hermitized
        normalized = abs(tr) > tol
        if normalized:
            X = X / tr
        out.append(
            SteadyCandidate(
                operator=X,
                eigenvalue=complex(lam),
                psd=is_psd(X),
                trace_normalized=bool(normalized),
            )
        )
    return out


def steady_states(S: Superoperator, tol: float | None = None) -> list[SteadyCandidate]:
    """Zero-eigenspace candidates of a forward generator.

    Raises CertificationError when the zero eigenspace is empty at the given
    tolerance, which signals the input matrix is not a Lindblad generator.
    """
    if S.direction != FORWARD:
        raise ValueError("steady states are defined for forward superoperators")
    report = eigenspectrum(S, tol=tol)
    if not report.steady_candidates:
        raise CertificationError(
            f"no zero eigenvalue at tolerance {report.tolerance_used:.3e}: "
            f"{S.label!r} is not a Lindblad generator at this tolerance"
        )
    return report.steady_candidates


def dissipative_gap(report: SpectrumReport) -> float | None:
    """Asymptotic decay rate: -max Re over decaying eigenvalues, or None."""
    return report.gap


def verify_nonpositivity(report: SpectrumReport, tol: float | None = None) -> CheckResult:
    """Check that no eigenvalue real part exceeds the tolerance."""
    if tol is None:
        tol = default_tol(report.matrix_norm, rtol=1e-8)
    worst = report.max_real_part
    return CheckResult(
        name="eigenvalue-nonpositivity",
        passed=worst <= tol,
        residual=worst,
        tolerance=tol,
        details={
            "label": report.label,
            "num_eigenvalues": int(report.eigenvalues.size),
            "max_eigenpair_residual": float(np.max(report.residuals)),
        },
    )


def match_multisets(a, b, tol: float) -> tuple[bool, float]:
    """Greedy nearest-neighbor multiset comparison of complex values.

    Returns (matched, worst_distance). Greedy matching is stable under
    eigensolver ordering nondeterminism; tolerance decides success.
    """
    a = list(np.asarray(a, dtype=complex))
    b = list(np.asarray(b, dtype=complex))
    if len(a) != len(b):
        return False, np.inf
    used = [False] * len(b)
    worst = 0.0
    for x in a:
        best_j, best_d = -1, np.inf
        for j, y in enumerate(b):
            if used[j]:
                continue
            d = abs(x - y)
            if d < best_d:
                best_d, best_j = d, j
        used[best_j] = True
        worst = max(worst, best_d)
    return worst <= tol, worst


def adjoint_pairing_check(model: LindbladModel, tol: float | None = None) -> CheckResult:
    """Adjoint spectrum equals the conjugate of the forward spectrum.

    This pairing is special to finite dimension; it is certified rather than
    assumed.
    """
    fwd = eigenspectrum(to_superoperator(model, FORWARD))
    adj = eigenspectrum(to_superoperator(model, ADJOINT))
    if tol is None:
        tol = default_tol(fwd.matrix_norm, rtol=1e-8)
    ok, worst = match_multisets(adj.eigenvalues, np.conj(fwd.eigenvalues), tol)
    return CheckResult(
        name="adjoint-spectrum-pairing",
        passed=ok,
        residual=worst,
        tolerance=tol,
        details={"label": model.label, "num_eigenvalues": int(fwd.eigenvalues.size)},
    )
