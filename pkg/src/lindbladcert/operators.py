"""Dense complex operator algebra: brackets, norms, spectral splits, positivity
tests, and seeded random operator ensembles.

All operators are plain complex numpy arrays of shape (d, d). Target sizes are
d <= 32 (superoperators up to 1024 x 1024), so everything is dense on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Tolerance policy: relative tolerance scaled by max(1, Frobenius norm) with an
# absolute floor, overridable per call.
DEFAULT_RTOL = 1e-9
ABS_FLOOR = 1e-12

OPERATOR_KINDS = ("hermitian", "unitary", "density", "general")


def default_tol(*norms: float, rtol: float = DEFAULT_RTOL, floor: float = ABS_FLOOR) -> float:
    """Tolerance scaled to the problem: max(floor, rtol * max(1, norms...))."""
    scale = max([1.0, *(float(n) for n in norms)])
    return max(floor, rtol * scale)


def dag(A: np.ndarray) -> np.ndarray:
    """Hermitian conjugate A^dagger."""
    return A.conj().T


def frob(A: np.ndarray) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(A))


def as_operator(A, name: str = "operator") -> np.ndarray:
    """Coerce to a square complex matrix, raising ValueError otherwise."""
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {M.shape}")
    return M


def check_same_dim(A: np.ndarray, B: np.ndarray) -> int:
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return A.shape[0]


def hermiticity_residual(A: np.ndarray) -> float:
    """||A - A^dagger||_F, the distance from the Hermitian cone's symmetry axis."""
    return frob(A - dag(A))


def require_hermitian(A: np.ndarray, tol: float | None = None, name: str = "operator") -> np.ndarray:
    res = hermiticity_residual(A)
    if tol is None:
        tol = default_tol(frob(A))
    if res > tol:
        raise ValueError(f"{name} is not Hermitian: residual {res:.3e} > tol {tol:.3e}")
    return A


def commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """[A, B] = AB - BA."""
    check_same_dim(A, B)
    return A @ B - B @ A


def anticommutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """{A, B} = AB + BA."""
    check_same_dim(A, B)
    return A @ B + B @ A


def hs_inner(A: np.ndarray, B: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr(A^dagger B)."""
    check_same_dim(A, B)
    return complex(np.trace(dag(A) @ B))


def trace_norm(A: np.ndarray) -> float:
    """Trace norm ||A||_1, the sum of singular values."""
    return float(np.linalg.svd(np.asarray(A, dtype=complex), compute_uv=False).sum())


def spectral_split(A: np.ndarray, tol: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Split a Hermitian A into positive/negative parts, A = Qp - Qm.

    Qp and Qm are positive semidefinite with Qp @ Qm = 0. Eigenvalues with
    magnitude below the tolerance go to Qp, which keeps the tie-break
    deterministic and the reconstruction A = Qp - Qm exact.
    """
    A = as_operator(A)
    if tol is None:
        tol = default_tol(frob(A))
    require_hermitian(A, tol=tol)
    w, V = np.linalg.eigh((A + dag(A)) / 2)
    pos = w >= -tol
    Qp = (V[:, pos] * w[pos]) @ dag(V[:, pos])
    Qm = -(V[:, ~pos] * w[~pos]) @ dag(V[:, ~pos])
    return Qp, Qm


@dataclass(frozen=True)
class PsdWitness:
    """Verdict with evidence for a positive-semidefiniteness test."""

    passed: bool
    min_eigenvalue: float
    hermiticity_residual: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.passed


def is_psd(A: np.ndarray, tol: float | None = None) -> PsdWitness:
    """PSD test with witness; never raises.

    Passes iff the Hermiticity residual is <= tol and the minimum eigenvalue
    of the Hermitian part (A + A^dagger)/2 is >= -tol.
    """
    A = as_operator(A)
    if tol is None:
        tol = default_tol(frob(A))
    herm_res = hermiticity_residual(A)
    w = np.linalg.eigvalsh((A + dag(A)) / 2)
    min_eig = float(w[0])
    return PsdWitness(
        passed=(herm_res <= tol and min_eig >= -tol),
        min_eigenvalue=min_eig,
        hermiticity_residual=herm_res,
        tolerance=tol,
    )


def philox_rng(seed: int) -> np.random.Generator:
    """Counter-based Philox generator: reproducible across platforms."""
    return np.random.Generator(np.random.Philox(seed))


def sample_operator(rng: np.random.Generator, dim: int, kind: str) -> np.ndarray:
    """Draw one operator of the given kind from an existing stream."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {OPERATOR_KINDS}")
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    if kind == "general":
        return G
    if kind == "hermitian":
        return (G + dag(G)) / 2
    if kind == "unitary":
        Q, R = np.linalg.qr(G)
        # Phase fix makes the QR-based distribution exactly Haar.
        phases = np.diag(R).copy()
        phases /= np.abs(phases)
        return Q * phases
    rho = G @ dag(G)
    return rho / np.trace(rho).real


def random_operator(dim: int, kind: str, seed: int) -> np.ndarray:
    """Deterministic seeded random operator (hermitian/unitary/density/general)."""
    return sample_operator(philox_rng(seed), dim, kind)
