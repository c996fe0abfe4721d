"""Lindblad models and their generator superoperators.

The generator acts on density operators as

    L(R) = -i[H, R] + sum_k ( L_k R L_k^dag - 1/2 {L_k^dag L_k, R} )

and its Hilbert-Schmidt adjoint, which drives Heisenberg-picture observables, as

    Ldag(A) = +i[H, A] + sum_k ( L_k^dag A L_k - 1/2 {L_k^dag L_k, A} ).

Matrix representations use column-stacking vectorization throughout:
vec(A X B) = (B^T kron A) vec(X). The convention is recorded on every
Superoperator so it cannot silently drift between modules.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .operators import as_operator, check_same_dim, dag, default_tol, frob, require_hermitian

COLUMN_STACKING = "column-stacking"
FORWARD = "forward"
ADJOINT = "adjoint"


def vec(A: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    return np.asarray(A, dtype=complex).reshape(-1, order="F")


def unvec(v: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Inverse of vec."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    if dim is None:
        dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise ValueError(f"vector of length {v.size} is not a stacked {dim}x{dim} matrix")
    return v.reshape(dim, dim, order="F")


def _readonly(A: np.ndarray) -> np.ndarray:
    out = np.array(A, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class LindbladModel:
    """Hamiltonian plus jump operators; the data of a Lindblad generator.

    The Hamiltonian must be Hermitian; all operators share one dimension.
    K = 0 (no jump operators) is allowed and gives a purely unitary generator.
    Instances are immutable: the stored arrays are read-only copies.
    """

    hamiltonian: np.ndarray
    jump_ops: tuple[np.ndarray, ...] = ()
    label: str = ""

    def __post_init__(self):
        H = as_operator(self.hamiltonian, "hamiltonian")
        require_hermitian(H, tol=1e-12 * max(1.0, frob(H)), name="hamiltonian")
        jumps = tuple(as_operator(L, f"jump_ops[{k}]") for k, L in enumerate(self.jump_ops))
        for k, L in enumerate(jumps):
            if L.shape != H.shape:
                raise ValueError(
                    f"jump_ops[{k}] has shape {L.shape}, expected {H.shape}"
                )
        object.__setattr__(self, "hamiltonian", _readonly(H))
        object.__setattr__(self, "jump_ops", tuple(_readonly(L) for L in jumps))

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]

    @property
    def num_jumps(self) -> int:
        return len(self.jump_ops)


@dataclass(frozen=True)
class Superoperator:
    """Dense d^2 x d^2 matrix representation of a generator or its adjoint."""

    matrix: np.ndarray
    direction: str
    label: str = ""
    convention: str = COLUMN_STACKING

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=complex)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError(f"superoperator matrix must be square, got {M.shape}")
        d = int(round(np.sqrt(M.shape[0])))
        if d * d != M.shape[0]:
            raise ValueError(f"matrix size {M.shape[0]} is not a perfect square")
        if self.direction not in (FORWARD, ADJOINT):
            raise ValueError(f"direction must be {FORWARD!r} or {ADJOINT!r}")
        if self.convention != COLUMN_STACKING:
            raise ValueError(f"unsupported vectorization convention {self.convention!r}")
        object.__setattr__(self, "matrix", _readonly(M))

    @property
    def dim(self) -> int:
        return int(round(np.sqrt(self.matrix.shape[0])))

    def __call__(self, X: np.ndarray) -> np.ndarray:
        """Act on an operator via the matrix representation."""
        return unvec(self.matrix @ vec(as_operator(X)), self.dim)


def _jump_sign(model) -> float:
    # +1 for Lindblad form; -1 only for the sign-flipped negative-control
    # generator, which flips the sandwich term L R L^dag.
    return float(getattr(model, "jump_sign", 1.0))


def apply(model: LindbladModel, R: np.ndarray) -> np.ndarray:
    """Apply the generator to an operator R (Schroedinger picture)."""
    R = as_operator(R)
    check_same_dim(model.hamiltonian, R)
    sign = _jump_sign(model)
    out = -1j * (model.hamiltonian @ R - R @ model.hamiltonian)
    for L in model.jump_ops:
        LdL = dag(L) @ L
        out += sign * (L @ R @ dag(L)) - 0.5 * (LdL @ R + R @ LdL)
    return out


def apply_adjoint(model: LindbladModel, A: np.ndarray) -> np.ndarray:
    """Apply the Hilbert-Schmidt adjoint of the generator to an observable A."""
    A = as_operator(A)
    check_same_dim(model.hamiltonian, A)
    sign = _jump_sign(model)
    out = 1j * (model.hamiltonian @ A - A @ model.hamiltonian)
    for L in model.jump_ops:
        LdL = dag(L) @ L
        out += sign * (dag(L) @ A @ L) - 0.5 * (LdL @ A + A @ LdL)
    return out


def _unitary_part(H: np.ndarray, sign: float) -> np.ndarray:
    I = np.eye(H.shape[0])
    return sign * (-1j) * (np.kron(I, H) - np.kron(H.T, I))


def to_superoperator(model: LindbladModel, direction: str = FORWARD) -> Superoperator:
    """Matrix representation of the generator under column stacking.

    The adjoint matrix is built independently from the adjoint form (not as
    the conjugate transpose of the forward matrix), so Hilbert-Schmidt duality
    stays a testable property rather than a definition.
    """
    if direction not in (FORWARD, ADJOINT):
        raise ValueError(f"direction must be {FORWARD!r} or {ADJOINT!r}")
    d = model.dim
    I = np.eye(d)
    sign = _jump_sign(model)
    forward = direction == FORWARD
    S = _unitary_part(model.hamiltonian, +1.0 if forward else -1.0)
    for L in model.jump_ops:
        LdL = dag(L) @ L
        if forward:
            S = S + sign * np.kron(L.conj(), L)
        else:
            S = S + sign * np.kron(L.T, dag(L))
        S = S - 0.5 * np.kron(I, LdL) - 0.5 * np.kron(LdL.T, I)
    return Superoperator(matrix=S, direction=direction, label=model.label)


def split_components(model: LindbladModel) -> list[Superoperator]:
    """Split the forward generator into [drift, jump_1, ..., jump_K] pieces.

    The drift piece carries the commutator and all anticommutator halves; each
    jump piece is the sandwich L_k . L_k^dag alone. The pieces sum to the full
    forward superoperator.
    """
    d = model.dim
    I = np.eye(d)
    sign = _jump_sign(model)
    drift = _unitary_part(model.hamiltonian, +1.0)
    for L in model.jump_ops:
        LdL = dag(L) @ L
        drift = drift - 0.5 * np.kron(I, LdL) - 0.5 * np.kron(LdL.T, I)
    parts = [Superoperator(matrix=drift, direction=FORWARD, label=f"{model.label}:drift")]
    for k, L in enumerate(model.jump_ops, start=1):
        parts.append(
            Superoperator(
                matrix=sign * np.kron(L.conj(), L),
                direction=FORWARD,
                label=f"{model.label}:jump{k}",
            )
        )
    return parts


def trace_annihilation_residual(S: Superoperator) -> float:
    """Norm of vec(identity)^dag times the matrix; zero for trace-conserving generators."""
    d = S.dim
    left = vec(np.eye(d)).conj() @ S.matrix
    return float(np.linalg.norm(left))
