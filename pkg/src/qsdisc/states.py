"""Dense few-qubit linear algebra and the mixed-qubit state family.

Everything here operates on plain complex numpy arrays. States are density
matrices (Hermitian, unit trace, positive semidefinite up to a small
tolerance); validation happens at construction so downstream code can assume
the invariants hold.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "I2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "DiscriminationProblem",
    "hermitian",
    "density",
    "make_state",
    "kron",
    "tensor_power",
    "hermitian_eig",
    "trace_norm",
]

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-12
EIG_RESIDUAL_TOL = 1e-10

# Copy cap keeps matrices at or below 64x64.
MAX_COPIES = 6


def hermitian(a) -> np.ndarray:
    """Validate a square matrix as Hermitian and return its symmetrized copy.

    Entrywise defects up to ``HERMITICITY_TOL`` are absorbed by averaging
    with the conjugate transpose; larger defects raise ``ValueError``.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix has non-finite entries")
    defect = np.max(np.abs(a - a.conj().T))
    if defect > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    return 0.5 * (a + a.conj().T)


def density(a) -> np.ndarray:
    """Validate a matrix as a density matrix (trace 1, PSD) and return it."""
    a = hermitian(a)
    tr = a.trace().real
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {tr!r} is not 1 within {TRACE_TOL}")
    lo = np.linalg.eigvalsh(a)[0]
    if lo < -PSD_TOL:
        raise ValueError(f"matrix is not PSD (min eigenvalue {lo:.3e})")
    return a


def make_state(alpha: float, v: float, sign: int) -> np.ndarray:
    """Single-qubit state (I + (1-v)(cos(a) Z + sign sin(a) X))/2.

    ``v = 0`` is a pure state, ``v = 1`` the maximally mixed state; ``sign``
    selects which of the two hypotheses is prepared (+1 or -1).
    """
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"v={v} outside [0, 1]")
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    r = 1.0 - v
    rho = 0.5 * (I2 + r * (math.cos(alpha) * SIGMA_Z + sign * math.sin(alpha) * SIGMA_X))
    return rho


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("kron expects square matrices")
    return np.kron(a, b)


def tensor_power(rho, m: int, max_copies: int = MAX_COPIES) -> np.ndarray:
    """m-fold Kronecker power of a state (dimension grows as 2^m)."""
    if m < 1:
        raise ValueError(f"copy count m={m} must be >= 1")
    if m > max_copies:
        raise ValueError(f"copy count m={m} exceeds cap {max_copies}")
    rho = np.asarray(rho, dtype=complex)
    out = rho
    for _ in range(m - 1):
        out = np.kron(out, rho)
    return out


def hermitian_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues in ascending order and the matrix whose columns are
    the corresponding orthonormal eigenvectors. The residual ``max|Hv - vL|``
    is checked against ``EIG_RESIDUAL_TOL * max|eigenvalue|``.
    """
    h = np.asarray(h, dtype=complex)
    w, vecs = np.linalg.eigh(h)
    scale = max(np.max(np.abs(w)), 1.0)
    residual = np.max(np.abs(h @ vecs - vecs * w))
    if residual > EIG_RESIDUAL_TOL * scale:
        raise np.linalg.LinAlgError(
            f"eigendecomposition residual {residual:.3e} exceeds tolerance"
        )
    return w, vecs


def trace_norm(h) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = hermitian_eig(h)
    return float(np.abs(w).sum())


@dataclass(frozen=True)
class DiscriminationProblem:
    """The two-hypothesis setup: angle, mixedness, prior and copy count.

    ``alpha`` is the half-angle between the two Bloch vectors, ``v`` the
    mixedness (0 pure, 1 maximally mixed), ``q`` the prior probability of
    the "+" hypothesis and ``copies`` the number of identical copies
    handed to the measurement.
    """

    alpha: float
    v: float
    q: float
    copies: int = 1

    def __post_init__(self):
        if not 0.0 < self.alpha <= math.pi / 2:
            raise ValueError(f"alpha={self.alpha} outside (0, pi/2]")
        if not 0.0 <= self.v <= 1.0:
            raise ValueError(f"v={self.v} outside [0, 1]")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q={self.q} outside [0, 1]")
        if self.copies < 1:
            raise ValueError(f"copies={self.copies} must be >= 1")

    def state(self, sign: int) -> np.ndarray:
        """Single-copy state for the given hypothesis sign."""
        return make_state(self.alpha, self.v, sign)

    def multi_copy_state(self, sign: int) -> np.ndarray:
        """copies-fold tensor power of the hypothesis state."""
        return tensor_power(self.state(sign), self.copies)
