"""Optimal collective (joint) measurements for two-hypothesis discrimination.

The minimum error probability over all measurements on the M-copy states is
(1 - ||q rho_+^(x)M - (1-q) rho_-^(x)M||)/2 with ||.|| the trace norm, and it
is attained by measuring the sign of the weighted difference observable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import DiscriminationProblem, hermitian_eig, trace_norm

__all__ = [
    "Povm",
    "HelstromSolution",
    "gamma",
    "helstrom_error",
    "single_copy_closed_form",
    "helstrom_povm",
    "error_probability",
]

POVM_PSD_TOL = 1e-10
POVM_COMPLETENESS_TOL = 1e-10

GUESS_PLUS = +1
GUESS_MINUS = -1


@dataclass(frozen=True)
class Povm:
    """A finite measurement: positive elements summing to identity, each
    labelled with the hypothesis guessed when it clicks (+1 or -1)."""

    elements: tuple
    decisions: tuple

    def __post_init__(self):
        elements = tuple(np.asarray(e, dtype=complex) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "decisions", tuple(int(d) for d in self.decisions))
        if len(elements) != len(self.decisions):
            raise ValueError("one decision label per element required")
        if any(d not in (GUESS_PLUS, GUESS_MINUS) for d in self.decisions):
            raise ValueError("decision labels must be +1 or -1")
        dim = elements[0].shape[0]
        total = np.zeros((dim, dim), dtype=complex)
        for e in elements:
            if e.shape != (dim, dim):
                raise ValueError("POVM elements must share one dimension")
            lo = np.linalg.eigvalsh(0.5 * (e + e.conj().T))[0]
            if lo < -POVM_PSD_TOL:
                raise ValueError(f"POVM element not PSD (min eigenvalue {lo:.3e})")
            total += e
        if np.max(np.abs(total - np.eye(dim))) > POVM_COMPLETENESS_TOL:
            raise ValueError("POVM elements do not sum to identity")

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]


@dataclass(frozen=True)
class HelstromSolution:
    """Difference observable, its optimal error probability and the
    two-outcome projective measurement attaining it."""

    gamma: np.ndarray
    error_probability: float
    povm: Povm


def gamma(problem: DiscriminationProblem) -> np.ndarray:
    """Weighted difference observable q rho_+^(x)M - (1-q) rho_-^(x)M."""
    return problem.q * problem.multi_copy_state(+1) - (1.0 - problem.q) * problem.multi_copy_state(-1)


def helstrom_error(problem: DiscriminationProblem) -> float:
    """Minimum error probability over all collective measurements."""
    return 0.5 * (1.0 - trace_norm(gamma(problem)))


def single_copy_closed_form(alpha: float, v: float, q: float) -> float:
    """Single-copy optimal error probability, evaluated analytically.

    The single-copy difference observable has eigenvalues
    ((2q-1) +- (1-v) sqrt((2q-1)^2 cos^2(a) + sin^2(a)))/2, so its trace
    norm is the larger of |2q-1| and the square-root term. Serves as an
    independent oracle for the eigenvalue-based route.
    """
    u = 2.0 * q - 1.0
    b = (1.0 - v) * math.sqrt(u * u * math.cos(alpha) ** 2 + math.sin(alpha) ** 2)
    return 0.5 * (1.0 - max(abs(u), b))


def helstrom_povm(problem: DiscriminationProblem) -> HelstromSolution:
    """Two-outcome projective measurement attaining the optimal error.

    The "+" projector spans the strictly positive eigenspaces of the
    difference observable; zero eigenvalues (any tie) go to the "-" side.
    A definite observable yields a zero operator on one side, kept so the
    interface is uniformly two elements.
    """
    g = gamma(problem)
    w, vecs = hermitian_eig(g)
    pos = vecs[:, w > 0.0]
    p_plus = pos @ pos.conj().T
    p_minus = np.eye(g.shape[0], dtype=complex) - p_plus
    povm = Povm(elements=(p_plus, p_minus), decisions=(GUESS_PLUS, GUESS_MINUS))
    return HelstromSolution(
        gamma=g,
        error_probability=0.5 * (1.0 - float(np.abs(w).sum())),
        povm=povm,
    )


def error_probability(povm: Povm, problem: DiscriminationProblem) -> float:
    """Average error probability of an arbitrary POVM on the M-copy states."""
    rho_plus = problem.multi_copy_state(+1)
    rho_minus = problem.multi_copy_state(-1)
    if povm.dim != rho_plus.shape[0]:
        raise ValueError(
            f"POVM dimension {povm.dim} does not match state dimension {rho_plus.shape[0]}"
        )
    p_err = 0.0
    for element, decision in zip(povm.elements, povm.decisions):
        if decision == GUESS_MINUS:
            p_err += problem.q * np.trace(rho_plus @ element).real
        else:
            p_err += (1.0 - problem.q) * np.trace(rho_minus @ element).real
    return float(p_err)
