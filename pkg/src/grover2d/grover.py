"""Grover iteration: phase-flip oracle, inversion about the mean, scheduling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .statevector import (
    NORM_ATOL,
    NormalizationError,
    StateVector,
    born_probabilities,
    sample_measurements,
    uniform_state,
)


@dataclass(frozen=True)
class MarkedSet:
    """Basis indices flagged by the oracle. Stored sorted and unique."""

    indices: tuple[int, ...]
    n_qubits: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        dim = 1 << self.n_qubits
        if not idx:
            raise ValueError("marked set must be nonempty")
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate marked indices: {idx}")
        for i in idx:
            if not 0 <= i < dim:
                raise ValueError(f"marked index {i} out of range for {self.n_qubits} qubits (N={dim})")
        if len(idx) >= dim:
            raise ValueError("cannot mark every basis state")
        object.__setattr__(self, "indices", tuple(sorted(idx)))

    @classmethod
    def of(cls, n_qubits: int, indices: Iterable[int]) -> "MarkedSet":
        return cls(tuple(indices), n_qubits)

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class IterationSchedule:
    mode: str = "auto"
    k: int = 0

    def __post_init__(self):
        if self.mode not in ("auto", "fixed"):
            raise ValueError(f"schedule mode must be 'auto' or 'fixed', got {self.mode!r}")
        if self.k < 0:
            raise ValueError(f"iteration count must be >= 0, got {self.k}")

    @classmethod
    def auto(cls) -> "IterationSchedule":
        return cls("auto", 0)

    @classmethod
    def fixed(cls, k: int) -> "IterationSchedule":
        return cls("fixed", k)


@dataclass
class GroverResult:
    final_state: StateVector
    marked: MarkedSet
    iterations_used: int
    oracle_calls: int
    predicted_success: float
    samples: Optional[np.ndarray] = None

    @property
    def marked_probability(self) -> float:
        probs = born_probabilities(self.final_state)
        return float(probs[list(self.marked.indices)].sum())

    @property
    def empirical_success(self) -> Optional[float]:
        if self.samples is None:
            return None
        return float(np.isin(self.samples, self.marked.indices).mean())


def phase_flip(state: StateVector, marked: MarkedSet) -> StateVector:
    """Apply ``I - 2 sum_t |t><t|``: negate the marked amplitudes."""
    if marked.n_qubits != state.n_qubits:
        raise ValueError(
            f"marked set is for {marked.n_qubits} qubits, state has {state.n_qubits}"
        )
    out = np.array(state.amplitudes)
    out[list(marked.indices)] *= -1
    return state.replace(out)


def diffusion(state: StateVector) -> StateVector:
    """Apply ``2|Psi><Psi| - I`` with ``|Psi>`` uniform: ``a_i -> 2*mean - a_i``."""
    norm2 = float(np.sum(np.abs(state.amplitudes) ** 2))
    if abs(norm2 - 1.0) > NORM_ATOL:
        raise NormalizationError(f"state norm^2 is {norm2!r}, expected 1")
    amps = state.amplitudes
    return state.replace(2.0 * amps.mean() - amps)


def _check_sizes(N: int, M: int) -> None:
    if N < 2 or N & (N - 1):
        raise ValueError(f"N must be a power of two >= 2, got {N}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if M >= N:
        raise ValueError(f"M={M} marks every state of N={N}; nothing to amplify")


def optimal_iterations(N: int, M: int) -> int:
    _check_sizes(N, M)
    return math.floor(math.pi / 4 * math.sqrt(N / M))


def success_probability(N: int, M: int, k: int) -> float:
    """Closed-form marked mass after ``k`` iterations: ``sin^2((2k+1) theta)``."""
    _check_sizes(N, M)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    theta = math.asin(math.sqrt(M / N))
    return math.sin((2 * k + 1) * theta) ** 2


def resolve_iterations(N: int, M: int, schedule: IterationSchedule) -> int:
    if schedule.mode == "fixed":
        return schedule.k
    if 2 * M >= N:
        raise ValueError(
            f"auto schedule refuses M={M} >= N/2={N // 2}: amplification cannot help here, "
            "use a classical scan or a fixed schedule"
        )
    return optimal_iterations(N, M)


def run_grover(
    n_qubits: int,
    marked: MarkedSet,
    schedule: IterationSchedule = IterationSchedule.auto(),
    shots: int = 0,
    seed: int = 0,
) -> GroverResult:
    if marked.n_qubits != n_qubits:
        raise ValueError(f"marked set is for {marked.n_qubits} qubits, run asks for {n_qubits}")
    if shots < 0:
        raise ValueError(f"shots must be >= 0, got {shots}")
    N, M = 1 << n_qubits, len(marked)
    k = resolve_iterations(N, M, schedule)

    state = uniform_state(n_qubits)
    for _ in range(k):
        state = diffusion(phase_flip(state, marked))

    samples = sample_measurements(state, shots, seed) if shots else None
    return GroverResult(
        final_state=state,
        marked=marked,
        iterations_used=k,
        oracle_calls=k,
        predicted_success=success_probability(N, M, k),
        samples=samples,
    )
