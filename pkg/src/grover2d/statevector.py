"""Dense statevector over n qubits.

Basis index ``a`` runs over ``0 .. 2**n - 1`` with qubit 0 as the most
significant bit, so ``|q0 q1 ... q(n-1)>`` has index ``sum(q_i << (n-1-i))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 24
UNITARY_ATOL = 1e-10
NORM_ATOL = 1e-6

H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
I2 = np.eye(2, dtype=np.complex128)


class NormalizationError(ValueError):
    """Raised when a state that must be normalized is not."""


@dataclass(frozen=True, eq=False)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {self.n_qubits}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes for {self.n_qubits} qubits, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def replace(self, amplitudes: np.ndarray) -> "StateVector":
        return StateVector(self.n_qubits, amplitudes)

    def __repr__(self) -> str:
        return f"StateVector(n_qubits={self.n_qubits}, amplitudes={self.amplitudes!r})"


def basis_state(n_qubits: int, index: int) -> StateVector:
    dim = 1 << n_qubits
    if not 0 <= index < dim:
        raise IndexError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def uniform_state(n_qubits: int) -> StateVector:
    """Equal superposition ``H^n |0...0>``; every amplitude is ``1/sqrt(2**n)``."""
    if not isinstance(n_qubits, (int, np.integer)) or not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be an integer in [1, {MAX_QUBITS}], got {n_qubits!r}")
    dim = 1 << n_qubits
    return StateVector(n_qubits, np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


def check_unitary(gate: np.ndarray, atol: float = UNITARY_ATOL) -> np.ndarray:
    g = np.asarray(gate, dtype=np.complex128)
    if g.shape != (2, 2):
        raise ValueError(f"single-qubit gate must be 2x2, got shape {g.shape}")
    if not np.allclose(g.conj().T @ g, I2, atol=atol, rtol=0):
        raise ValueError("gate is not unitary")
    return g


def apply_single_qubit_gate(state: StateVector, qubit: int, gate: np.ndarray) -> StateVector:
    """Apply a 2x2 unitary to one qubit by updating amplitude pairs in place.

    The amplitude array is viewed as ``(2**qubit, 2, 2**(n-qubit-1))``; the
    middle axis is the target qubit, so each pair differs only in that bit.
    """
    if not 0 <= qubit < state.n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {state.n_qubits}-qubit state")
    g = check_unitary(gate)
    out = np.array(state.amplitudes)
    view = out.reshape(1 << qubit, 2, -1)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = g[0, 0] * a0 + g[0, 1] * a1
    view[:, 1, :] = g[1, 0] * a0 + g[1, 1] * a1
    return state.replace(out)


def born_probabilities(state: StateVector) -> np.ndarray:
    probs = np.abs(state.amplitudes) ** 2
    total = probs.sum()
    if abs(total - 1.0) > NORM_ATOL:
        raise NormalizationError(f"state norm^2 is {total!r}, expected 1")
    return probs


def sample_measurements(state: StateVector, shots: int, seed: int) -> np.ndarray:
    """Draw ``shots`` basis indices i.i.d. from the Born distribution.

    Uses a fresh ``numpy.random.Generator(PCG64(seed))`` per call, so equal
    ``(state, shots, seed)`` give identical sequences.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = born_probabilities(state)
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.choice(state.dim, size=shots, p=probs / probs.sum())
