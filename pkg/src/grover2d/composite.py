"""Two-dimensional search over commuting energy and spin degrees of freedom.

Register layout (4 qubits, qubit 0 most significant)::

    qubit 0  branch      0 -> atom A1 carries the term, 1 -> atom A2
    qubit 1  excitation  0 -> ground (G), 1 -> excited (E)
    qubit 2  spin of A1  0 -> up, 1 -> down
    qubit 3  spin of A2

so the four energy levels G1, E1, G2, E2 occupy index blocks 0-3, 4-7,
8-11 and 12-15, and the low two bits are the spin index of the degree.
A photon in mode A flips the excitation qubit on the A1 branch only.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .database import RecordIndex
from .encoding import (
    ATOM_GENDER,
    GENDER_ATOM,
    GENDER_MODE,
    Atom,
    Degree,
    EnergyLevel,
    Gender,
    PhotonMode,
)
from .statevector import StateVector, sample_measurements

N_QUBITS = 4
SPIN_DIM = 4
_AMP_EPS = 1e-12


class DoubleAbsorptionError(ValueError):
    """The photon's target atom already has excited population."""


class PostSelectionExhausted(RuntimeError):
    """No shot landed in the queried branch."""


class NonUniformSpinWarning(UserWarning):
    pass


def _blocks(amplitudes: np.ndarray) -> np.ndarray:
    # rows: (branch, excitation) = G1, E1, G2, E2; columns: spin index
    return amplitudes.reshape(4, SPIN_DIM)


def _row(atom: Atom, level: EnergyLevel) -> int:
    return 2 * atom.value + level.value


@dataclass(frozen=True)
class CompositeState:
    state: StateVector

    def __post_init__(self):
        if self.state.n_qubits != N_QUBITS:
            raise ValueError(f"composite state needs {N_QUBITS} qubits, got {self.state.n_qubits}")

    @property
    def amplitudes(self) -> np.ndarray:
        return self.state.amplitudes

    def block(self, atom: Atom, level: EnergyLevel) -> np.ndarray:
        """Spin amplitudes psi(a) of the ``|level_atom, a>`` component."""
        return _blocks(self.amplitudes)[_row(atom, level)]

    @property
    def branch_weights(self) -> tuple[float, float]:
        p = np.abs(_blocks(self.amplitudes)) ** 2
        return float(p[0:2].sum()), float(p[2:4].sum())


def _spin_is_uniform(rows: np.ndarray) -> bool:
    return bool(np.all(np.abs(rows - rows.mean(axis=1, keepdims=True)) <= 1e-9))


def build_composite(
    gender_weights: Sequence[float] = (0.5, 0.5),
    spin_distribution: Sequence[float] = (0.25, 0.25, 0.25, 0.25),
) -> CompositeState:
    """Both atoms in ground, amplitude ``sqrt(w_g) * sqrt(p_a)`` on ``|G_g, a>``."""
    gw = np.asarray(gender_weights, dtype=float)
    sp = np.asarray(spin_distribution, dtype=float)
    for w, n, what in ((gw, 2, "gender_weights"), (sp, SPIN_DIM, "spin_distribution")):
        if w.shape != (n,) or np.any(w < 0) or abs(w.sum() - 1) > 1e-9:
            raise ValueError(f"{what} must be {n} nonnegative reals summing to 1, got {w.tolist()}")
    if not np.allclose(sp, 1 / SPIN_DIM, atol=1e-12):
        warnings.warn(
            "non-uniform spin distribution: one Grover iteration will not reach certainty",
            NonUniformSpinWarning,
            stacklevel=2,
        )
    blocks = np.zeros((4, SPIN_DIM), dtype=np.complex128)
    blocks[_row(Atom.A1, EnergyLevel.GROUND)] = np.sqrt(gw[0]) * np.sqrt(sp)
    blocks[_row(Atom.A2, EnergyLevel.GROUND)] = np.sqrt(gw[1]) * np.sqrt(sp)
    return CompositeState(StateVector(N_QUBITS, blocks.ravel()))


def excitation_flip(state: StateVector, atom: Atom) -> StateVector:
    """Raw G<->E swap on one atom's branch; no population checks."""
    blocks = _blocks(np.array(state.amplitudes))
    g, e = _row(atom, EnergyLevel.GROUND), _row(atom, EnergyLevel.EXCITED)
    blocks[[g, e]] = blocks[[e, g]]
    return state.replace(blocks.ravel())


def apply_photon_mode(state: CompositeState, mode: PhotonMode) -> CompositeState:
    atom = mode.atom
    if np.any(np.abs(state.block(atom, EnergyLevel.EXCITED)) > _AMP_EPS):
        raise DoubleAbsorptionError(f"atom {atom.name} is already excited; mode {mode.value} cannot be absorbed")
    return CompositeState(excitation_flip(state.state, atom))


def spin_grover(state: CompositeState, target_degree: Degree, iterations: int = 1) -> CompositeState:
    """Grover on the two spin qubits, identically inside every energy block."""
    blocks = _blocks(np.array(state.amplitudes))
    if not _spin_is_uniform(blocks):
        warnings.warn(
            "spin register is not in the uniform superposition; amplification is not exact",
            NonUniformSpinWarning,
            stacklevel=2,
        )
    target = target_degree.spin_index
    for _ in range(iterations):
        blocks[:, target] *= -1
        blocks = 2.0 * blocks.mean(axis=1, keepdims=True) - blocks
    return CompositeState(StateVector(N_QUBITS, blocks.ravel()))


@dataclass(frozen=True)
class JointOutcome:
    excited_atom: Optional[Atom]
    spin_index: int

    @property
    def gender(self) -> Optional[Gender]:
        return None if self.excited_atom is None else ATOM_GENDER[self.excited_atom]

    @property
    def degree(self) -> Degree:
        return Degree.from_spin_index(self.spin_index)

    @property
    def decoded(self) -> tuple[Optional[Gender], Degree]:
        return self.gender, self.degree

    @classmethod
    def from_index(cls, index: int) -> "JointOutcome":
        branch, excited, spin = index >> 3, (index >> 2) & 1, index & 3
        return cls(Atom(branch) if excited else None, spin)


def joint_measure(state: CompositeState, shots: int, seed: int) -> list[JointOutcome]:
    samples = sample_measurements(state.state, shots, seed)
    return [JointOutcome.from_index(int(i)) for i in samples]


@dataclass
class SearchOutcome:
    query: tuple[Gender, Degree]
    photon_mode: PhotonMode
    gender: Gender
    degree: Degree
    names: list[str]
    oracle_calls: int
    photon_operations: int
    shots_used: int
    post_selected: int
    bucket_counts: dict[tuple[Gender, Degree], int] = field(default_factory=dict)

    @property
    def post_selection_rate(self) -> float:
        return self.post_selected / self.shots_used


def search_two_dimensional(
    db: RecordIndex,
    gender: Gender,
    degree: Degree,
    shots: int = 1000,
    seed: int = 0,
    gender_weights: Sequence[float] = (0.5, 0.5),
) -> SearchOutcome:
    """Photon query on gender, one spin-Grover iteration on degree, then
    post-select shots where the queried atom is excited and look up the
    modal (gender, degree) bucket in ``db``."""
    if db.total == 0:
        raise ValueError("database is empty")
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")

    mode = GENDER_MODE[gender]
    state = build_composite(gender_weights)
    state = apply_photon_mode(state, mode)
    state = spin_grover(state, degree, iterations=1)
    outcomes = joint_measure(state, shots, seed)

    atom = GENDER_ATOM[gender]
    kept = [o for o in outcomes if o.excited_atom is atom]
    if not kept:
        raise PostSelectionExhausted(
            f"no shot out of {shots} found atom {atom.name} excited; "
            f"gender weights {list(gender_weights)} leave the {gender.value} branch empty or rare"
        )
    counts = Counter(o.decoded for o in kept)
    bucket, _ = counts.most_common(1)[0]
    return SearchOutcome(
        query=(gender, degree),
        photon_mode=mode,
        gender=bucket[0],
        degree=bucket[1],
        names=list(db.bucket(*bucket)),
        oracle_calls=1,
        photon_operations=1,
        shots_used=shots,
        post_selected=len(kept),
        bucket_counts=dict(counts),
    )
