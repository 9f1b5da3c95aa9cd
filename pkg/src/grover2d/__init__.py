"""Grover search on a dense statevector, plus a two-dimensional query
pipeline that carries one query field on atomic excitation and the other on
a two-qubit nuclear-spin register."""

from .classical import ClassicalResult, QueryOrder, linear_search
from .composite import (
    CompositeState,
    DoubleAbsorptionError,
    JointOutcome,
    NonUniformSpinWarning,
    PostSelectionExhausted,
    SearchOutcome,
    apply_photon_mode,
    build_composite,
    joint_measure,
    search_two_dimensional,
    spin_grover,
)
from .database import (
    CensusRecord,
    ParseError,
    RecordIndex,
    brute_force_filter,
    build_index,
    generate_records,
    parse_records,
    serialize_records,
)
from .encoding import Atom, Degree, EnergyLevel, Gender, PhotonMode
from .grover import (
    GroverResult,
    IterationSchedule,
    MarkedSet,
    diffusion,
    optimal_iterations,
    phase_flip,
    run_grover,
    success_probability,
)
from .statevector import (
    H,
    X,
    NormalizationError,
    StateVector,
    apply_single_qubit_gate,
    basis_state,
    born_probabilities,
    sample_measurements,
    uniform_state,
)

__version__ = "0.1.0"
