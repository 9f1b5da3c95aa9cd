"""Oracle calls vs. classical comparisons as the database grows."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, fields

import numpy as np

from .classical import QueryOrder, linear_search
from .database import generate_records
from .encoding import Degree, Gender
from .grover import IterationSchedule, MarkedSet, run_grover

MIN_QUBITS, MAX_QUBITS = 2, 12


@dataclass
class BenchRow:
    n_qubits: int
    N: int
    grover_oracle_calls: int
    predicted_success: float
    empirical_success: float
    classical_comparisons_mean: float


def bench_row(n_qubits: int, trials: int, seed: int, shots: int = 10000) -> BenchRow:
    # Seeds are derived from (seed, n) so a row does not depend on which others ran.
    rng = np.random.Generator(np.random.PCG64([seed, n_qubits]))
    N = 1 << n_qubits

    marked = MarkedSet.of(n_qubits, [int(rng.integers(N))])
    result = run_grover(n_qubits, marked, IterationSchedule.auto(), shots=shots, seed=int(rng.integers(2**63)))

    genders, degrees, orders = list(Gender), list(Degree), list(QueryOrder)
    comparisons = []
    for _ in range(trials):
        records = generate_records(int(rng.integers(2**63)), N)
        q = linear_search(
            records,
            genders[rng.integers(2)],
            degrees[rng.integers(4)],
            orders[rng.integers(2)],
        )
        comparisons.append(q.comparisons)

    return BenchRow(
        n_qubits=n_qubits,
        N=N,
        grover_oracle_calls=result.oracle_calls,
        predicted_success=result.predicted_success,
        empirical_success=result.empirical_success,
        classical_comparisons_mean=float(np.mean(comparisons)),
    )


def run_benchmark(min_qubits: int, max_qubits: int, trials: int, seed: int, shots: int = 10000) -> list[BenchRow]:
    if not MIN_QUBITS <= min_qubits <= max_qubits <= MAX_QUBITS:
        raise ValueError(
            f"need {MIN_QUBITS} <= min_qubits <= max_qubits <= {MAX_QUBITS}, got {min_qubits}, {max_qubits}"
        )
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    return [bench_row(n, trials, seed, shots) for n in range(min_qubits, max_qubits + 1)]


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[f.name for f in fields(BenchRow)], lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))
    return buf.getvalue()


def loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
