"""Exit criteria. Each test records a PASS/FAIL line shown in the terminal
summary under "acceptance criteria"."""

import math
import time
import warnings

import numpy as np
import pytest

from dense import grover_state
from grover2d.bench import loglog_slope, run_benchmark
from grover2d.composite import (
    NonUniformSpinWarning,
    apply_photon_mode,
    build_composite,
    search_two_dimensional,
    spin_grover,
)
from grover2d.database import brute_force_filter, build_index, generate_records
from grover2d.encoding import Degree, Gender, PhotonMode
from grover2d.grover import IterationSchedule, MarkedSet, run_grover


def closed_form(N, k):
    return math.sin((2 * k + 1) * math.asin(1 / math.sqrt(N))) ** 2


def test_c1_two_qubit_certainty(criterion):
    t0 = time.perf_counter()
    worst, iters = 0.0, set()
    for t in range(4):
        r = run_grover(2, MarkedSet.of(2, [t]), IterationSchedule.auto())
        worst = max(worst, abs(r.marked_probability - 1.0))
        iters.add(r.iterations_used)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and iters == {1} and elapsed < 1.0
    assert criterion("C1 two-qubit certainty", ok, f"max |P-1|={worst:.1e}, iterations={iters}, {elapsed:.3f}s")


def test_c2_closed_form_agreement(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    masses = {}
    for n in range(2, 11):
        N = 2**n
        r = run_grover(n, MarkedSet.of(n, [N // 3]))
        masses[N] = r.marked_probability
        worst = max(worst, abs(r.marked_probability - closed_form(N, r.iterations_used)))
    elapsed = time.perf_counter() - t0
    ok = (
        worst <= 1e-9
        and abs(masses[8] - 0.9453) <= 1e-4
        and masses[1024] >= 0.999
        and elapsed < 10.0
    )
    assert criterion(
        "C2 closed-form agreement",
        ok,
        f"max dev={worst:.1e}, N=8 -> {masses[8]:.6f}, N=1024 -> {masses[1024]:.6f}, {elapsed:.2f}s",
    )


def test_c3_empirical_sampling(criterion):
    worst = 0.0
    for n in range(2, 11):
        r = run_grover(n, MarkedSet.of(n, [(7 * n) % 2**n]), shots=10000, seed=2024 + n)
        worst = max(worst, abs(r.empirical_success - r.predicted_success))
    assert criterion("C3 empirical sampling", worst <= 0.02, f"max |freq - predicted|={worst:.4f}")


def test_c4_dense_oracle_equivalence(criterion):
    worst = 0.0
    for n in range(1, 5):
        # auto refuses n=1 (M=1 is half of N=2), so fixed schedules cover it
        schedules = [IterationSchedule.fixed(k) for k in range(4)]
        if n > 1:
            schedules.append(IterationSchedule.auto())
        for t in range(2**n):
            for sched in schedules:
                r = run_grover(n, MarkedSet.of(n, [t]), sched)
                expected = grover_state(n, [t], r.iterations_used)
                worst = max(worst, np.max(np.abs(r.final_state.amplitudes - expected)))
    assert criterion("C4 dense-oracle equivalence", worst <= 1e-10, f"max elementwise dev={worst:.1e}")


def test_c5_commutation(criterion):
    rng = np.random.default_rng(5)
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonUniformSpinWarning)
        for _ in range(100):
            c = build_composite(rng.dirichlet([1, 1]), rng.dirichlet([1, 1, 1, 1]))
            mode = list(PhotonMode)[rng.integers(2)]
            degree = list(Degree)[rng.integers(4)]
            a = apply_photon_mode(spin_grover(c, degree), mode)
            b = spin_grover(apply_photon_mode(c, mode), degree)
            worst = max(worst, np.max(np.abs(a.amplitudes - b.amplitudes)))
    assert criterion("C5 commutation", worst <= 1e-12, f"100 configs, max dev={worst:.1e}")


@pytest.mark.parametrize("weights", [(0.5, 0.5), (0.3, 0.7)])
def test_c6_end_to_end_oracle_equivalence(criterion, weights):
    mismatches, worst_rate = 0, 0.0
    runs = 0
    for count, db_seed in ((64, 11), (4096, 12)):
        records = generate_records(db_seed, count)
        index = build_index(records)
        for gi, g in enumerate(Gender):
            for d in Degree:
                out = search_two_dimensional(index, g, d, shots=1000, seed=runs, gender_weights=weights)
                runs += 1
                if set(out.names) != set(brute_force_filter(records, g, d)) or (out.gender, out.degree) != (g, d):
                    mismatches += 1
                worst_rate = max(worst_rate, abs(out.post_selection_rate - weights[gi]))
    ok = mismatches == 0 and worst_rate <= 0.06
    assert criterion(
        f"C6 end-to-end oracle equivalence (weights {weights})",
        ok,
        f"{runs} queries, mismatches={mismatches}, max rate dev={worst_rate:.3f}",
    )


def test_c7_dimensional_cost_invariance(criterion):
    index = build_index(generate_records(11, 64))
    out = search_two_dimensional(index, Gender.FEMALE, Degree.MASTER, shots=1000, seed=7)
    plain = run_grover(2, MarkedSet.of(2, [Degree.MASTER.spin_index]))
    ok = out.oracle_calls == plain.oracle_calls == 1 and out.photon_operations == 1
    assert criterion(
        "C7 dimensional-cost invariance",
        ok,
        f"2-D oracle calls={out.oracle_calls}, plain={plain.oracle_calls}, photons={out.photon_operations}",
    )


def test_c8_complexity_scaling(criterion):
    t0 = time.perf_counter()
    rows = run_benchmark(2, 12, trials=20, seed=8, shots=10000)
    elapsed = time.perf_counter() - t0
    Ns = [r.N for r in rows]
    exact = all(r.grover_oracle_calls == math.floor(math.pi / 4 * math.sqrt(r.N)) for r in rows)
    bounded = all(r.N <= r.classical_comparisons_mean <= 2 * r.N for r in rows)
    q_slope = loglog_slope(Ns, [r.grover_oracle_calls for r in rows])
    c_slope = loglog_slope(Ns, [r.classical_comparisons_mean for r in rows])
    ok = exact and bounded and abs(q_slope - 0.5) <= 0.05 and abs(c_slope - 1.0) <= 0.05 and elapsed < 60
    assert criterion(
        "C8 complexity scaling",
        ok,
        f"quantum slope={q_slope:.3f}, classical slope={c_slope:.3f}, floor formula={exact}, "
        f"classical in [N,2N]={bounded}, {elapsed:.1f}s",
    )


def test_c9_multi_marked(criterion):
    r = run_grover(4, MarkedSet.of(4, [0, 5, 10, 15]), IterationSchedule.fixed(1))
    dev = abs(r.marked_probability - 1.0)
    refused = 0
    for M in (8, 9, 15):
        try:
            run_grover(4, MarkedSet.of(4, range(M)), IterationSchedule.auto())
        except ValueError as e:
            refused += "classical" in str(e)
    auto_ok = run_grover(4, MarkedSet.of(4, [0, 5, 10, 15])).iterations_used == 1
    ok = dev <= 1e-9 and refused == 3 and auto_ok
    assert criterion("C9 multi-marked variant", ok, f"|P-1|={dev:.1e}, refusals={refused}/3")
