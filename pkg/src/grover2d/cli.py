"""``grover2d`` command line.

Exit codes: 0 success, 1 I/O or parse failure, 2 usage error,
3 post-selection exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import bench
from .classical import QueryOrder, linear_search
from .composite import PostSelectionExhausted, search_two_dimensional
from .database import ParseError, brute_force_filter, build_index, generate_records, read_records, write_records
from .encoding import Degree, Gender
from .grover import IterationSchedule, MarkedSet, run_grover
from .statevector import MAX_QUBITS

SCHEMA_VERSION = 1

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_POSTSELECT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(report: dict) -> None:
    print(json.dumps({"schema_version": SCHEMA_VERSION, **report}, indent=2))


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _iterations(text: str):
    if text == "auto":
        return IterationSchedule.auto()
    try:
        return IterationSchedule.fixed(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--iterations takes 'auto' or K >= 0, got {text!r}") from None


def cmd_gen(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    try:
        records = generate_records(args.seed, args.count, args.gender_split, args.degree_weights)
    except ValueError as e:
        raise UsageError(str(e)) from None
    write_records(args.out, records)
    return EXIT_OK


def cmd_grover(args) -> int:
    if not 1 <= args.qubits <= MAX_QUBITS:
        raise UsageError(f"--qubits must be in [1, {MAX_QUBITS}]")
    if args.shots < 0:
        raise UsageError("--shots must be >= 0")
    try:
        marked = MarkedSet.of(args.qubits, args.marked)
        result = run_grover(args.qubits, marked, args.iterations, args.shots, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None

    freqs = {}
    if result.samples is not None:
        counts = Counter(int(s) for s in result.samples)
        freqs = {str(k): counts[k] / args.shots for k in sorted(counts)}
    _emit({
        "command": "grover",
        "n_qubits": args.qubits,
        "N": 1 << args.qubits,
        "marked": list(marked.indices),
        "iterations_used": result.iterations_used,
        "oracle_calls": result.oracle_calls,
        "predicted_success": result.predicted_success,
        "marked_probability": result.marked_probability,
        "shots": args.shots,
        "seed": args.seed,
        "empirical_success": result.empirical_success,
        "empirical_frequency": freqs,
    })
    return EXIT_OK


def cmd_search2d(args) -> int:
    if args.shots < 1:
        raise UsageError("--shots must be >= 1")
    records = read_records(args.db)
    if not records:
        raise UsageError(f"database {args.db} has no records")
    out = search_two_dimensional(build_index(records), args.gender, args.degree, args.shots, args.seed)
    reference = brute_force_filter(records, args.gender, args.degree)
    _emit({
        "command": "search2d",
        "query": {"gender": args.gender.value, "degree": args.degree.value},
        "photon_mode": out.photon_mode.value,
        "oracle_calls": out.oracle_calls,
        "photon_operations": out.photon_operations,
        "shots_used": out.shots_used,
        "post_selected": out.post_selected,
        "post_selection_rate": out.post_selection_rate,
        "decoded": {"gender": out.gender.value, "degree": out.degree.value},
        "names": out.names,
        "reference_names": reference,
        "match": sorted(out.names) == sorted(reference),
    })
    return EXIT_OK


def cmd_classical(args) -> int:
    records = read_records(args.db)
    res = linear_search(records, args.gender, args.degree, args.order)
    _emit({
        "command": "classical",
        "query": {"gender": args.gender.value, "degree": args.degree.value},
        "order": res.order.value,
        "records": len(records),
        "comparisons": res.comparisons,
        "names": res.names,
    })
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rows = bench.run_benchmark(args.min_qubits, args.max_qubits, args.trials, args.seed, args.shots)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = bench.rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grover2d", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a synthetic census CSV")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--gender-split", type=float, default=0.5, help="probability a record is female")
    p.add_argument("--degree-weights", type=_float_list, default=[0.25] * 4,
                   help="highschool,bachelor,master,doctorate weights")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("grover", help="run Grover search on a statevector")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--marked", type=_int_list, required=True)
    p.add_argument("--iterations", type=_iterations, default=IterationSchedule.auto())
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_grover)

    gender = dict(type=Gender.parse, choices=list(Gender), metavar="{female,male}", required=True)
    degree = dict(type=Degree.parse, choices=list(Degree),
                  metavar="{highschool,bachelor,master,doctorate}", required=True)

    p = sub.add_parser("search2d", help="two-dimensional quantum search over a census CSV")
    p.add_argument("--db", required=True)
    p.add_argument("--gender", **gender)
    p.add_argument("--degree", **degree)
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_search2d)

    p = sub.add_parser("classical", help="classical two-predicate linear scan")
    p.add_argument("--db", required=True)
    p.add_argument("--gender", **gender)
    p.add_argument("--degree", **degree)
    p.add_argument("--order", type=QueryOrder, choices=list(QueryOrder),
                   metavar="{gender-first,education-first}", default=QueryOrder.GENDER_FIRST)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("bench", help="oracle calls vs classical comparisons, CSV out")
    p.add_argument("--min-qubits", type=int, required=True)
    p.add_argument("--max-qubits", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PostSelectionExhausted as e:
        print(f"post-selection exhausted: {e}", file=sys.stderr)
        return EXIT_POSTSELECT
    except (OSError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
