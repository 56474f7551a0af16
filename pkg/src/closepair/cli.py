"""Command-line surface: solve point files, run sweeps, trials, and model tables.

All results go to stdout as deterministic LF-terminated text; diagnostics go
to stderr.  Exit codes: 0 success, 2 input parse error, 3 invalid arguments
or violated preconditions.  Binary64 values are printed in their shortest
round-trip decimal form (integral values without a trailing ".0"), so output
parses back to bit-identical floats.
"""

import argparse
import sys

from .cost_model import analytic_total_cost
from .errors import EmptySweep, InsufficientPoints, InvalidPartition
from .experiments import gen_uniform_points, run_sweep, run_trials
from .geometry import OpCounter, Point, PointSet, final_distance
from .solvers import brute_force, closest_pair_2way, closest_pair_kway

PARSE_ERROR = 2
USAGE_ERROR = 3


class PointFileError(ValueError):
    """A point file line that does not hold two finite numbers."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def format_number(value: float) -> str:
    """Shortest decimal string that round-trips to the same binary64 value."""
    s = repr(float(value))
    return s[:-2] if s.endswith(".0") else s


def parse_points_text(text: str) -> PointSet:
    """Parse point-file content: two numbers per line, '#' comments and blanks skipped."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PointFileError(lineno, f"expected two numbers, got {len(fields)} fields")
        try:
            pts.append(Point(float(fields[0]), float(fields[1])))
        except ValueError as exc:
            raise PointFileError(lineno, str(exc)) from exc
    return PointSet(pts)


def _cmd_solve(args) -> int:
    if args.algo == "kway":
        if args.a is None:
            print("error: --a is required with --algo kway", file=sys.stderr)
            return USAGE_ERROR
    elif args.a is not None:
        print(f"error: --a is only valid with --algo kway, not {args.algo}", file=sys.stderr)
        return USAGE_ERROR
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return PARSE_ERROR
    points = parse_points_text(text)
    counter = OpCounter()
    if args.algo == "brute":
        result = brute_force(points, counter)
    elif args.algo == "two":
        result = closest_pair_2way(points, counter)
    else:
        if args.a > points.n:
            print(f"note: a={args.a} exceeds n={points.n}, clamped to {points.n}", file=sys.stderr)
        result = closest_pair_kway(points, args.a, counter)
    distance = format_number(final_distance(result.dist_sq))
    sys.stdout.write(f"{result.i} {result.j} {distance} {result.dc_used}\n")
    return 0


def _cmd_sweep(args) -> int:
    records = run_sweep(args.n, args.seed, args.a_min, args.a_max)
    out = ["a,dc_count,distance"]
    out.extend(f"{r.a},{r.dc_measured},{format_number(r.dist)}" for r in records)
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _cmd_trials(args) -> int:
    hist = run_trials(args.n, args.trials, args.seed, jobs=args.jobs)
    out = ["a,wins"]
    out.extend(f"{a},{hist.wins[a]}" for a in range(2, args.n + 1))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _cmd_model(args) -> int:
    if args.n < 2 or not 2 <= args.a_min <= args.a_max <= args.n:
        raise InvalidPartition(
            f"need 2 <= a-min <= a-max <= n, got [{args.a_min}, {args.a_max}] with n={args.n}"
        )
    out = ["a,strip_cost,local_cost,total"]
    for a in range(args.a_min, args.a_max + 1):
        c = analytic_total_cost(args.n, a)
        out.append(
            f"{a},{format_number(c.strip_cost)},{format_number(c.local_cost)},{format_number(c.total)}"
        )
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _cmd_gen(args) -> int:
    points = gen_uniform_points(args.n, args.seed)
    for p in points:
        sys.stdout.write(f"{format_number(p.x)} {format_number(p.y)}\n")
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for input files.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="closepair", description="Instrumented closest-pair solver suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a point file and print `i j distance dc_count`")
    p.add_argument("--input", required=True, help="point file: `x y` per line, '#' comments")
    p.add_argument("--algo", required=True, choices=["brute", "two", "kway"])
    p.add_argument("--a", type=int, default=None, help="partition parameter (kway only)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("sweep", help="measure one seeded instance across a range of a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--a-min", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("trials", help="histogram of the winning a over repeated trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (same output bytes)")
    p.set_defaults(func=_cmd_trials)

    p = sub.add_parser("model", help="analytic worst-case cost table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a-min", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.set_defaults(func=_cmd_model)

    p = sub.add_parser("gen", help="write a seeded uniform point file to stdout")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PointFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except (InsufficientPoints, InvalidPartition, EmptySweep, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
