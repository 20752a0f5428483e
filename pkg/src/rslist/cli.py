"""Command-line front door: encode, decode, bench, selftest.

Exit codes: 0 success, 2 input validation error, 3 undecodable (too many
erasures). Problem files are UTF-8 JSON; field elements may be written as
integers or in "a^i" form.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import large_profile_problem, random_problem, run_interpolation_bench
from .decoder import decode_direct, decode_reduced
from .galois import GF8_POLY, Field
from .koetter import InterpolationPoint, InterpolationProblem, format_trace_row
from .polynomials import UniPoly
from .reencoding import TooManyErasures
from .rs_codec import CodeSpec, encode

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNDECODABLE = 3


def load_code(path: str) -> CodeSpec:
    with open(path, encoding="utf-8") as fh:
        return CodeSpec.from_json(json.load(fh))


def load_problem(path: str) -> tuple[InterpolationProblem, CodeSpec, int | None]:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    code = CodeSpec.from_json(obj["code"])
    f = code.field
    points = [
        InterpolationPoint(f.parse_element(p["x"]), f.parse_element(p["y"]), int(p.get("mult", 1)))
        for p in obj["points"]
    ]
    tau = obj.get("tau")
    return InterpolationProblem(f, points, code.k), code, tau


def cmd_encode(args) -> int:
    try:
        code = load_code(args.code)
        coeffs = [code.field.parse_element(c) for c in args.coefficient]
        word = encode(code, UniPoly(code.field, coeffs))
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    print(" ".join(code.field.format_element(c, not args.ints) for c in word))
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        problem, code, file_tau = load_problem(args.problem)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    tau = args.tau if args.tau is not None else file_tau
    try:
        if args.path == "direct":
            report = decode_direct(problem, tau, collect_trace=args.trace)
        else:
            report = decode_reduced(problem, tau, verify=args.verify, collect_trace=args.trace)
    except TooManyErasures as exc:
        print(f"undecodable: {exc}", file=sys.stderr)
        return EXIT_UNDECODABLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.trace and report.trace:
        for row in report.trace:
            print(format_trace_row(problem.field, row), file=sys.stderr)
    print(json.dumps(report.to_json(problem.field, not args.ints), sort_keys=True, indent=2))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = []
    for rep in range(args.repeat):
        if args.random:
            n, k, seed = args.random
            problem, _ = random_problem(int(n), int(k), int(seed) + rep)
        else:
            problem, _ = large_profile_problem(seed=args.seed + rep)
        rows.extend(run_interpolation_bench(problem))
    header = f"{'path':<10} {'constraints':>12} {'multiplications':>16} {'additions':>14} {'seconds':>9}"
    print(header)
    for row in rows:
        print(
            f"{row.path:<10} {row.constraints:>12} {row.multiplications:>16} "
            f"{row.additions:>14} {row.seconds:>9.3f}"
        )
    direct = [r.multiplications for r in rows if r.path == "direct"]
    reduced = [r.multiplications for r in rows if r.path == "reduced"]
    if direct and reduced and direct[0]:
        print(f"ratio reduced/direct: {reduced[0] / direct[0]:.6f}")
    return EXIT_OK


def _worked_problem() -> InterpolationProblem:
    f = Field(3, GF8_POLY)
    a = f.from_exponent
    pts = [
        InterpolationPoint(a(1), a(4), 2),
        InterpolationPoint(a(2), a(6), 1),
        InterpolationPoint(a(2), a(3), 1),
        InterpolationPoint(a(3), 1, 1),
        InterpolationPoint(a(3), a(1), 1),
        InterpolationPoint(1, a(1), 1),
        InterpolationPoint(1, 1, 1),
    ]
    return InterpolationProblem(f, pts, 2)


def cmd_selftest(args) -> int:
    """Decode the worked GF(8) instance both ways and check the known answers."""
    problem = _worked_problem()
    f = problem.field
    a = f.from_exponent
    expected = {(a(5), a(6)), (a(6), a(2))}
    failures = 0

    direct = decode_direct(problem)
    got = {tuple(c.f.to_json()) for c in direct.accepted()}
    ok = got == expected
    failures += not ok
    print(f"direct path candidates: {'ok' if ok else 'FAIL'}")

    reduced = decode_reduced(problem, tau=4)
    got = {tuple(c.f.to_json()) for c in reduced.accepted()}
    ok = got == expected
    failures += not ok
    print(f"reduced path candidates: {'ok' if ok else 'FAIL'}")

    ok = reduced.reduced_constraints == 5 and direct.n_constraints == 9
    failures += not ok
    print(f"constraint counts (9 -> 5): {'ok' if ok else 'FAIL'}")

    print("selftest:", "ok" if failures == 0 else f"{failures} failures")
    return EXIT_OK if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rslist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_enc = sub.add_parser("encode", help="evaluate a message polynomial on the code support")
    p_enc.add_argument("code", help="JSON code file")
    p_enc.add_argument("coefficient", nargs="+", help="message coefficients, ascending powers")
    p_enc.add_argument("--ints", action="store_true", help="print elements as integers")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = sub.add_parser("decode", help="list-decode an interpolation problem file")
    p_dec.add_argument("problem", help="JSON problem file")
    p_dec.add_argument("--path", choices=["direct", "reduced"], default="reduced")
    p_dec.add_argument("--tau", type=int, default=None, help="re-encoding error bound")
    p_dec.add_argument("--trace", action="store_true", help="emit per-iteration bases on stderr")
    p_dec.add_argument("--verify", action="store_true", help="expensive divisibility cross-check")
    p_dec.add_argument("--ints", action="store_true", help="print elements as integers")
    p_dec.set_defaults(func=cmd_decode)

    p_bench = sub.add_parser("bench", help="interpolation complexity comparison")
    p_bench.add_argument("--profile", choices=["large"], default="large")
    p_bench.add_argument("--random", nargs=3, metavar=("N", "K", "SEED"), default=None)
    p_bench.add_argument("--repeat", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.set_defaults(func=cmd_bench)

    p_self = sub.add_parser("selftest", help="decode the built-in worked example")
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
