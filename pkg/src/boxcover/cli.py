"""Command line interface: solve, oracle, check, gen, cases, verify, bench.

Exit codes: 0 ok, 1 verification or equivalence failure, 2 input error,
3 configuration error, 4 oracle size guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from pathlib import Path

from . import fileio
from .cases import (canonical_symdiff_cases, configuration_count, configurations, parse_matrix,
                    union_cases, verify_case)
from .model import CoverageMode, InstanceError, validate_instance
from .oracle import SizeGuardError, brute_force_k_box, brute_force_shape, brute_force_single_box
from .svg import render_svg
from .sweep import ConfigError, SolverConfig, solve, solve_shape, solve_single_box

log = logging.getLogger("boxcover")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CONFIG, EXIT_GUARD = 0, 1, 2, 3, 4
MODES = ["symdiff", "union", "single", "cross", "annulus", "matrix"]


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_instance(path, jitter=None, seed=0):
    try:
        raw = fileio.read_instance(path)
        if jitter:
            raw = fileio.jitter_points(raw, jitter, seed)
        return validate_instance(raw)
    except (OSError, ValueError, InstanceError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read instance {path}: {exc}") from None


def run_solver(instance, mode: str, k: int = 2, matrix_case=None, workers: int = 1):
    """Dispatch a mode name to the matching solver entry point."""
    if mode == "single":
        return solve_single_box(instance, workers=workers), 1
    if mode in ("cross", "annulus"):
        return solve_shape(instance, mode, workers=workers), 2
    if mode == "matrix":
        if matrix_case is None:
            raise ConfigError("--mode matrix needs --matrix-file")
        sol = solve(instance, SolverConfig(mode=CoverageMode.SINGLE_MATRIX, cases=[matrix_case],
                                           workers=workers))
        return sol, (matrix_case.m + 1) // 2
    return solve(instance, SolverConfig(k=k, mode=CoverageMode(mode), workers=workers)), k


def run_oracle(instance, mode: str, k: int = 2) -> float:
    if mode == "single":
        return brute_force_single_box(instance)
    if mode in ("cross", "annulus"):
        return brute_force_shape(instance, mode)
    if mode == "matrix":
        raise ConfigError("no exhaustive oracle for custom matrices")
    return brute_force_k_box(instance, k, CoverageMode(mode))


def _solved_objective(instance, mode, k):
    # indirection so the harness itself can be tested against a broken solver
    return run_solver(instance, mode, k)[0].objective


def cmd_solve(args) -> int:
    instance = _load_instance(args.input, args.jitter, args.seed)
    matrix_case = None
    if args.mode == "matrix":
        if not args.matrix_file:
            raise CliError(EXIT_CONFIG, "--mode matrix needs --matrix-file")
        try:
            matrix_case = parse_matrix(Path(args.matrix_file).read_text())
        except (OSError, ValueError) as exc:
            raise CliError(EXIT_INPUT, f"cannot read matrix: {exc}") from None
    start = time.perf_counter()
    try:
        sol, k = run_solver(instance, args.mode, args.k, matrix_case, args.workers)
    except (ConfigError, ValueError) as exc:
        raise CliError(EXIT_CONFIG, str(exc)) from None
    seconds = time.perf_counter() - start

    doc = fileio.result_document(instance, sol, k, seconds)
    text = fileio.dump_result(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        render_svg(instance, sol, args.svg)
    print(f"objective {sol.objective:g} case {sol.case_id} n {instance.n} ({seconds:.3f}s)",
          file=sys.stderr if not args.output else sys.stdout)
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance = _load_instance(args.input)
    try:
        value = run_oracle(instance, args.mode, args.k)
    except SizeGuardError as exc:
        raise CliError(EXIT_GUARD, str(exc)) from None
    except (ConfigError, ValueError) as exc:
        raise CliError(EXIT_CONFIG, str(exc)) from None
    print(f"oracle objective {value:g}")
    return EXIT_OK


def cmd_check(args) -> int:
    import numpy as np

    rng = np.random.default_rng(args.seed)
    for trial in range(args.trials):
        n = int(rng.integers(0, args.n_max + 1))
        raw = fileio.generate_points(n, int(rng.integers(0, 2**63)), "uniform-int:9")
        instance = validate_instance(raw)
        try:
            expected = run_oracle(instance, args.mode, args.k)
            got = _solved_objective(instance, args.mode, args.k)
        except SizeGuardError as exc:
            raise CliError(EXIT_GUARD, str(exc)) from None
        except (ConfigError, ValueError) as exc:
            raise CliError(EXIT_CONFIG, str(exc)) from None
        if got != expected:
            Path(args.fail_out).write_text(fileio.format_instance(raw))
            print(f"trial {trial}: solver {got:g} != oracle {expected:g} (n={n}); "
                  f"instance written to {args.fail_out}")
            return EXIT_FAIL
    print(f"{args.trials} trials agree ({args.mode}, k={args.k}, n<={args.n_max})")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        points = fileio.generate_points(args.n, args.seed, args.weight_dist, args.coord_range)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None
    text = fileio.format_instance(points)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cases(args) -> int:
    mode = CoverageMode(args.mode)
    try:
        cases = canonical_symdiff_cases(args.k) if mode is CoverageMode.SYMMETRIC_DIFFERENCE \
            else union_cases(args.k)
    except ValueError as exc:
        raise CliError(EXIT_CONFIG, str(exc)) from None
    for c in cases:
        rects = " ".join(f"[{r.row_lo}..{r.row_hi}]x[{r.col_lo}..{r.col_hi}]" for r in c.decomposition)
        print(f"{c.id}  {rects}")
        for row in c.matrix:
            print("    " + " ".join("1" if v else "." for v in row))
    print(f"{len(cases)} cases")
    if args.verify:
        raw = sum(1 for _ in configurations(args.k))
        bad = [c.id for c in cases if not verify_case(c)]
        print(f"{raw} configurations (expected {configuration_count(args.k)})")
        if bad or raw != configuration_count(args.k):
            print(f"verification failed: {bad}")
            return EXIT_FAIL
        print("all cases verified")
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = _load_instance(args.input)
    try:
        doc = json.loads(Path(args.result).read_text())
        ok, msg = fileio.verify_document(instance, doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read result: {exc}") from None
    print(msg)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print(f"{'n':>6} {'seconds':>10} {'work_items':>11} {'events':>12} {'objective':>10} {'slope':>7}")
    # compile the kernel before anything is timed
    run_solver(validate_instance([(0, 0, 1), (1, 1, -1)]), args.mode, 2)
    prev = None
    for n in sizes:
        est_events = math.comb(n + 3, 3) * n * 18 if args.mode != "single" else (n + 1) * n
        if est_events > args.max_events:
            print(f"{n:>6} skipped (about {est_events:.2e} sweep events > --max-events)")
            continue
        instance = validate_instance(fileio.generate_points(n, args.seed + n, "uniform-int:9"))
        start = time.perf_counter()
        sol, _ = run_solver(instance, args.mode, 2, workers=args.workers)
        seconds = time.perf_counter() - start
        slope = ""
        if prev is not None and prev[1] > 0 and n > prev[0]:
            slope = f"{math.log(seconds / prev[1]) / math.log(n / prev[0]):.2f}"
        st = sol.stats
        print(f"{n:>6} {seconds:>10.3f} {st.work_items:>11} {st.events:>12} "
              f"{sol.objective:>10g} {slope:>7}")
        prev = (n, seconds)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="boxcover", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal box placement for an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=MODES, default="symdiff")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--matrix-file")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--jitter", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive objective for small instances")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=MODES, default="symdiff")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="random solver-versus-oracle comparison")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", choices=MODES[:5], default="symdiff")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fail-out", default="check_failure.txt")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a random instance file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-dist", default="uniform-int:9")
    p.add_argument("--coord-range", type=float, default=1000.0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cases", help="list activation matrices")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", choices=["symdiff", "union"], default="symdiff")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_cases)

    p = sub.add_parser("verify", help="re-check a result document against its instance")
    p.add_argument("--input", required=True)
    p.add_argument("--result", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing table over instance sizes")
    p.add_argument("--sizes", default="20,30,40")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["symdiff", "union", "single"], default="symdiff")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-events", type=float, default=5e8)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
