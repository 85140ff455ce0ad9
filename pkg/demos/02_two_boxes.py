"""Two boxes: parity coverage versus plain union on the same points."""

from boxcover import CoverageMode, SolverConfig, solve, validate_instance
from boxcover.fileio import generate_points
from boxcover.oracle import brute_force_k_box

SD, UN = CoverageMode.SYMMETRIC_DIFFERENCE, CoverageMode.UNION

# ring of positives around a negative centre: one box must swallow the centre, two need not
ring = validate_instance([(0, 0, -9), (-1, -1.01, 2), (1.01, -1, 2), (-1.02, 1.03, 2), (1.04, 1.02, 2)])
for mode in (SD, UN):
    sol = solve(ring, SolverConfig(mode=mode))
    print(f"{mode.value:8s} objective {sol.objective:g}  case {sol.case_id}")
    for row in sol.matrix:
        print("    ", " ".join("#" if v else "." for v in row))

k1 = solve(ring, SolverConfig(k=1)).objective
print("one box only:", k1)

# random instance, compared with exhaustive search
inst = validate_instance(generate_points(9, seed=42))
for mode in (SD, UN):
    got = solve(inst, SolverConfig(mode=mode)).objective
    print(f"{mode.value:8s} n=9  solver {got:g}  oracle {brute_force_k_box(inst, 2, mode):g}")

# every case's own best, useful for seeing how close the runners-up come
sol = solve(inst, SolverConfig(record_all_cases=True))
top = sorted(sol.case_objectives.items(), key=lambda kv: -kv[1])[:5]
print("top cases:", top)
