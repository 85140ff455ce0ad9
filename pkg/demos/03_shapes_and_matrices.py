"""Plus-sign and frame shapes, and a custom weighted sector matrix."""

from boxcover import SolverConfig, parse_matrix, solve, solve_shape, validate_instance
from boxcover.fileio import generate_points
from boxcover.model import CoverageMode, matrix_weight
from boxcover.oracle import brute_force_shape
from boxcover.svg import render_svg

inst = validate_instance(generate_points(25, seed=7))

for name in ("cross", "annulus"):
    sol = solve_shape(inst, name)
    print(f"{name:8s} objective {sol.objective:g}  gaps {sol.line_gaps} blocks {sol.block_boundaries}")
    render_svg(inst, sol, f"{name}.svg")

small = validate_instance(generate_points(7, seed=8))
print("cross on n=7:", solve_shape(small, "cross").objective, "oracle", brute_force_shape(small, "cross"))

# sector weights need not be 0/1: reward the centre, penalise the corners
case = parse_matrix("-1 1 -1 / 1 2 1 / -1 1 -1", case_id="weighted-plus")
sol = solve(inst, SolverConfig(mode=CoverageMode.SINGLE_MATRIX, cases=[case]))
print("weighted matrix objective", sol.objective)
assert sol.objective == matrix_weight(inst, case.matrix, sol.line_gaps, sol.block_boundaries)
