"""Wall-clock growth of the two-box search; log-log slope between sizes."""

import math
import time

from boxcover import SolverConfig, solve, validate_instance
from boxcover.fileio import generate_points

solve(validate_instance(generate_points(4, 0)))  # jit warm-up

prev = None
for n in (10, 20, 30, 40):
    inst = validate_instance(generate_points(n, seed=n))
    t0 = time.perf_counter()
    sol = solve(inst, SolverConfig())
    dt = time.perf_counter() - t0
    slope = f"{math.log(dt / prev[1]) / math.log(n / prev[0]):.2f}" if prev else ""
    print(f"n={n:3d}  {dt:7.3f}s  events={sol.stats.events:>10d}  objective={sol.objective:g}  {slope}")
    prev = (n, dt)
