"""Maximum-weight placement of axis-aligned boxes over weighted planar points.

Covers the symmetric difference or union of ``k`` boxes, and single-matrix
shapes such as crosses and rectilinear annuli, with a line sweep driving a
generalized maximum-consecutive-subsequence tree.
"""

from .cases import (ActivationCase, IntervalRect, builtin_case, canonical_symdiff_cases,
                    configuration_count, parse_matrix, union_cases, verify_case)
from .gmcs import GMcsTree, build_gmcs, leaf_summary, merge_gmcs, query_gmcs, update_gmcs
from .mcs import McsTree, build_mcs, merge_mcs, query_mcs, update_mcs
from .model import (AxisBox, CoverageMode, DuplicateX, DuplicateY, Instance, InstanceError,
                    NonFinite, Solution, WeightedPoint, matrix_weight, realize_geometry,
                    region_weight, strip_of, validate_instance)
from .oracle import (SizeGuardError, brute_force_1d, brute_force_k_box, brute_force_shape,
                     brute_force_single_box)
from .sweep import (ConfigError, SolverConfig, solve, solve_shape, solve_single_box,
                    sweep_one_setting)

__version__ = "0.1.0"
