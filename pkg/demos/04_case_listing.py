"""How the activation cases come out of line pairings."""

from boxcover import canonical_symdiff_cases, configuration_count, union_cases
from boxcover.cases import pairings

# four horizontal lines pair up three ways
print(list(pairings([0, 1, 2, 3])))

for k in (1, 2, 3, 4):
    print(f"k={k}: {configuration_count(k)} configurations")

sd = canonical_symdiff_cases(2)
un = union_cases(2)
print(len(sd), "parity cases,", len(un), "union cases for two boxes")

for c in sd[:3]:
    print(c.id, c.decomposition)
    print(c.array().astype(int))

print("three boxes:", len(canonical_symdiff_cases(3)), "parity,", len(union_cases(3)), "distinct union")
