"""Define a variety from scratch and inspect infinite monomial families.

Builds the first Hirzebruch surface directly in code (no JSON file),
derives the Stanley-Reisner generators from the maximal cones, and then
looks at what goes wrong on an incomplete fan: one neg-group becomes
infinite and the engine refuses to return a number for it.
"""

from toric_cohomology import (
    NonFiniteCohomologyError,
    ToricVarietyModel,
    cohomology,
    enumerate_neg_group,
    format_rationom,
    neg_group_count,
    sr_from_max_cones,
)
from toric_cohomology._bits import mask_from_1based, to_1based

# rays e1, e2, -e1+e2, -e2; cones are adjacent pairs
cones = tuple(mask_from_1based(c, 4) for c in [(1, 2), (2, 3), (3, 4), (4, 1)])
gens = tuple(sr_from_max_cones(cones, 4))
print("derived Stanley-Reisner generators:", [set(to_1based(g)) for g in gens])

hirzebruch = ToricVarietyModel(
    coordinate_names=("x1", "x2", "x3", "x4"),
    dim=2,
    charges=((1, 0), (0, 1), (1, 0), (1, 1)),
    sr_generators=gens,
    max_cones=cones,
)

for alpha in [(0, 0), (2, 1), (-3, -2)]:
    print(alpha, "->", cohomology(hirzebruch, alpha).dims)

# a finite neg-group, listed explicitly
alpha, sigma = (-3, -2), mask_from_1based((1, 2, 3, 4), 4)
count = neg_group_count(hirzebruch, alpha, sigma)
print(f"\nneg-group of {alpha} with all exponents negative: {count.value} monomials")
for u in enumerate_neg_group(hirzebruch, alpha, sigma):
    print("  ", format_rationom(hirzebruch, u))

# drop one maximal cone: the fan no longer covers the plane
partial_cones = cones[:3]
partial = ToricVarietyModel(
    coordinate_names=("x1", "x2", "x3", "x4"),
    dim=2,
    charges=((1, 0), (0, 1), (1, 0), (1, 1)),
    sr_generators=tuple(sr_from_max_cones(partial_cones, 4)),
    max_cones=partial_cones,
)
print("\nincomplete fan:")
try:
    cohomology(partial, (0, 0))
except NonFiniteCohomologyError as exc:
    print("  refused:", exc)
