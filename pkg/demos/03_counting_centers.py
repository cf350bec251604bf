"""
Three centers, seven counts
===========================

Whether three vertices can serve as centers of disjoint triplets depends
only on how their neighbourhoods overlap. Five inequalities on seven counts
settle it without trying any leaf assignment.
"""

import numpy as np

from safecolor import (
    assign_leaves,
    gen_random_min_deg3,
    neighborhood_profile,
    three_centers_test,
)

#%%
# A sparse random graph with minimum degree three.

g = gen_random_min_deg3(14, 0.1, seed=3)
print("n", g.n, "m", g.m, "degrees", np.bincount(g.degrees()))

#%%
# Tally how often random center triples pass, and confirm every passing
# triple really yields leaves.

rng = np.random.default_rng(0)
passed = 0
for _ in range(200):
    a, b, c = (int(x) for x in rng.choice(g.n, 3, replace=False))
    p = neighborhood_profile(g, a, b, c)
    if three_centers_test(p):
        passed += 1
        assert assign_leaves(g, (a, b, c)) is not None
    else:
        assert assign_leaves(g, (a, b, c)) is None
print(f"{passed}/200 triples pass")

#%%
# One profile, spelled out.

print(neighborhood_profile(g, 0, 1, 2))
