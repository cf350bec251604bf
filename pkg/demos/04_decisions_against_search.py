"""
Structure against brute force
=============================

For minimum degree at least three the answer follows from component count,
component sizes and the windmill shape. Here the rule is checked against
exhaustive search on a batch of random graphs, then on some unions of two
small components, where the larger side needs six vertices.
"""

from collections import Counter

from safecolor import (
    complete_bipartite,
    complete_graph,
    decide_safe_3,
    disjoint_union,
    gen_random_min_deg3,
    oracle_safe_3,
    prism_graph,
)

#%%
# Random graphs on 6 to 11 vertices.

tally = Counter()
for seed in range(120):
    g = gen_random_min_deg3(6 + seed % 6, (0.1, 0.3, 0.6)[seed % 3], seed)
    d = decide_safe_3(g)
    assert d.verdict == oracle_safe_3(g).verdict
    tally[d.reason] += 1
for reason, count in tally.most_common():
    print(f"{count:4d}  {reason}")

#%%
# Two components. K4 plus the 6-vertex prism is safe: the prism alone
# absorbs any attack that lands inside it, and the K4 keeps all three
# colors when the attack lands in the prism.

pieces = {"K4": complete_graph(4), "K5": complete_graph(5), "prism": prism_graph(), "K3,3": complete_bipartite(3, 3)}
for left, right in [("K4", "K4"), ("K4", "K5"), ("K5", "K5"), ("K4", "prism"), ("prism", "K3,3")]:
    g = disjoint_union(pieces[left], pieces[right])
    d = decide_safe_3(g)
    print(f"{left}+{right}: {d.verdict} ({d.reason}); search says {oracle_safe_3(g, limit=g.n).verdict}")
