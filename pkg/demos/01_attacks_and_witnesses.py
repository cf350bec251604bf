"""
Checking a coloring against two attackers
=========================================

Each vertex holds one of three colors. Two attackers seize any pair of
vertices. The coloring survives if the attackers do not already hold all
three colors, and some piece of what is left still holds all three.
"""

from safecolor import Coloring, petersen_graph, triplet_coloring, find_three_independent_triplets, verify_safe

#%%
# The Petersen graph has ten vertices and is 3-regular. A coloring that uses
# color 3 only once is easy to break: seize that vertex and one more.

g = petersen_graph()
weak = Coloring(3, (1, 2, 2, 1, 2, 1, 1, 2, 3, 1))
res = verify_safe(g, weak, 2)
print("weak coloring:", res.safe, res.witness, res.violated_condition)

#%%
# Three vertex-disjoint paths on three vertices, each colored 1-2-3
# (leaf, center, leaf), give every color a private copy in three places.

triplets = find_three_independent_triplets(g)
print("triplets:", triplets)
strong = triplet_coloring(g.n, triplets)
print("assignment:", strong.assignment)
print("two attackers:", verify_safe(g, strong, 2).safe)

#%%
# Safety against two attackers implies safety against one and zero.

print([verify_safe(g, strong, a).safe for a in (2, 1, 0)])
