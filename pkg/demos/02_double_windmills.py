"""
Double windmills
================

Two hubs joined to every vertex of ``l`` disjoint edges. Whether or not the
hubs are adjacent, seizing both hubs leaves only blades of size two, so no
piece can hold three colors. These are the only connected obstructions once
a graph has at least nine vertices and minimum degree three.
"""

from safecolor import decide_safe_3, gen_double_windmill, oracle_safe_3, recognize_double_windmill

#%%
# The recognizer recovers the shape after any relabeling.

for l in (3, 4, 5):
    for adjacent in (True, False):
        g = gen_double_windmill(l, adjacent)
        shape = recognize_double_windmill(g)
        print(f"l={l} adjacent={adjacent}: n={g.n} m={g.m} -> {shape}")

#%%
# The structural decision names the attack; exhaustive search agrees.

g = gen_double_windmill(4, centers_adjacent=False)
d = decide_safe_3(g)
print(d.verdict, d.reason, "attack", d.witness_attack)
print("exhaustive:", oracle_safe_3(g).verdict)
