"""Vertex-disjoint connected triplets (paths on three vertices, triangle edge optional).

A triplet is stored center-first: the center is adjacent to both leaves.
Whether three given vertices can be centers of disjoint triplets depends only
on how their neighbourhoods overlap, which :func:`three_centers_test` reads
off seven counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .graph import Graph


class Triplet(NamedTuple):
    center: int
    leaves: tuple[int, int]

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.center, *self.leaves)


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Neighbourhood overlap counts for a triple of distinct vertices ``a, b, c``.

    ``nA`` counts neighbours of ``a`` other than ``b`` and ``c``; ``nAB``
    counts common neighbours of ``a`` and ``b`` outside ``{a, b, c}``; and so on.
    """

    nA: int
    nB: int
    nC: int
    nAB: int
    nAC: int
    nBC: int
    nABC: int

    @property
    def union(self) -> int:
        """Size of the union of the three neighbourhoods, by inclusion-exclusion."""
        return self.nA + self.nB + self.nC - self.nAB - self.nAC - self.nBC + self.nABC


def neighborhood_profile(g: Graph, a: int, b: int, c: int) -> NeighborhoodProfile:
    if len({a, b, c}) != 3:
        raise ValueError("profile needs three distinct vertices")
    abc = {a, b, c}
    sA = g.adjacency[a] - abc
    sB = g.adjacency[b] - abc
    sC = g.adjacency[c] - abc
    sAB = sA & sB
    return NeighborhoodProfile(
        nA=len(sA), nB=len(sB), nC=len(sC),
        nAB=len(sAB), nAC=len(sA & sC), nBC=len(sB & sC),
        nABC=len(sAB & sC),
    )


def three_centers_test(p: NeighborhoodProfile) -> bool:
    return (
        p.nA >= 2 and p.nB >= 2 and p.nC >= 2
        and p.nA + p.nB - p.nAB >= 4
        and p.nA + p.nC - p.nAC >= 4
        and p.nB + p.nC - p.nBC >= 4
        and p.union >= 6
    )


def two_centers_test(g: Graph, a: int, b: int) -> bool:
    if a == b:
        raise ValueError("two distinct vertices required")
    sA = g.adjacency[a] - {b}
    sB = g.adjacency[b] - {a}
    nAB = len(sA & sB)
    return len(sA) >= 2 and len(sB) >= 2 and len(sA) + len(sB) - nAB >= 4


def assign_leaves(g: Graph, centers: Sequence[int]) -> list[Triplet] | None:
    """Pick two private leaves for every center so that all vertices are distinct.

    This is a bipartite matching between leaf slots (two per center) and the
    non-center vertices, solved by augmenting paths. Slots and candidates are
    tried in ascending order, so the result is deterministic. Returns ``None``
    when no assignment exists.
    """
    cset = set(centers)
    slots = [c for c in centers for _ in range(2)]
    candidates = [sorted(g.adjacency[c] - cset) for c in slots]
    owner: dict[int, int] = {}  # leaf vertex -> slot index

    def augment(slot: int, visited: set[int]) -> bool:
        for v in candidates[slot]:
            if v not in owner:
                owner[v] = slot
                return True
        for v in candidates[slot]:
            if v in visited:
                continue
            visited.add(v)
            if v not in owner or augment(owner[v], visited):
                owner[v] = slot
                return True
        return False

    for slot in range(len(slots)):
        if not augment(slot, set()):
            return None
    leaves: dict[int, list[int]] = {c: [] for c in centers}
    for v, slot in owner.items():
        leaves[slots[slot]].append(v)
    return [Triplet(c, tuple(sorted(leaves[c]))) for c in centers]


def find_three_independent_triplets(g: Graph) -> list[Triplet] | None:
    """Three disjoint triplets, from the lexicographically first passing center triple.

    ``O(n^3)`` triples, each tested in ``O(n)``.
    """
    if g.n < 9:
        return None
    eligible = [v for v in range(g.n) if g.degree(v) >= 2]
    for a, b, c in combinations(eligible, 3):
        if three_centers_test(neighborhood_profile(g, a, b, c)):
            found = assign_leaves(g, (a, b, c))
            if found is None:  # pragma: no cover - the counting test is exact
                raise AssertionError(f"centers {a, b, c} passed the test but no leaves fit")
            return found
    return None


def find_two_independent_triplets(g: Graph) -> list[Triplet] | None:
    """Two disjoint triplets, from the lexicographically first passing center pair."""
    if g.n < 6:
        return None
    eligible = [v for v in range(g.n) if g.degree(v) >= 2]
    for a, b in combinations(eligible, 2):
        if two_centers_test(g, a, b):
            found = assign_leaves(g, (a, b))
            if found is None:  # pragma: no cover
                raise AssertionError(f"centers {a, b} passed the test but no leaves fit")
            return found
    return None


def is_independent_triplets(g: Graph, triplets: Sequence[Triplet]) -> bool:
    """True when every center is adjacent to its leaves and no vertex repeats."""
    seen: set[int] = set()
    for t in triplets:
        if any(not g.has_edge(t.center, leaf) for leaf in t.leaves):
            return False
        seen.update(t.vertices)
    return len(seen) == 3 * len(triplets)
