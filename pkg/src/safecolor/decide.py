"""Deciding and constructing safe 3-colorings (two attackers, three colors).

For graphs of minimum degree at least 3 the answer is structural:

* three or more components: always safe;
* two components: safe exactly when the larger one has at least 6 vertices;
* connected: safe exactly when ``n >= 9`` and the graph is not a double windmill.

:func:`oracle_safe_3` answers the same question by brute force and is the
ground truth the structural rule is tested against.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph, components, induced_subgraph, min_degree
from .safety import Coloring, verify_safe
from .triplets import Triplet, find_three_independent_triplets

SAFE = "safe-colorable"
NOT_SAFE = "not-safe-colorable"
OUT_OF_SCOPE = "out-of-scope"

DEFAULT_ORACLE_LIMIT = 12
# int64 bitmasks hold one bit per vertex
_MAX_ORACLE_N = 62
_CHUNK = 1 << 15


@dataclass(frozen=True)
class WindmillShape:
    l: int
    centers_adjacent: bool
    center_ids: tuple[int, int]
    blades: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Decision:
    verdict: str
    reason: str
    witness_coloring: Coloring | None = None
    witness_attack: str | None = None

    @property
    def safe(self) -> bool:
        return self.verdict == SAFE


class ConstructionError(RuntimeError):
    """A graph was decided safe but no witness coloring could be built."""


class OracleLimitError(ValueError):
    pass


# ------------------------------------------------------------- double windmill


def _windmill_with_centers(g: Graph, c1: int, c2: int) -> WindmillShape | None:
    blades = []
    for v in range(g.n):
        if v in (c1, c2):
            continue
        nbrs = g.adjacency[v]
        if len(nbrs) != 3 or c1 not in nbrs or c2 not in nbrs:
            return None
        (peer,) = nbrs - {c1, c2}
        if peer in (c1, c2):
            return None
        if v < peer:
            blades.append((v, peer))
    # degree-3 blade vertices with one peer each already force a perfect matching
    return WindmillShape(len(blades), g.has_edge(c1, c2), (c1, c2), tuple(blades))


def recognize_double_windmill(g: Graph) -> WindmillShape | None:
    """Return the windmill structure of ``g`` if it is a double windmill.

    Centers have degree ``n-1`` (adjacent variant) or ``n-2`` (non-adjacent);
    for ``n >= 6`` exactly two vertices reach that degree. On four vertices
    every pair is tried and the lowest valid one is reported.
    """
    n = g.n
    if n < 4 or n % 2:
        return None
    hubs = [v for v in range(n) if g.degree(v) >= n - 2]
    if n >= 6 and len(hubs) != 2:
        return None
    for c1, c2 in combinations(hubs, 2):
        shape = _windmill_with_centers(g, c1, c2)
        if shape is not None:
            return shape
    return None


# ---------------------------------------------------------------------- oracle


def _pair_component_masks(g: Graph) -> list[np.ndarray]:
    """For each attacker pair, the components of ``G \\ {u, v}`` as vertex bitmasks."""
    out = []
    for u, v in combinations(range(g.n), 2):
        seen = {u, v}
        masks = []
        for s in range(g.n):
            if s in seen:
                continue
            seen.add(s)
            mask = 0
            stack = [s]
            while stack:
                x = stack.pop()
                mask |= 1 << x
                for w in g.adjacency[x]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            masks.append(mask)
        out.append(np.array(masks, dtype=np.int64))
    return out


def canonical_colorings(n: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Yield, in lexicographic order, every 3-coloring of ``n`` vertices up to color renaming.

    Vertex 0 gets color 1 and color 3 never appears before color 2. Rows are
    colorings; chunks have at most ``chunk`` rows.
    """
    if n <= 1:
        yield np.ones((1, n), dtype=np.int8)
        return
    total = 3 ** (n - 1)
    powers = 3 ** np.arange(n - 2, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % 3
        rows = np.empty((idx.size, n), dtype=np.int8)
        rows[:, 0] = 1
        rows[:, 1:] = digits + 1
        tail = rows[:, 1:]
        # first non-1 color must be 2
        first = np.argmax(tail != 1, axis=1)
        lead = tail[np.arange(idx.size), first]
        keep = (lead != 3)
        if keep.any():
            yield rows[keep]


def _first_safe(g: Graph) -> Coloring | None:
    if g.n < 3:
        return None
    pair_masks = _pair_component_masks(g)
    bit = np.left_shift(np.int64(1), np.arange(g.n, dtype=np.int64))
    for rows in canonical_colorings(g.n):
        class_masks = [(rows == col).astype(np.int64) @ bit for col in (1, 2, 3)]
        safe = np.ones(rows.shape[0], dtype=bool)
        # two attackers never hold three colors, so only the rainbow condition is checked
        for comps in pair_masks:
            hit = np.zeros(rows.shape[0], dtype=bool)
            for cm in comps:
                hit |= ((class_masks[0] & cm) != 0) & ((class_masks[1] & cm) != 0) & ((class_masks[2] & cm) != 0)
            safe &= hit
            if not safe.any():
                break
        if safe.any():
            return Coloring(3, tuple(int(x) for x in rows[int(np.argmax(safe))]))
    return None


def oracle_safe_3(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> Decision:
    """Exhaustive ground truth: search all colorings (modulo color renaming)."""
    if g.n > limit:
        raise OracleLimitError(f"graph has {g.n} vertices, oracle limit is {limit}")
    if g.n > _MAX_ORACLE_N:
        raise OracleLimitError(f"oracle supports at most {_MAX_ORACLE_N} vertices")
    coloring = _first_safe(g)
    if coloring is None:
        return Decision(NOT_SAFE, "oracle")
    if not verify_safe(g, coloring, 2).safe:  # pragma: no cover - cross-check of two code paths
        raise AssertionError("oracle coloring rejected by verify_safe")
    return Decision(SAFE, "oracle", witness_coloring=coloring)


# ---------------------------------------------------------------- construction


def triplet_coloring(n: int, triplets: list[Triplet]) -> Coloring:
    """Make every triplet rainbow (center 2, leaves 1 and 3); everything else gets 1."""
    out = [1] * n
    for t in triplets:
        out[t.center] = 2
        out[t.leaves[1]] = 3
    return Coloring(3, tuple(out))


def construct_safe_3_coloring(g: Graph, search_limit: int = DEFAULT_ORACLE_LIMIT) -> Coloring | None:
    """Build a safe 3-coloring of ``g`` or return ``None``.

    Tried in order: three disjoint triplets; a component that is safe on its
    own, with the rest colored 1; exhaustive search when ``n <= search_limit``.
    """
    triplets = find_three_independent_triplets(g)
    if triplets is not None:
        return triplet_coloring(g.n, triplets)

    comps = components(g)
    if len(comps) > 1:
        for comp in comps:
            sub, old_ids = induced_subgraph(g, comp)
            sub_coloring = construct_safe_3_coloring(sub, search_limit)
            if sub_coloring is not None:
                out = [1] * g.n
                for new, old in enumerate(old_ids):
                    out[old] = sub_coloring[new]
                return Coloring(3, tuple(out))

    if g.n <= min(search_limit, _MAX_ORACLE_N):
        return _first_safe(g)
    return None


# -------------------------------------------------------------------- decision


def _structural_verdict(g: Graph) -> tuple[bool, str, str | None]:
    comps = components(g)
    if len(comps) >= 3:
        return True, "three-components", None
    if len(comps) == 2:
        small, big = sorted(len(c) for c in comps)
        if small >= 6:
            return True, "two-big-components", None
        if big >= 6:
            return True, "one-big-component", None
        return False, "component-size-obstruction", (
            "one vertex in each component, each carrying a color seen only once in its component"
        )
    if g.n <= 8:
        return False, "too-few-vertices", "the (at most two) vertices of the rarest color"
    shape = recognize_double_windmill(g)
    if shape is not None:
        return False, "is-double-windmill", "{%d,%d}" % shape.center_ids
    return True, "big-non-windmill-component", None


def decide_safe_3(g: Graph, oracle_fallback: bool = False, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> Decision:
    """Decide whether ``g`` has a safe 3-coloring.

    Graphs with a vertex of degree below 3 are out of scope unless
    ``oracle_fallback`` is set and ``n <= oracle_limit``. Safe verdicts always
    carry a witness coloring that has been re-checked by :func:`verify_safe`.
    """
    if g.n == 0:
        return Decision(NOT_SAFE, "too-few-vertices")
    if min_degree(g) < 3:
        if oracle_fallback and g.n <= oracle_limit:
            return oracle_safe_3(g, oracle_limit)
        return Decision(OUT_OF_SCOPE, "min-degree-below-3")

    safe, reason, attack = _structural_verdict(g)
    if not safe:
        return Decision(NOT_SAFE, reason, witness_attack=attack)
    coloring = construct_safe_3_coloring(g, oracle_limit)
    if coloring is None:
        raise ConstructionError(f"{reason}: no triplet structure and n={g.n} exceeds the search limit")
    if not verify_safe(g, coloring, 2).safe:
        raise ConstructionError(f"{reason}: constructed coloring failed verification")
    return Decision(SAFE, reason, witness_coloring=coloring)
