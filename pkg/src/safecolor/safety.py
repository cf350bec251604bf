"""Checking whether a vertex coloring survives every set of ``a`` attackers.

For a coloring with ``k`` colors and an attacker set ``A`` of size ``a`` the
coloring holds against ``A`` when

1. the attackers do not jointly own all ``k`` colors, and
2. some connected component of ``G \\ A`` still carries all ``k`` colors.

The coloring is ``a``-safe when this holds for every such ``A``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphFormatError, components

ATTACKERS_HOLD_ALL_COLORS = "attackers-hold-all-colors"
NO_RAINBOW_COMPONENT = "no-rainbow-component"


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices to colors ``1..k``; ``assignment[v]`` is the color of ``v``."""

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        object.__setattr__(self, "assignment", tuple(int(x) for x in self.assignment))
        for v, col in enumerate(self.assignment):
            if not 1 <= col <= self.k:
                raise ValueError(f"color {col} of vertex {v} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def permute_colors(self, perm: Sequence[int]) -> Coloring:
        """Apply ``perm`` (a permutation of ``1..k`` given as a length-k sequence) to each color."""
        return Coloring(self.k, tuple(perm[col - 1] for col in self.assignment))

    def relabel(self, perm: Sequence[int]) -> Coloring:
        """Coloring of the graph whose vertex ``v`` was renamed ``perm[v]``."""
        out = [0] * len(self.assignment)
        for v, col in enumerate(self.assignment):
            out[perm[v]] = col
        return Coloring(self.k, tuple(out))


@dataclass(frozen=True)
class VerifyResult:
    safe: bool
    witness: tuple[int, ...] | None = None
    violated_condition: str | None = None

    def __bool__(self) -> bool:
        return self.safe


def _check_pair(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries but graph has {g.n} vertices")


def component_color_sets(g: Graph, c: Coloring) -> list[set[int]]:
    """Colors present in each component of ``g``, in component order."""
    _check_pair(g, c)
    return [{c[v] for v in comp} for comp in components(g)]


def _has_rainbow_component(adjacency, colorbit, removed, full) -> bool:
    # One pass over the surviving vertices; each edge is touched at most twice.
    n = len(adjacency)
    seen = bytearray(removed)
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        bits = colorbit[s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    bits |= colorbit[w]
                    stack.append(w)
        if bits == full:
            return True
    return False


def verify_safe(g: Graph, c: Coloring, a: int) -> VerifyResult:
    """Check that ``c`` is an ``a``-safe coloring of ``g``.

    Attacker sets are swept in lexicographic order and the first violating
    one is returned as the witness. Each set costs one component scan of
    ``G \\ A``, so ``a = 2`` runs in ``O(n^2 m)``.
    """
    _check_pair(g, c)
    if a < 0:
        raise ValueError("a must be non-negative")
    if a > g.n:
        raise ValueError(f"a={a} exceeds the vertex count {g.n}")

    full = (1 << c.k) - 1
    colorbit = [1 << (col - 1) for col in c.assignment]
    adjacency = [tuple(s) for s in g.adjacency]
    removed = bytearray(g.n)
    for attackers in combinations(range(g.n), a):
        held = 0
        for v in attackers:
            held |= colorbit[v]
        if held == full:
            return VerifyResult(False, attackers, ATTACKERS_HOLD_ALL_COLORS)
        for v in attackers:
            removed[v] = 1
        ok = _has_rainbow_component(adjacency, colorbit, removed, full)
        for v in attackers:
            removed[v] = 0
        if not ok:
            return VerifyResult(False, attackers, NO_RAINBOW_COMPONENT)
    return VerifyResult(True)


# ------------------------------------------------------------------ file format


def parse_coloring(text: str) -> Coloring:
    """Parse ``n k`` header + one ``v c`` line per vertex; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected two integers", lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", lineno) from None
    if not rows:
        raise GraphFormatError("missing 'n k' header")
    _, n, k = rows[0]
    if n < 0 or k < 1:
        raise GraphFormatError("header needs n >= 0 and k >= 1", rows[0][0])
    assignment: list[int | None] = [None] * n
    for lineno, v, col in rows[1:]:
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex {v} out of range [0, {n})", lineno)
        if not 1 <= col <= k:
            raise GraphFormatError(f"color {col} outside 1..{k}", lineno)
        if assignment[v] is not None:
            raise GraphFormatError(f"vertex {v} colored twice", lineno)
        assignment[v] = col
    missing = [v for v, col in enumerate(assignment) if col is None]
    if missing:
        raise GraphFormatError(f"uncolored vertices: {missing[:10]}")
    return Coloring(k, tuple(assignment))


def to_coloring_text(c: Coloring) -> str:
    return "".join([f"{len(c)} {c.k}\n"] + [f"{v} {col}\n" for v, col in enumerate(c.assignment)])


def load_coloring(path) -> Coloring:
    with open(path, encoding="utf-8") as f:
        return parse_coloring(f.read())

