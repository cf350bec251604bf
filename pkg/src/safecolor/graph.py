"""Simple undirected graphs on dense vertex ids, plus I/O and fixture generators."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over vertices ``0..n-1``.

    ``adjacency[v]`` is the frozenset of neighbours of ``v``. Use
    :meth:`from_edges` rather than building the adjacency by hand.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


def disjoint_union(*graphs: Graph) -> Graph:
    """Union of graphs, with vertex ids shifted in argument order."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# --------------------------------------------------------------------------- I/O


def _content_lines(text: str, comment: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield lineno, line


def _ints(parts: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` body edge-list format (0-indexed)."""
    lines = _content_lines(text, "#")
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n m' header") from None
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n, m = _ints(parts, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative", lineno)

    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = _ints(parts, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text (``c``/``p edge n m``/``e u v``, 1-indexed)."""
    n = None
    edges = []
    for lineno, line in _content_lines(text, "c"):
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge n m'", lineno)
            n, _ = _ints(parts[2:], lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e u v'", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex index out of range [1, {n}]", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def to_dimacs(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"p edge {g.n} {len(edges)}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in edges])


def load_graph(path) -> Graph:
    """Read a graph file, choosing DIMACS for ``.col``/``.dimacs`` suffixes."""
    path = str(path)
    with open(path, encoding="utf-8") as f:
        text = f.read()
    if path.endswith((".col", ".dimacs")):
        return parse_dimacs(text)
    return parse_edge_list(text)


# ------------------------------------------------------------------ structure


def _check_vertices(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return vs


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G \\ A`` as a compacted graph and the new-id -> old-id table.

    Surviving vertices keep their relative order, so ``old_ids`` is sorted.
    """
    gone = _check_vertices(g, removed)
    old_ids = [v for v in range(g.n) if v not in gone]
    new_id = {v: i for i, v in enumerate(old_ids)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges() if u in new_id and v in new_id]
    return Graph.from_edges(len(old_ids), edges), old_ids


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``; returns it with the new-id -> old-id table."""
    keep = _check_vertices(g, vertices)
    return remove_vertices(g, set(range(g.n)) - keep)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


# ----------------------------------------------------------------- generators


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, ((u, p + v) for u in range(p) for v in range(q)))


def petersen_graph() -> Graph:
    # outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cube_graph() -> Graph:
    """The 3-cube Q3: vertices are 3-bit words, edges join words at Hamming distance 1."""
    return Graph.from_edges(8, ((u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)))


def prism_graph() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def gen_double_windmill(l: int, centers_adjacent: bool = True) -> Graph:
    """Double windmill with ``l`` blades.

    Vertices 0 and 1 are the centers; blade ``i`` is the edge ``(2+2i, 3+2i)``.
    Every blade vertex is joined to both centers.
    """
    if l < 1:
        raise ValueError("a double windmill needs at least one blade")
    edges = [(0, 1)] if centers_adjacent else []
    for i in range(l):
        x, y = 2 + 2 * i, 3 + 2 * i
        edges += [(x, y), (0, x), (1, x), (0, y), (1, y)]
    return Graph.from_edges(2 * l + 2, edges)


def gen_random_min_deg3(n: int, edge_prob: float, seed: int) -> Graph:
    """Seeded G(n, p) sample, repaired so that every vertex has degree at least 3.

    Deficient vertices are visited in ascending order and joined to distinct
    non-neighbours drawn from the same generator.
    """
    if n < 4:
        raise ValueError("n >= 4 is needed for minimum degree 3")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < edge_prob
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in zip(iu[keep].tolist(), ju[keep].tolist()):
        adj[u].add(v)
        adj[v].add(u)
    for u in range(n):
        while len(adj[u]) < 3:
            candidates = [v for v in range(n) if v != u and v not in adj[u]]
            v = int(candidates[rng.integers(len(candidates))])
            adj[u].add(v)
            adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))
