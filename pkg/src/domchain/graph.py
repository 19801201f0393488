"""Immutable labeled simple graphs backed by per-vertex adjacency bitmasks.

Vertices are labeled 0..n-1.  Each vertex carries an adjacency bitmask
(a Python int, so width is unbounded).  All surgery operations are pure:
they return a new Graph and never mutate the receiver, which makes Graph
values safe to share and usable as dict keys for memoization.
"""
from __future__ import annotations

from typing import Iterable, Iterator


class EdgeListParseError(ValueError):
    """Raised on malformed edge-list text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Trusted constructor: adj must already be a symmetric, loop-free
        # bitmask tuple.  Use from_edges() to build from untrusted input.
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # -- basic queries ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        """Closed-neighborhood bitmask N[v]."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                yield u, b.bit_length() - 1
                m ^= b

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return _bits(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex id {v} out of range for n={self.n}")

    # -- surgery ------------------------------------------------------------

    def induced(self, keep: list[int]) -> "Graph":
        """Induced subgraph on `keep`, relabeled 0..len(keep)-1 in the given order."""
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        return Graph(len(keep), tuple(adj))

    def delete_vertices(self, s: Iterable[int]) -> "Graph":
        drop = set(s)
        for v in drop:
            self._check_vertex(v)
        return self.induced([v for v in range(self.n) if v not in drop])

    def delete_closed_neighborhood(self, u: int) -> "Graph":
        """G - N[u]."""
        return self.delete_vertices(_bits(self.closed(u)))

    def contract_vertex(self, u: int) -> "Graph":
        """Join all pairs of N(u), then delete u (the G/u of deletion-style recurrences)."""
        self._check_vertex(u)
        nbrs = self.adj[u]
        adj = list(self.adj)
        for v in _bits(nbrs):
            adj[v] |= nbrs & ~(1 << v)
        return Graph(self.n, tuple(adj)).delete_vertices([u])

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def append_pendant(self, v: int) -> "Graph":
        """Add a new degree-1 vertex (label n) adjacent only to v."""
        self._check_vertex(v)
        adj = list(self.adj)
        adj[v] |= 1 << self.n
        adj.append(1 << v)
        return Graph(self.n + 1, tuple(adj))

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 and g2 side by side; g2's labels shifted up by g1.n."""
    shift = g1.n
    adj = list(g1.adj) + [m << shift for m in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union with v1 and v2 identified (neighbor sets merged).

    The merged vertex keeps label v1; the remaining g2 vertices follow
    g1's in their original relative order.
    """
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    n = g1.n + g2.n - 1
    # g2 vertex w != v2 maps to g1.n + rank of w among non-v2 vertices
    remap = {}
    r = 0
    for w in range(g2.n):
        if w == v2:
            remap[w] = v1
        else:
            remap[w] = g1.n + r
            r += 1
    adj = list(g1.adj) + [0] * (g2.n - 1)
    for a, b in g2.edges():
        u, v = remap[a], remap[b]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of connected components, each sorted, in order of smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        frontier = 1 << v
        comp = frontier
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(_bits(comp))
    return comps


# -- small standard graphs (test fixtures and recursion bases) -------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# -- edge-list text format -------------------------------------------------
#
# First meaningful line: "n m".  Then m lines "u v" with 0-based vertex ids.
# Blank lines and lines starting with '#' are ignored.

def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListParseError(line_no, f"expected header 'n m', got {line!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer header field in {line!r}")
            if header[0] < 0 or header[1] < 0:
                raise EdgeListParseError(line_no, "negative count in header")
            continue
        if len(fields) != 2:
            raise EdgeListParseError(line_no, f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer vertex id in {line!r}")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"vertex id out of range [0,{n}) in {line!r}")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(line_no, f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise EdgeListParseError(1, "empty input: missing 'n m' header")
    if len(edges) != header[1]:
        raise EdgeListParseError(1, f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out
