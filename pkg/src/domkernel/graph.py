"""Undirected simple graphs with stable integer ids, plus edge-list text I/O.

Vertices are named by dense ids 0..n-1. Deletion tombstones ids instead of
renumbering, so a vertex keeps its name for the whole lifetime of a reduction
trace. Graphs are immutable: every mutating operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from .errors import EmptyGraphError, FormatError, InvalidVertexError


class Graph:
    """Simple undirected graph on ids 0..n-1 with a tombstone set for deletions."""

    __slots__ = ("n", "_adj", "_dead")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._dead: frozenset[int] = frozenset()
        for u, v in edges:
            self._check_id(u)
            self._check_id(v)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}")
            self._adj[u].add(v)
            self._adj[v].add(u)

    @classmethod
    def _raw(cls, n: int, adj: list[set[int]], dead: frozenset[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g._adj = adj
        g._dead = dead
        return g

    def _check_id(self, v: int) -> None:
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise InvalidVertexError(f"vertex {v!r} outside 0..{self.n - 1}")

    def _check_live(self, v: int) -> None:
        self._check_id(v)
        if v in self._dead:
            raise InvalidVertexError(f"vertex {v} was deleted")

    # -- queries ------------------------------------------------------------

    def vertices(self) -> list[int]:
        """Live vertex ids in increasing order."""
        if not self._dead:
            return list(range(self.n))
        return [v for v in range(self.n) if v not in self._dead]

    @property
    def live_count(self) -> int:
        return self.n - len(self._dead)

    @property
    def deleted(self) -> frozenset[int]:
        return self._dead

    def has_vertex(self, v: int) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and v not in self._dead

    def has_edge(self, u: int, v: int) -> bool:
        self._check_live(u)
        self._check_live(v)
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_live(v)
        return frozenset(self._adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check_live(v)
        return frozenset(self._adj[v]) | {v}

    def degree(self, v: int) -> int:
        self._check_live(v)
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        out = []
        for u in self.vertices():
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    @property
    def edge_count(self) -> int:
        return sum(len(self._adj[v]) for v in self.vertices()) // 2

    def minimum_degree(self) -> int:
        if self.live_count == 0:
            raise EmptyGraphError("minimum degree of an empty graph")
        return min(len(self._adj[v]) for v in self.vertices())

    def distance(self, u: int, v: int) -> int | None:
        """Hop distance between live vertices, None if disconnected."""
        self._check_live(u)
        self._check_live(v)
        if u == v:
            return 0
        seen = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    if y == v:
                        return seen[y]
                    queue.append(y)
        return None

    def connected_components(self) -> list[list[int]]:
        """Components of the live graph, each sorted, ordered by smallest member."""
        seen: set[int] = set()
        comps = []
        for s in self.vertices():
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comp.sort()
            comps.append(comp)
        return comps

    # -- derived graphs -----------------------------------------------------

    def delete_vertices(self, targets: Iterable[int]) -> "Graph":
        """New graph with the given live vertices tombstoned; ids unchanged."""
        tset = set(targets)
        if not tset:
            return self
        for v in tset:
            self._check_live(v)
        adj = [set() for _ in range(self.n)]
        for u in range(self.n):
            if u in self._dead or u in tset:
                continue
            adj[u] = {w for w in self._adj[u] if w not in tset}
        return Graph._raw(self.n, adj, self._dead | frozenset(tset))

    def compact(self) -> tuple["Graph", dict[int, int]]:
        """Re-number live vertices densely; returns (graph, old id -> new id)."""
        live = self.vertices()
        relabel = {old: new for new, old in enumerate(live)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges()]
        return Graph(len(live), edges), relabel

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._dead == other._dead
            and self._adj == other._adj
        )

    __hash__ = None  # mutable-looking value type; not hashable

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, deleted={sorted(self._dead)})"


# -- edge-list text format ---------------------------------------------------
#
#   c <comment>
#   p <n> <m>
#   e <u> <v>
#
# ids are 0-based; exactly m edge lines must follow the header.


def parse_edge_list(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate p line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer counts") from None
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before p line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoints") from None
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise FormatError("missing p line")
    if len(edges) != m:
        raise FormatError(f"header claims {m} edges, found {len(edges)}")
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key}")
        seen.add(key)
    try:
        return Graph(n, edges)
    except InvalidVertexError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    """Canonical text for g. Tombstoned graphs are compacted first (the format
    has no way to name a dead id)."""
    if g.deleted:
        g, _ = g.compact()
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
