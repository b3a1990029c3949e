"""Combinatorial plane embeddings: rotation systems, faces, and disks.

An embedding is a rotation system: for every vertex, the clockwise cyclic
order of its neighbors. Faces are recovered by the standard traversal - after
arriving along the directed edge (u, v), the walk leaves along (v, w) where w
follows u in the rotation at v. A rotation system is accepted as planar iff
Euler's formula n - m + f = 2 holds on every connected component; that check
is exact for orientable embeddings, so e.g. any rotation of K5 is rejected.

Isolated vertices have no incident face and cannot be located relative to a
disk; disks are therefore component-local and ignore other components.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    FormatError,
    InvalidEmbeddingError,
    InvalidRegionError,
    NotPlanarError,
)
from .graph import Graph, parse_edge_list


class PlaneGraph:
    """A graph together with a validated plane rotation system.

    faces[i] is a tuple of directed edges; outer_face picks the designated
    unbounded face (defaults to a longest face walk, lowest id on ties).
    """

    __slots__ = ("graph", "rotation", "faces", "outer_face", "_face_of")

    def __init__(self, graph: Graph, rotation: dict[int, tuple[int, ...]],
                 faces: list[tuple], outer_face: int, face_of: dict):
        self.graph = graph
        self.rotation = rotation
        self.faces = faces
        self.outer_face = outer_face
        self._face_of = face_of

    def face_of(self, u: int, v: int) -> int:
        """Face lying to the traversal side of the directed edge (u, v)."""
        try:
            return self._face_of[(u, v)]
        except KeyError:
            raise InvalidEmbeddingError(f"no directed edge ({u}, {v})") from None

    def face_vertices(self, face_id: int) -> tuple[int, ...]:
        return tuple(b for _, b in self.faces[face_id])

    def incident_faces(self, v: int) -> frozenset[int]:
        self.graph._check_live(v)
        return frozenset(
            self._face_of[(v, w)] for w in self.rotation[v]
        ) | frozenset(self._face_of[(w, v)] for w in self.rotation[v])

    def canonical_rotation(self, v: int) -> tuple[int, ...]:
        """Rotation at v rotated to start at the smallest neighbor."""
        rot = self.rotation[v]
        if not rot:
            return rot
        i = rot.index(min(rot))
        return rot[i:] + rot[:i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        if self.graph != other.graph:
            return False
        return all(
            self.canonical_rotation(v) == other.canonical_rotation(v)
            for v in self.graph.vertices()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(n={self.graph.live_count}, m={self.graph.edge_count}, "
            f"faces={len(self.faces)})"
        )


def build_plane_graph(
    graph: Graph,
    rotation: dict[int, "tuple[int, ...] | list[int]"],
    outer_face: int | None = None,
) -> PlaneGraph:
    """Validate a rotation system and derive its faces.

    Raises InvalidEmbeddingError when rotations disagree with the incident
    edges, NotPlanarError when any component fails Euler's formula.
    """
    live = graph.vertices()
    rot: dict[int, tuple[int, ...]] = {}
    for v in live:
        if v not in rotation:
            raise InvalidEmbeddingError(f"missing rotation for vertex {v}")
        seq = tuple(rotation[v])
        if len(set(seq)) != len(seq) or set(seq) != set(graph.neighbors(v)):
            raise InvalidEmbeddingError(
                f"rotation at {v} is not a permutation of its neighbors"
            )
        rot[v] = seq
    extra = set(rotation) - set(live)
    if extra:
        raise InvalidEmbeddingError(f"rotation given for non-live vertices {sorted(extra)}")

    pos = {v: {u: i for i, u in enumerate(rot[v])} for v in live}
    face_of: dict[tuple[int, int], int] = {}
    faces: list[tuple] = []
    for start in sorted((u, v) for u in live for v in rot[u]):
        if start in face_of:
            continue
        walk = []
        a, b = start
        while (a, b) not in face_of:
            face_of[(a, b)] = len(faces)
            walk.append((a, b))
            nxt = rot[b][(pos[b][a] + 1) % len(rot[b])]
            a, b = b, nxt
        faces.append(tuple(walk))

    # Euler per connected component (isolated vertices are trivially planar).
    comp_of = {}
    for ci, comp in enumerate(graph.connected_components()):
        for v in comp:
            comp_of[v] = ci
        if len(comp) == 1:
            continue
        n_i = len(comp)
        m_i = sum(len(rot[v]) for v in comp) // 2
        f_i = len({face_of[(v, w)] for v in comp for w in rot[v]})
        if n_i - m_i + f_i != 2:
            raise NotPlanarError(
                f"component of vertex {comp[0]}: n={n_i} m={m_i} f={f_i}, "
                f"Euler gives {n_i - m_i + f_i} != 2"
            )

    if outer_face is None:
        if faces:
            outer_face = max(range(len(faces)), key=lambda i: (len(faces[i]), -i))
        else:
            outer_face = 0
    elif faces and not (0 <= outer_face < len(faces)):
        raise InvalidEmbeddingError(f"outer face {outer_face} out of range")
    return PlaneGraph(graph, rot, faces, outer_face, face_of)


def restrict_embedding(pg: PlaneGraph, targets) -> PlaneGraph:
    """Embedding of pg minus the given vertices, cyclic orders inherited.

    Vertex deletion cannot break planarity, so an Euler failure here is an
    internal inconsistency, not a caller error.
    """
    tset = set(targets)
    g2 = pg.graph.delete_vertices(tset)
    rot2 = {
        v: tuple(w for w in pg.rotation[v] if w not in tset)
        for v in g2.vertices()
    }
    try:
        return build_plane_graph(g2, rot2)
    except NotPlanarError as exc:  # pragma: no cover - would be a bug
        raise RuntimeError(f"restriction broke the Euler invariant: {exc}") from exc


# -- disks bounded by two short paths -----------------------------------------


@dataclass(frozen=True)
class Disk:
    """A closed disk bounded by two endpoint-sharing paths of length <= 2.

    Degenerate disks (both paths identical) have empty interior. For proper
    disks, interior_faces is one side of the boundary cycle and
    interior_vertices are the vertices incident only to that side.
    """

    path_a: tuple[int, ...]
    path_b: tuple[int, ...]
    boundary_vertices: frozenset[int]
    interior_vertices: frozenset[int]
    interior_faces: frozenset[int]

    @property
    def degenerate(self) -> bool:
        return not self.interior_faces and self.path_a == self.path_b

    @property
    def vertices(self) -> frozenset[int]:
        return self.boundary_vertices | self.interior_vertices


def _validate_boundary_path(pg: PlaneGraph, path) -> tuple[int, ...]:
    p = tuple(path)
    if len(p) not in (2, 3):
        raise InvalidRegionError(f"boundary path {p} must have 1 or 2 edges")
    if len(set(p)) != len(p):
        raise InvalidRegionError(f"boundary path {p} is not simple")
    for a, b in zip(p, p[1:]):
        if not pg.graph.has_edge(a, b):
            raise InvalidRegionError(f"boundary path {p}: missing edge ({a}, {b})")
    return p


def _path_edges(p: tuple[int, ...]) -> set[frozenset[int]]:
    return {frozenset(e) for e in zip(p, p[1:])}


def cycle_sides(
    pg: PlaneGraph, cycle_edges: set[frozenset[int]]
) -> tuple[frozenset[int], frozenset[int]]:
    """Split the faces of the cycle's component into the two sides of a simple
    cycle. Faces of other components belong to neither side."""
    cycle_edges = {frozenset(e) for e in cycle_edges}
    parent = list(range(len(pg.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b), fid in pg._face_of.items():
        if a < b and frozenset((a, b)) not in cycle_edges:
            ra, rb = find(fid), find(pg._face_of[(b, a)])
            if ra != rb:
                parent[ra] = rb

    roots = set()
    for e in cycle_edges:
        a, b = sorted(e)
        roots.add(find(pg._face_of[(a, b)]))
        roots.add(find(pg._face_of[(b, a)]))
    if len(roots) != 2:
        raise InvalidRegionError(
            f"boundary cycle does not split its component (got {len(roots)} sides)"
        )
    ra, rb = sorted(roots)
    side_a = frozenset(f for f in range(len(pg.faces)) if find(f) == ra)
    side_b = frozenset(f for f in range(len(pg.faces)) if find(f) == rb)
    return side_a, side_b


def side_vertices(pg: PlaneGraph, side: frozenset[int], boundary: frozenset[int]) -> frozenset[int]:
    """Vertices strictly inside a side: incident to its faces, not on the boundary."""
    out: set[int] = set()
    for f in side:
        for _, b in pg.faces[f]:
            if b not in boundary:
                out.add(b)
    return frozenset(out)


def disk_between(pg: PlaneGraph, path_a, path_b) -> Disk:
    """The disk bounded by two u-v paths of length <= 2.

    The paths must share endpoints and nothing else. Identical paths give the
    degenerate disk. Otherwise the boundary is a simple cycle; the interior is
    the side not containing the designated outer face (when the outer face
    belongs to another component, the side with fewer faces, smallest face ids
    on a tie).
    """
    pa = _validate_boundary_path(pg, path_a)
    pb = _validate_boundary_path(pg, path_b)
    if pa[0] != pb[0] or pa[-1] != pb[-1]:
        raise InvalidRegionError(f"paths {pa} and {pb} do not share endpoints")
    if pa == pb:
        return Disk(pa, pb, frozenset(pa), frozenset(), frozenset())
    shared_internal = set(pa[1:-1]) & set(pb[1:-1])
    if shared_internal:
        raise InvalidRegionError(
            f"paths share internal vertices {sorted(shared_internal)}"
        )
    cycle = _path_edges(pa) | _path_edges(pb)
    if len(cycle) != (len(pa) - 1) + (len(pb) - 1):
        raise InvalidRegionError(f"paths {pa} and {pb} reuse an edge")
    side_a, side_b = cycle_sides(pg, cycle)
    boundary = frozenset(pa) | frozenset(pb)
    if pg.outer_face in side_a:
        inner = side_b
    elif pg.outer_face in side_b:
        inner = side_a
    else:
        inner = min(
            (side_a, side_b), key=lambda s: (len(s), tuple(sorted(s)))
        )
    return Disk(pa, pb, boundary, side_vertices(pg, inner, boundary), inner)


# -- embedding text format -----------------------------------------------------
#
# Edge-list header plus one rotation line per vertex:
#
#   r <v> <n1> <n2> ... <nk>
#
# listing v's neighbors in clockwise order.


def parse_embedding(text: str) -> PlaneGraph:
    edge_lines = []
    rot_lines: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.split()[0] == "r":
            fields = line.split()
            try:
                ids = [int(x) for x in fields[1:]]
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer rotation entry") from None
            if not ids:
                raise FormatError(f"line {lineno}: empty r record")
            v, nbrs = ids[0], tuple(ids[1:])
            if v in rot_lines:
                raise FormatError(f"line {lineno}: duplicate rotation for {v}")
            rot_lines[v] = nbrs
        else:
            edge_lines.append(line)
    g = parse_edge_list("\n".join(edge_lines) + "\n")
    rotation = {}
    for v in g.vertices():
        if v in rot_lines:
            rotation[v] = rot_lines[v]
        elif g.degree(v) == 0:
            rotation[v] = ()
        else:
            raise FormatError(f"missing rotation line for vertex {v}")
    bogus = set(rot_lines) - set(g.vertices())
    if bogus:
        raise FormatError(f"rotation for unknown vertices {sorted(bogus)}")
    try:
        return build_plane_graph(g, rotation)
    except InvalidEmbeddingError as exc:
        raise FormatError(str(exc)) from None


def format_embedding(pg: PlaneGraph) -> str:
    """Canonical text: edge-list header, then one rotation line per vertex in
    id order, each rotation started at its smallest neighbor. Tombstoned
    embeddings are compacted first."""
    g = pg.graph
    if g.deleted:
        compacted, relabel = g.compact()
        rot = {
            relabel[v]: tuple(relabel[w] for w in pg.rotation[v])
            for v in g.vertices()
        }
        pg = build_plane_graph(compacted, rot)
        g = compacted
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    for v in g.vertices():
        entries = " ".join(str(w) for w in pg.canonical_rotation(v))
        lines.append(f"r {v} {entries}".rstrip())
    return "\n".join(lines) + "\n"
