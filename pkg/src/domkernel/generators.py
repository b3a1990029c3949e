"""Seeded instance generators for the benchmark corpora.

Every family is deterministic: the same spec yields a bit-identical graph
(and rotation system) on any platform. Randomness comes from splitmix64 -
a 64-bit state that advances by the golden-gamma constant 0x9E3779B97F4A7C15
and is finalized with the 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB mixers -
rather than any platform RNG, so seeds are portable across languages too.
Bounded draws use the Lemire multiply-shift, (x * n) >> 64.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidArgumentError
from .graph import Graph
from .plane import PlaneGraph, build_plane_graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 with the standard constants; splittable via split()."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw from 0..n-1 (Lemire multiply-shift)."""
        if n <= 0:
            raise InvalidArgumentError("below() needs a positive bound")
        return (self.next_u64() * n) >> 64

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class GeneratorSpec:
    """One corpus entry: a family name, its parameters, and a seed (ignored by
    the deterministic families)."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def name(self) -> str:
        parts = [self.family]
        parts.extend(f"{k}{self.params[k]}" for k in sorted(self.params))
        parts.append(f"s{self.seed}")
        return "-".join(str(p) for p in parts)

    def as_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "GeneratorSpec":
        return cls(d["family"], dict(d.get("params", {})), int(d.get("seed", 0)))


@dataclass(frozen=True)
class Instance:
    name: str
    spec: GeneratorSpec
    graph: Graph
    plane: PlaneGraph | None


def _int_param(spec: GeneratorSpec, key: str, low: int) -> int:
    try:
        val = int(spec.params[key])
    except KeyError:
        raise InvalidArgumentError(f"{spec.family} needs parameter {key!r}") from None
    if val < low:
        raise InvalidArgumentError(f"{spec.family}: {key} must be >= {low}, got {val}")
    return val


# -- fixed families ------------------------------------------------------------


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise InvalidArgumentError("cycle needs n >= 3")
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    rot = {i: ((i - 1) % n, (i + 1) % n) for i in range(n)}
    return build_plane_graph(g, rot)


def path(n: int) -> PlaneGraph:
    if n < 1:
        raise InvalidArgumentError("path needs n >= 1")
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    rot: dict[int, tuple[int, ...]] = {}
    for i in range(n):
        nbrs = [j for j in (i - 1, i + 1) if 0 <= j < n]
        rot[i] = tuple(nbrs)
    return build_plane_graph(g, rot)


def grid(rows: int, cols: int) -> PlaneGraph:
    if rows < 1 or cols < 1:
        raise InvalidArgumentError("grid needs rows, cols >= 1")

    def vid(i: int, j: int) -> int:
        return i * cols + j

    edges = []
    rot = {}
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i + 1 < rows:
                edges.append((vid(i, j), vid(i + 1, j)))
            cw = []
            if i > 0:
                cw.append(vid(i - 1, j))
            if j + 1 < cols:
                cw.append(vid(i, j + 1))
            if i + 1 < rows:
                cw.append(vid(i + 1, j))
            if j > 0:
                cw.append(vid(i, j - 1))
            rot[vid(i, j)] = tuple(cw)
    return build_plane_graph(Graph(rows * cols, edges), rot)


def wheel(rim: int) -> PlaneGraph:
    """Hub vertex rim..=id rim joined to a rim-cycle 0..rim-1."""
    if rim < 3:
        raise InvalidArgumentError("wheel needs rim >= 3")
    hub = rim
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(hub, i) for i in range(rim)]
    rot = {hub: tuple(range(rim))}
    for i in range(rim):
        rot[i] = ((i - 1) % rim, (i + 1) % rim, hub)
    return build_plane_graph(Graph(rim + 1, edges), rot)


_K4_ROT = {0: (1, 2, 3), 1: (2, 0, 3), 2: (0, 1, 3), 3: (0, 2, 1)}


def complete(n: int) -> tuple[Graph, PlaneGraph | None]:
    if n < 1:
        raise InvalidArgumentError("complete needs n >= 1")
    g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if n > 4:
        return g, None
    if n == 4:
        return g, build_plane_graph(g, _K4_ROT)
    rot = {v: tuple(w for w in range(n) if w != v) for v in range(n)}
    return g, build_plane_graph(g, rot)


# -- stacked (Apollonian) maximal planar graphs ---------------------------------


def stacked_planar(n: int, seed: int) -> PlaneGraph:
    """Maximal planar graph grown by repeated face splitting.

    Start from a triangle; each step picks a face uniformly via splitmix64 and
    joins a fresh vertex to its three corners. Every face stays a triangle, so
    m = 3n - 6 and minimum degree >= 3 throughout.
    """
    if n < 3:
        raise InvalidArgumentError("stacked needs n >= 3")
    rng = SplitMix64(seed)
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    # Oriented facial triangles (a, b, c) = directed edges (a,b),(b,c),(c,a).
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (1, 0, 2)]
    for w in range(3, n):
        a, b, c = faces.pop(rng.below(len(faces)))
        rot[b].insert(rot[b].index(a) + 1, w)
        rot[c].insert(rot[c].index(b) + 1, w)
        rot[a].insert(rot[a].index(c) + 1, w)
        rot[w] = [a, c, b]
        faces.extend(((a, b, w), (b, c, w), (c, a, w)))
    edges = [(v, u) for v, nbrs in rot.items() for u in nbrs if v < u]
    g = Graph(n, edges)
    return build_plane_graph(g, {v: tuple(r) for v, r in rot.items()})


# -- reduction-rule trigger gadgets ---------------------------------------------


def trigger(t: int, hub_edge: bool = False) -> PlaneGraph:
    """Two hubs (0 and 1) with t shared private neighbors 2..t+1: every common
    neighbor is a prisoner, so kernelization deletes t - 1 of them."""
    if t < 1:
        raise InvalidArgumentError("trigger needs t >= 1")
    u, v = 0, 1
    commons = list(range(2, t + 2))
    edges = [(u, c) for c in commons] + [(v, c) for c in commons]
    rot_u = list(commons)
    rot_v = list(reversed(commons))
    if hub_edge:
        edges.append((u, v))
        rot_u.append(v)
        rot_v.append(u)
    rot = {u: tuple(rot_u), v: tuple(rot_v)}
    for c in commons:
        rot[c] = (u, v)
    return build_plane_graph(Graph(t + 2, edges), rot)


def trigger_chain(count: int, t_max: int, seed: int) -> PlaneGraph:
    """count trigger gadgets in a row, consecutive hubs linked by an edge.

    Gadget sizes and hub edges are drawn from splitmix64, giving planar
    instances that exercise the reduction rule at several sites."""
    if count < 1 or t_max < 1:
        raise InvalidArgumentError("trigger_chain needs count, t_max >= 1")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    rot: dict[int, list[int]] = {}
    base = 0
    prev_hub = None
    for _ in range(count):
        t = 1 + rng.below(t_max)
        hub_edge = rng.below(2) == 1
        u, v = base, base + 1
        commons = list(range(base + 2, base + 2 + t))
        edges += [(u, c) for c in commons] + [(v, c) for c in commons]
        rot[u] = list(commons)
        rot[v] = list(reversed(commons))
        if hub_edge:
            edges.append((u, v))
            rot[u].append(v)
            rot[v].append(u)
        for c in commons:
            rot[c] = [u, v]
        if prev_hub is not None:
            edges.append((prev_hub, u))
            rot[prev_hub].append(u)
            rot[u].append(prev_hub)
        prev_hub = v
        base += 2 + t
    g = Graph(base, edges)
    return build_plane_graph(g, {v: tuple(r) for v, r in rot.items()})


def random_graph(n: int, density_permille: int, seed: int) -> Graph:
    """Labeled random graph: each pair kept when a splitmix64 draw below 1000
    lands under density_permille. No embedding."""
    if n < 1:
        raise InvalidArgumentError("random needs n >= 1")
    if not 0 <= density_permille <= 1000:
        raise InvalidArgumentError("density_permille must be in 0..1000")
    rng = SplitMix64(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.below(1000) < density_permille
    ]
    return Graph(n, edges)


FAMILIES = (
    "cycle",
    "path",
    "grid",
    "wheel",
    "complete",
    "stacked",
    "trigger",
    "trigger_chain",
    "random",
)


def generate(spec: GeneratorSpec) -> Instance:
    """Build the instance a spec describes. Planar families carry embeddings;
    'complete' above K4 and 'random' are plain graphs."""
    fam = spec.family
    if fam == "cycle":
        pg = cycle(_int_param(spec, "n", 3))
    elif fam == "path":
        pg = path(_int_param(spec, "n", 1))
    elif fam == "grid":
        pg = grid(_int_param(spec, "rows", 1), _int_param(spec, "cols", 1))
    elif fam == "wheel":
        pg = wheel(_int_param(spec, "rim", 3))
    elif fam == "complete":
        g, pg = complete(_int_param(spec, "n", 1))
        return Instance(spec.name, spec, g, pg)
    elif fam == "stacked":
        pg = stacked_planar(_int_param(spec, "n", 3), spec.seed)
    elif fam == "trigger":
        pg = trigger(_int_param(spec, "t", 1), bool(spec.params.get("hub_edge", False)))
    elif fam == "trigger_chain":
        pg = trigger_chain(
            _int_param(spec, "count", 1), _int_param(spec, "t_max", 1), spec.seed
        )
    elif fam == "random":
        g = random_graph(
            _int_param(spec, "n", 1), _int_param(spec, "density", 0), spec.seed
        )
        return Instance(spec.name, spec, g, None)
    else:
        raise InvalidArgumentError(f"unknown family {fam!r} (know {FAMILIES})")
    return Instance(spec.name, spec, pg.graph, pg)
