"""Region decompositions of plane graphs dominated by a double dominating set.

A region between two D-vertices u and v is a closed disk bounded by two
endpoint-sharing u-v paths of length at most 2 whose strictly interior
vertices are all common neighbors of u and v. A decomposition is a set of
regions, pairwise meeting only on boundaries, with no D-vertex other than the
endpoints inside any region. The greedy decomposer repeatedly picks the
lowest uncovered vertex and adds the largest admissible region containing it;
for a double dominating D this always covers every vertex.

Candidates are enumerated combinatorially: for every D-pair and every pair of
u-v paths of length <= 2, both sides of the boundary cycle are tested (on the
sphere both are closed sets bounded by the two paths). Two regions are
compatible when their interior face sets are disjoint and neither's strictly
interior vertices meet the other's vertex set; shared boundary vertices and
edges are allowed.

The per-region vertex caps (6 for reduced graphs under double domination, 5
under liar's, 4 under 3-tuple), the 3|D| region count, and the resulting
18/15/12 multiplier bounds are checked, never assumed; a violation produces a
replayable counterexample report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .domination import is_k_tuple_dominating
from .errors import InvalidArgumentError, InvalidInputError, RegionCoverageError
from .graph import format_edge_list
from .plane import PlaneGraph, cycle_sides, format_embedding, side_vertices

REGIMES = ("reduced-double", "liars", "ktuple3")

# regime -> (per-region vertex cap, global multiplier)
_REGIME_CONSTANTS = {
    "reduced-double": (6, 18),
    "liars": (5, 15),
    "ktuple3": (4, 12),
}


@dataclass(frozen=True)
class Region:
    """A candidate or chosen region between endpoints (u, v)."""

    endpoints: tuple[int, int]
    path_a: tuple[int, ...]
    path_b: tuple[int, ...]
    boundary_vertices: frozenset[int]
    interior_vertices: frozenset[int]
    interior_faces: frozenset[int]

    @property
    def vertices(self) -> frozenset[int]:
        return self.boundary_vertices | self.interior_vertices

    @property
    def degenerate(self) -> bool:
        return self.path_a == self.path_b

    def as_dict(self) -> dict:
        return {
            "endpoints": list(self.endpoints),
            "path_a": list(self.path_a),
            "path_b": list(self.path_b),
            "boundary": sorted(self.boundary_vertices),
            "interior": sorted(self.interior_vertices),
            "vertex_count": len(self.vertices),
        }


@dataclass
class RegionDecomposition:
    plane: PlaneGraph
    dset: tuple[int, ...]
    regions: list[Region] = field(default_factory=list)

    @property
    def covered(self) -> frozenset[int]:
        out: set[int] = set()
        for r in self.regions:
            out |= r.vertices
        return frozenset(out)

    def multigraph_edges(self) -> list[tuple[int, int]]:
        """One edge per region between its endpoints (parallel edges kept)."""
        return [
            (min(r.endpoints), max(r.endpoints)) for r in self.regions
        ]

    def as_dict(self) -> dict:
        return {
            "dset": list(self.dset),
            "live_vertices": self.plane.graph.live_count,
            "region_count": len(self.regions),
            "regions": [r.as_dict() for r in self.regions],
        }


def _compatible(r: Region, others) -> bool:
    for o in others:
        if r.interior_faces & o.interior_faces:
            return False
        if r.interior_vertices & o.vertices:
            return False
        if o.interior_vertices & r.vertices:
            return False
    return True


def _paths(g, u: int, v: int, dset: frozenset[int]) -> list[tuple[int, ...]]:
    """u-v paths of length <= 2 whose internal vertex is outside D (an internal
    D-vertex would sit in V(S) against the no-extra-D condition)."""
    out: list[tuple[int, ...]] = []
    if g.has_edge(u, v):
        out.append((u, v))
    for c in sorted(g.neighbors(u) & g.neighbors(v)):
        if c not in dset:
            out.append((u, c, v))
    return out


def enumerate_candidate_regions(
    pg: PlaneGraph, dset, x: int, existing
) -> list[Region]:
    """All regions S admissible for Algorithm step x: endpoints in D, x in
    V(S), no other D-vertex in V(S), compatible with every existing region."""
    g = pg.graph
    d = frozenset(dset)
    out: list[Region] = []
    for u, v in combinations(sorted(d), 2):
        paths = _paths(g, u, v, d)
        if not paths:
            continue
        common = g.neighbors(u) & g.neighbors(v)
        for p in paths:
            if x in p:
                r = Region((u, v), p, p, frozenset(p), frozenset(), frozenset())
                if _compatible(r, existing):
                    out.append(r)
        for pa, pb in combinations(paths, 2):
            cycle = {frozenset(e) for e in zip(pa, pa[1:])}
            cycle |= {frozenset(e) for e in zip(pb, pb[1:])}
            boundary = frozenset(pa) | frozenset(pb)
            for side in cycle_sides(pg, cycle):
                interior = side_vertices(pg, side, boundary)
                if not interior <= common:
                    continue
                if interior & d:
                    continue
                if x not in interior and x not in boundary:
                    continue
                r = Region((u, v), pa, pb, boundary, interior, side)
                if _compatible(r, existing):
                    out.append(r)
    return out


def _choice_key(r: Region):
    # largest vertex set first; ties broken by boundary then interior faces
    return (
        -len(r.vertices),
        tuple(sorted(r.boundary_vertices)),
        tuple(sorted(r.interior_faces)),
    )


def region_decomposition(pg: PlaneGraph, dset) -> RegionDecomposition:
    """Greedy decomposition: cover the lowest uncovered vertex with the
    largest admissible region until V = V(regions).

    Requires dset to be double dominating. If some uncovered vertex ever had
    no admissible candidate the covering argument would be falsified; that
    aborts with diagnostics rather than returning a partial decomposition.
    """
    g = pg.graph
    d = sorted(set(dset))
    for v in d:
        if not g.has_vertex(v):
            raise InvalidInputError(f"D contains non-live vertex {v}")
    if not is_k_tuple_dominating(g, d, 2):
        raise InvalidInputError("dset is not double dominating")
    rd = RegionDecomposition(pg, tuple(d))
    covered: set[int] = set()
    live = g.vertices()
    while True:
        uncovered = [v for v in live if v not in covered]
        if not uncovered:
            break
        x = uncovered[0]
        cands = enumerate_candidate_regions(pg, d, x, rd.regions)
        if not cands:
            raise RegionCoverageError(
                f"no admissible region covers vertex {x} "
                f"(|D|={len(d)}, {len(rd.regions)} regions so far); graph:\n"
                + format_edge_list(g)
            )
        best = min(cands, key=_choice_key)
        rd.regions.append(best)
        covered |= best.vertices
    return rd


# -- bound checking -------------------------------------------------------------


@dataclass
class BoundReport:
    regime: str
    dset_size: int
    live_vertices: int
    region_count: int
    region_limit: int
    max_region_vertices: int
    region_cap: int
    global_bound: int
    covers: bool
    thin_planar: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "regime": self.regime,
            "dset_size": self.dset_size,
            "live_vertices": self.live_vertices,
            "region_count": self.region_count,
            "region_limit": self.region_limit,
            "max_region_vertices": self.max_region_vertices,
            "region_cap": self.region_cap,
            "global_bound": self.global_bound,
            "covers": self.covers,
            "thin_planar": self.thin_planar,
            "ok": self.ok,
            "violations": list(self.violations),
        }


def thin_planar_check(rd: RegionDecomposition) -> bool:
    """Edge count test for the induced multigraph: at most 3|D| always, and at
    most 3|D| - 6 once |D| >= 3."""
    edges = len(rd.regions)
    nd = len(rd.dset)
    if edges > 3 * nd:
        return False
    if nd >= 3 and edges > 3 * nd - 6:
        return False
    return True


def check_region_bounds(rd: RegionDecomposition, regime: str) -> BoundReport:
    """Assert the per-regime area bounds on a finished decomposition.

    Violations are reported with enough context to replay, never silently
    dropped. The caller is responsible for handing in a decomposition built
    on a MINIMUM dominating set when reading global_bound as a kernel bound.
    """
    if regime not in _REGIME_CONSTANTS:
        raise InvalidArgumentError(f"unknown regime {regime!r} (know {REGIMES})")
    cap, mult = _REGIME_CONSTANTS[regime]
    nd = len(rd.dset)
    live = rd.plane.graph.live_count
    count = len(rd.regions)
    maxsz = max((len(r.vertices) for r in rd.regions), default=0)
    covers = rd.covered == frozenset(rd.plane.graph.vertices())
    thin = thin_planar_check(rd)
    rep = BoundReport(
        regime=regime,
        dset_size=nd,
        live_vertices=live,
        region_count=count,
        region_limit=3 * nd,
        max_region_vertices=maxsz,
        region_cap=cap,
        global_bound=mult * nd,
        covers=covers,
        thin_planar=thin,
    )
    if not covers:
        missing = sorted(set(rd.plane.graph.vertices()) - rd.covered)
        rep.violations.append(f"uncovered vertices {missing}")
    if count > 3 * nd:
        rep.violations.append(f"region count {count} exceeds 3|D| = {3 * nd}")
    if not thin:
        rep.violations.append(
            f"induced multigraph too dense for thin planarity ({count} edges on {nd} vertices)"
        )
    for i, r in enumerate(rd.regions):
        if len(r.vertices) > cap:
            rep.violations.append(
                f"region {i} between {r.endpoints} has {len(r.vertices)} vertices "
                f"(cap {cap}): {sorted(r.vertices)}"
            )
    if live > mult * nd:
        rep.violations.append(
            f"live vertex count {live} exceeds {mult}|D| = {mult * nd}"
        )
    if rep.violations:
        rep.violations.append("embedding:\n" + format_embedding(rd.plane))
    return rep


def genus_bound(gamma: int, eg: int, regime: str) -> int:
    """Vertex-count bound as a function of the domination number and the
    Euler genus of the host surface. eg = 0 gives the planar constants
    (18, 15, 12); for eg >= 1 the 3-tuple regime shares the liar's constant."""
    if regime not in _REGIME_CONSTANTS:
        raise InvalidArgumentError(f"unknown regime {regime!r} (know {REGIMES})")
    if gamma <= 0:
        raise InvalidArgumentError("gamma must be positive")
    if eg < 0:
        raise InvalidArgumentError("Euler genus must be non-negative")
    if eg == 0:
        return _REGIME_CONSTANTS[regime][1] * gamma
    if regime == "reduced-double":
        return 18 * (gamma + 32 * eg - 16)
    return 15 * (gamma + 32 * eg)


def to_dot(rd: RegionDecomposition) -> str:
    """Induced multigraph in DOT: D-vertices as nodes, one labeled edge per
    region (parallel edges preserved)."""
    lines = ["graph region_multigraph {"]
    for v in rd.dset:
        lines.append(f"  {v};")
    for i, r in enumerate(rd.regions):
        u, v = min(r.endpoints), max(r.endpoints)
        kind = "path" if r.degenerate else "disk"
        lines.append(f'  {u} -- {v} [label="R{i}:{kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
