"""Budgeted reductions from plain domination to the harder variants.

Three constructions, each turning an instance (G, p) of minimum dominating
set into an instance (G', p') of a target variant so that gamma(G) <= p iff
gamma_variant(G') <= p':

  ktuple        adds a k-clique, all but one of whose members are adjacent to
                every original vertex; p' = p + k. Every k-tuple dominating
                set of G' must contain the whole clique.
  liars         adds a 5-vertex widget {u, u', v, v', w}: u and v are adjacent
                to every original vertex and to w; u' and v' are pendants on
                u and v; p' = p + 4. Every liar's dominating set must contain
                {u, u', v, v'}.
  planar-liars  appends a pendant 3-path to every vertex, preserving
                planarity (and any supplied embedding); p' = p + 3n.

The equivalence is established by the solvers, not assumed: verify_equivalence
computes both optima and checks the iff (equivalently, that the optimum shifts
by exactly the budget offset).
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import (
    Variant,
    enumerate_minimum_sets,
    solve_minimum,
)
from .errors import InvalidArgumentError
from .graph import Graph
from .plane import PlaneGraph, build_plane_graph


@dataclass(frozen=True)
class GadgetInstance:
    kind: str
    variant: Variant
    graph: Graph
    plane: PlaneGraph | None
    source_budget: int
    budget: int
    new_vertices: dict

    @property
    def offset(self) -> int:
        return self.budget - self.source_budget

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "variant": self.variant.label,
            "n": self.graph.live_count,
            "m": self.graph.edge_count,
            "source_budget": self.source_budget,
            "budget": self.budget,
            "new_vertices": self.new_vertices,
        }


def _check_budget(p: int) -> None:
    if not isinstance(p, int) or p < 0:
        raise InvalidArgumentError(f"budget must be a non-negative integer, got {p!r}")


def build_ktuple_gadget(g: Graph, p: int, k: int) -> GadgetInstance:
    """(G, p) for plain domination -> (G', p + k) for k-tuple domination.

    G' appends clique vertices c_1..c_k; every original vertex is joined to
    c_1..c_{k-1} (not to c_k). For k = 1 that is a single isolated vertex.
    """
    _check_budget(p)
    if k < 1:
        raise InvalidArgumentError("k must be >= 1")
    clique = list(range(g.n, g.n + k))
    edges = list(g.edges())
    live = g.vertices()
    for c in clique[:-1]:
        edges.extend((x, c) for x in live)
    edges.extend(
        (clique[i], clique[j]) for i in range(k) for j in range(i + 1, k)
    )
    g2 = Graph(g.n + k, edges)
    if g.deleted:
        g2 = g2.delete_vertices(g.deleted)
    return GadgetInstance(
        kind=f"ktuple:{k}",
        variant=Variant.ktuple(k),
        graph=g2,
        plane=None,
        source_budget=p,
        budget=p + k,
        new_vertices={"forced_clique": clique},
    )


def build_liars_gadget(g: Graph, p: int) -> GadgetInstance:
    """(G, p) for plain domination -> (G', p + 4) for liar's domination."""
    _check_budget(p)
    u, u_p, v, v_p, w = range(g.n, g.n + 5)
    edges = list(g.edges())
    for x in g.vertices():
        edges.append((x, u))
        edges.append((x, v))
    edges += [(u, u_p), (v, v_p), (w, u), (w, v)]
    g2 = Graph(g.n + 5, edges)
    if g.deleted:
        g2 = g2.delete_vertices(g.deleted)
    return GadgetInstance(
        kind="liars",
        variant=Variant.liars(),
        graph=g2,
        plane=None,
        source_budget=p,
        budget=p + 4,
        new_vertices={"u": u, "u_prime": u_p, "v": v, "v_prime": v_p, "w": w},
    )


def build_planar_liars_gadget(
    g: "Graph | PlaneGraph", k: int
) -> GadgetInstance:
    """(G, k) for plain domination on a planar graph -> (G', k + 3n) for
    liar's domination, planarity preserved.

    Every live vertex gets a pendant path v - x - y - z. When a PlaneGraph is
    supplied its rotation system is extended (the pendant slots in at the end
    of v's rotation) and re-validated; a bare Graph is taken on trust.
    """
    _check_budget(k)
    pg = g if isinstance(g, PlaneGraph) else None
    base = pg.graph if pg is not None else g
    live = base.vertices()
    n_live = len(live)
    edges = list(base.edges())
    pendants: dict[str, list[int]] = {}
    nxt = base.n
    for vtx in live:
        x, y, z = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(vtx, x), (x, y), (y, z)]
        pendants[str(vtx)] = [x, y, z]
    g2 = Graph(base.n + 3 * n_live, edges)
    if base.deleted:
        g2 = g2.delete_vertices(base.deleted)
    plane2 = None
    if pg is not None:
        rot = {}
        for vtx in live:
            x, y, z = pendants[str(vtx)]
            rot[vtx] = tuple(pg.rotation[vtx]) + (x,)
            rot[x] = (vtx, y)
            rot[y] = (x, z)
            rot[z] = (y,)
        plane2 = build_plane_graph(g2, rot)
    return GadgetInstance(
        kind="planar-liars",
        variant=Variant.liars(),
        graph=g2,
        plane=plane2,
        source_budget=k,
        budget=k + 3 * n_live,
        new_vertices={"pendants": pendants},
    )


def build_gadget(g, kind: str, budget: int) -> GadgetInstance:
    """Dispatch on the CLI spelling: 'ktuple:K', 'liars', 'planar-liars'."""
    if kind.startswith("ktuple:"):
        try:
            k = int(kind.split(":", 1)[1])
        except ValueError:
            raise InvalidArgumentError(f"bad gadget kind {kind!r}") from None
        base = g.graph if isinstance(g, PlaneGraph) else g
        return build_ktuple_gadget(base, budget, k)
    if kind == "liars":
        base = g.graph if isinstance(g, PlaneGraph) else g
        return build_liars_gadget(base, budget)
    if kind == "planar-liars":
        return build_planar_liars_gadget(g, budget)
    raise InvalidArgumentError(f"unknown gadget kind {kind!r}")


def forced_vertices(inst: GadgetInstance) -> frozenset[int]:
    """Vertices that must appear in every minimum solution of the gadget
    (empty for kinds without such a claim)."""
    if inst.kind.startswith("ktuple:"):
        return frozenset(inst.new_vertices["forced_clique"])
    if inst.kind == "liars":
        nv = inst.new_vertices
        return frozenset((nv["u"], nv["u_prime"], nv["v"], nv["v_prime"]))
    return frozenset()


def verify_equivalence(
    source: Graph, inst: GadgetInstance, mode: str = "bnb"
) -> dict:
    """Solve both sides and check gamma(G) <= p iff gamma_variant(G') <= p'.

    Also records whether the optimum shifted by exactly the budget offset,
    which is the two-sided form of the same statement.
    """
    src = solve_minimum(source, Variant.plain(), mode=mode)
    tgt = solve_minimum(inst.graph, inst.variant, mode=mode)
    src_yes = src.feasible and src.cardinality <= inst.source_budget
    tgt_yes = tgt.feasible and tgt.cardinality <= inst.budget
    return {
        "kind": inst.kind,
        "source_gamma": src.cardinality,
        "gadget_gamma": tgt.cardinality,
        "source_budget": inst.source_budget,
        "budget": inst.budget,
        "equivalent": src_yes == tgt_yes,
        "offset_matches": (
            tgt.feasible
            and src.feasible
            and tgt.cardinality == src.cardinality + inst.offset
        ),
    }


def forced_set_holds(inst: GadgetInstance, cap: int | None = None) -> bool:
    """True when every minimum gadget solution contains the forced vertices.
    Enumerates all minimum sets, so only feasible on small gadgets."""
    need = forced_vertices(inst)
    if not need:
        return True
    sols = enumerate_minimum_sets(inst.graph, inst.variant, brute_cap=cap)
    return bool(sols) and all(need <= s for s in sols)
