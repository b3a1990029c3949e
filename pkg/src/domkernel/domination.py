"""Domination variants, feasibility checkers, and exact minimum solvers.

Variants: plain domination (every vertex sees at least one chosen vertex in
its closed neighborhood), k-tuple domination (sees at least k), and liar's
domination (every vertex sees at least two, and every vertex pair sees at
least three in the union of their closed neighborhoods).

Two exact solvers are provided: subset enumeration ("brute") and a
branch-and-bound search ("bnb"). They are independent routes to the same
answer and the test-suite holds them to agreement; neither defers to the
other. Infeasibility (e.g. k-tuple with a vertex of degree < k-1) is a
first-class result, not an error.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import ceil

from .errors import (
    EmptyGraphError,
    InstanceTooLargeError,
    InvalidArgumentError,
    InvalidVertexError,
)
from .graph import Graph

DEFAULT_BRUTE_CAP = 24


@dataclass(frozen=True)
class Variant:
    """A domination flavor. kind is 'dominating', 'ktuple', or 'liars'; k is
    the per-vertex closed-neighborhood demand (2 for liar's condition (i))."""

    kind: str
    k: int = 1

    @classmethod
    def plain(cls) -> "Variant":
        return cls("dominating", 1)

    @classmethod
    def ktuple(cls, k: int) -> "Variant":
        if not isinstance(k, int) or k < 1:
            raise InvalidArgumentError(f"k must be a positive integer, got {k!r}")
        return cls("ktuple", k)

    @classmethod
    def liars(cls) -> "Variant":
        return cls("liars", 2)

    @classmethod
    def from_label(cls, label: str) -> "Variant":
        """Parse CLI spellings: 'dom', 'ktuple:K', 'liars'."""
        if label == "dom":
            return cls.plain()
        if label == "liars":
            return cls.liars()
        if label.startswith("ktuple:"):
            try:
                return cls.ktuple(int(label.split(":", 1)[1]))
            except ValueError:
                raise InvalidArgumentError(f"bad variant label {label!r}") from None
        raise InvalidArgumentError(f"bad variant label {label!r}")

    @property
    def label(self) -> str:
        if self.kind == "dominating":
            return "dom"
        if self.kind == "ktuple":
            return f"ktuple:{self.k}"
        return "liars"

    def __post_init__(self):
        if self.kind not in ("dominating", "ktuple", "liars"):
            raise InvalidArgumentError(f"unknown variant kind {self.kind!r}")
        if self.kind == "liars" and self.k != 2:
            raise InvalidArgumentError("liar's per-vertex demand is fixed at 2")
        if self.k < 1:
            raise InvalidArgumentError("per-vertex demand must be >= 1")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve. cardinality/vertices are None when the
    variant admits no dominating set at all on this graph."""

    variant: Variant
    feasible: bool
    cardinality: int | None
    vertices: tuple[int, ...] | None
    nodes_explored: int
    wall_time: float
    mode: str

    def as_dict(self) -> dict:
        return {
            "variant": self.variant.label,
            "feasible": self.feasible,
            "cardinality": self.cardinality,
            "set": list(self.vertices) if self.vertices is not None else None,
            "nodes_explored": self.nodes_explored,
            "wall_time": self.wall_time,
            "mode": self.mode,
        }


# -- reference checkers (set-based, no shortcuts) -----------------------------


def _checked_set(g: Graph, dset) -> set[int]:
    out = set(dset)
    for v in out:
        if not g.has_vertex(v):
            raise InvalidVertexError(f"vertex {v!r} not live in graph")
    return out


def is_dominating(g: Graph, dset) -> bool:
    d = _checked_set(g, dset)
    return all(d & g.closed_neighborhood(v) for v in g.vertices())


def is_k_tuple_dominating(g: Graph, dset, k: int) -> bool:
    if k < 1:
        raise InvalidArgumentError("k must be >= 1")
    d = _checked_set(g, dset)
    return all(len(d & g.closed_neighborhood(v)) >= k for v in g.vertices())


def is_liars_dominating(g: Graph, dset) -> bool:
    """Full definition check: per-vertex demand 2 plus the all-pairs union
    demand 3. Deliberately scans every pair; the solvers' pruned fast path is
    validated against this."""
    d = _checked_set(g, dset)
    verts = g.vertices()
    closed = {v: g.closed_neighborhood(v) for v in verts}
    for v in verts:
        if len(d & closed[v]) < 2:
            return False
    for u, v in combinations(verts, 2):
        if len(d & (closed[u] | closed[v])) < 3:
            return False
    return True


def check(g: Graph, dset, variant: Variant) -> bool:
    if variant.kind == "dominating":
        return is_dominating(g, dset)
    if variant.kind == "ktuple":
        return is_k_tuple_dominating(g, dset, variant.k)
    return is_liars_dominating(g, dset)


# -- bitmask machinery --------------------------------------------------------


class _Instance:
    """Bitmask view of the live graph for one solve: bit i of a mask stands
    for self.verts[i], and nbr[i] is the closed neighborhood of verts[i]."""

    def __init__(self, g: Graph):
        self.verts = g.vertices()
        index = {v: i for i, v in enumerate(self.verts)}
        self.nv = len(self.verts)
        self.full = (1 << self.nv) - 1
        self.nbr = []
        for v in self.verts:
            m = 1 << index[v]
            for w in g.neighbors(v):
                m |= 1 << index[w]
            self.nbr.append(m)
        self.max_closed_degree = max(m.bit_count() for m in self.nbr)

    def to_ids(self, mask: int) -> tuple[int, ...]:
        return tuple(self.verts[i] for i in range(self.nv) if mask >> i & 1)


def _tuple_ok(nbr: list[int], mask: int, demand: int) -> bool:
    return all((nm & mask).bit_count() >= demand for nm in nbr)


def _liars_pairs_full(nbr: list[int], mask: int) -> bool:
    nv = len(nbr)
    for a in range(nv):
        na = nbr[a]
        for b in range(a + 1, nv):
            if ((na | nbr[b]) & mask).bit_count() < 3:
                return False
    return True


def _liars_ok(nbr: list[int], mask: int) -> bool:
    # Condition (i) first; then the pair condition only needs pairs where both
    # sides have exactly two dominators (any third dominator on either side
    # already pushes the union to three).
    tight = []
    for i, nm in enumerate(nbr):
        c = (nm & mask).bit_count()
        if c < 2:
            return False
        if c == 2:
            tight.append(i)
    ok = True
    for x in range(len(tight)):
        na = nbr[tight[x]]
        for y in range(x + 1, len(tight)):
            if ((na | nbr[tight[y]]) & mask).bit_count() < 3:
                ok = False
                break
        if not ok:
            break
    assert ok == _liars_pairs_full(nbr, mask), "pruned pair check diverged"
    return ok


def _mask_ok(inst: _Instance, variant: Variant, mask: int) -> bool:
    if variant.kind == "liars":
        return _liars_ok(inst.nbr, mask)
    return _tuple_ok(inst.nbr, mask, variant.k)


# -- brute-force solver -------------------------------------------------------


def _solve_brute(inst: _Instance, variant: Variant) -> tuple[int | None, int]:
    """Returns (best mask or None, subsets tested)."""
    tested = 1
    if not _mask_ok(inst, variant, inst.full):
        return None, tested
    nv = inst.nv
    # Each chosen vertex can serve at most its closed degree units of demand.
    lower = ceil(variant.k * nv / inst.max_closed_degree)
    bits = [1 << i for i in range(nv)]
    for size in range(lower, nv + 1):
        for combo in combinations(bits, size):
            tested += 1
            mask = 0
            for b in combo:
                mask |= b
            if _mask_ok(inst, variant, mask):
                return mask, tested
    return inst.full, tested  # size == nv already verified feasible


# -- branch-and-bound solver --------------------------------------------------


def _solve_bnb(inst: _Instance, variant: Variant) -> tuple[int | None, int]:
    """Returns (best mask or None, nodes explored). Deterministic: branches on
    the lowest-index vertex with unmet demand, candidates in ascending index
    order, each tried candidate excluded for its later siblings."""
    if not _mask_ok(inst, variant, inst.full):
        return None, 1
    nbr = inst.nbr
    nv = inst.nv
    full = inst.full
    demand = variant.k
    liars = variant.kind == "liars"
    maxcd = inst.max_closed_degree

    best_size = nv
    best_mask = full
    nodes = 0

    def walk(chosen: int, excluded: int, count: int) -> None:
        nonlocal best_size, best_mask, nodes
        nodes += 1
        # Forced choices: a vertex whose remaining candidates exactly match its
        # unmet demand pins all of them.
        while True:
            addable = full & ~(chosen | excluded)
            forced = 0
            residual = 0
            branch_at = -1
            for i in range(nv):
                need = demand - (nbr[i] & chosen).bit_count()
                if need <= 0:
                    continue
                residual += need
                avail = nbr[i] & addable
                nav = avail.bit_count()
                if need > nav:
                    return  # cannot be completed
                if need == nav:
                    forced |= avail
                if branch_at < 0:
                    branch_at = i
            if not forced:
                break
            chosen |= forced
            count = chosen.bit_count()
            if count >= best_size:
                return

        if branch_at >= 0:
            if count + ceil(residual / maxcd) >= best_size:
                return
            cands = nbr[branch_at] & addable
            while cands:
                low = cands & -cands
                walk(chosen | low, excluded, count + 1)
                excluded |= low
                cands &= cands - 1
                if count + 1 >= best_size:
                    return
            return

        if liars:
            # Per-vertex demands met; hunt the first deficient pair.
            tight = [i for i in range(nv) if (nbr[i] & chosen).bit_count() == 2]
            for xi in range(len(tight)):
                a = tight[xi]
                for yi in range(xi + 1, len(tight)):
                    b = tight[yi]
                    if ((nbr[a] | nbr[b]) & chosen).bit_count() < 3:
                        if count + 1 >= best_size:
                            return
                        cands = (nbr[a] | nbr[b]) & addable
                        while cands:
                            low = cands & -cands
                            walk(chosen | low, excluded, count + 1)
                            excluded |= low
                            cands &= cands - 1
                            if count + 1 >= best_size:
                                return
                        return
            assert _liars_pairs_full(nbr, chosen), "missed a deficient pair"

        if count < best_size:
            best_size = count
            best_mask = chosen

    walk(0, 0, 0)
    return best_mask, nodes


# -- public entry points ------------------------------------------------------


def solve_minimum(
    g: Graph,
    variant: Variant,
    mode: str = "bnb",
    brute_cap: int | None = None,
) -> SolveResult:
    """Exact minimum dominating set for the given variant.

    mode 'brute' enumerates subsets and refuses graphs above brute_cap
    (default 24) live vertices; mode 'bnb' runs the branch-and-bound search.
    """
    if mode not in ("brute", "bnb"):
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    if g.live_count == 0:
        raise EmptyGraphError("cannot dominate an empty graph")
    cap = DEFAULT_BRUTE_CAP if brute_cap is None else brute_cap
    if mode == "brute" and g.live_count > cap:
        raise InstanceTooLargeError(
            f"{g.live_count} live vertices exceeds brute-force cap {cap}"
        )
    inst = _Instance(g)
    start = time.perf_counter()
    if mode == "brute":
        mask, nodes = _solve_brute(inst, variant)
    else:
        mask, nodes = _solve_bnb(inst, variant)
    elapsed = time.perf_counter() - start
    if mask is None:
        return SolveResult(variant, False, None, None, nodes, elapsed, mode)
    ids = inst.to_ids(mask)
    assert check(g, ids, variant), "solver returned a non-dominating set"
    return SolveResult(variant, True, len(ids), ids, nodes, elapsed, mode)


def enumerate_minimum_sets(
    g: Graph, variant: Variant, brute_cap: int | None = None
) -> list[frozenset[int]]:
    """All minimum sets for the variant (empty list when infeasible).

    Enumeration is subset-exhaustive at the optimum size, so the same cap as
    brute mode applies.
    """
    cap = DEFAULT_BRUTE_CAP if brute_cap is None else brute_cap
    if g.live_count == 0:
        raise EmptyGraphError("cannot dominate an empty graph")
    if g.live_count > cap:
        raise InstanceTooLargeError(
            f"{g.live_count} live vertices exceeds enumeration cap {cap}"
        )
    best = solve_minimum(g, variant, mode="bnb")
    if not best.feasible:
        return []
    inst = _Instance(g)
    out = []
    bits = [1 << i for i in range(inst.nv)]
    for combo in combinations(bits, best.cardinality):
        mask = 0
        for b in combo:
            mask |= b
        if _mask_ok(inst, variant, mask):
            out.append(frozenset(inst.to_ids(mask)))
    return out
