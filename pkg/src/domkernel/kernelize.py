"""Reduction rule and kernelization for double domination.

For a vertex pair (u, v), split their common neighborhood N(u) ∩ N(v) by how
far its members can reach:

  exits      - common neighbors with at least one neighbor outside the common
               neighborhood and outside {u, v}
  guards     - remaining common neighbors adjacent to some exit
  prisoners  - the rest; their whole neighborhood is trapped inside

Whenever a pair has prisoners, every prisoner is dominated exactly by
{u, v} plus trapped vertices, so keeping a single prisoner and deleting the
guards and the other prisoners preserves the double domination number. The
kernelizer applies the rule to fixpoint and records a replayable trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidArgumentError
from .graph import Graph


@dataclass(frozen=True)
class CommonNeighborhoodPartition:
    pair: tuple[int, int]
    common: frozenset[int]
    exits: frozenset[int]
    guards: frozenset[int]
    prisoners: frozenset[int]


@dataclass(frozen=True)
class ReductionStep:
    """One rule application: what was deleted and which prisoner survived."""

    pair: tuple[int, int]
    removed_guards: tuple[int, ...]
    removed_prisoners: tuple[int, ...]
    kept_prisoner: int

    def as_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "removed_guards": list(self.removed_guards),
            "removed_prisoners": list(self.removed_prisoners),
            "kept_prisoner": self.kept_prisoner,
        }


@dataclass
class ReductionTrace:
    original_live: int
    reduced_live: int
    passes: int
    steps: list[ReductionStep] = field(default_factory=list)

    @property
    def deleted(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.steps:
            out.update(s.removed_guards)
            out.update(s.removed_prisoners)
        return frozenset(out)

    def as_dict(self) -> dict:
        return {
            "original_live": self.original_live,
            "reduced_live": self.reduced_live,
            "passes": self.passes,
            "steps": [s.as_dict() for s in self.steps],
        }


def partition_common_neighborhood(g: Graph, u: int, v: int) -> CommonNeighborhoodPartition:
    if u == v:
        raise InvalidArgumentError("pair must be two distinct vertices")
    nu = g.neighbors(u)
    nv = g.neighbors(v)
    common = nu & nv
    trapped = common | {u, v}
    exits = frozenset(x for x in common if g.neighbors(x) - trapped)
    guards = frozenset(
        x for x in common - exits if g.neighbors(x) & exits
    )
    prisoners = frozenset(common - exits - guards)
    return CommonNeighborhoodPartition((u, v), frozenset(common), exits, guards, prisoners)


def apply_reduction_rule(
    g: Graph, u: int, v: int
) -> tuple[Graph, ReductionStep | None]:
    """Apply the rule to one pair. No-op (returns (g, None)) when the pair has
    no prisoners, or a single prisoner and no guards: nothing to delete."""
    part = partition_common_neighborhood(g, u, v)
    if not part.prisoners:
        return g, None
    if len(part.prisoners) == 1 and not part.guards:
        return g, None
    keep = min(part.prisoners)
    doomed = set(part.guards) | (set(part.prisoners) - {keep})
    step = ReductionStep(
        pair=(u, v),
        removed_guards=tuple(sorted(part.guards)),
        removed_prisoners=tuple(sorted(part.prisoners - {keep})),
        kept_prisoner=keep,
    )
    return g.delete_vertices(doomed), step


def is_reduced(g: Graph) -> bool:
    """True iff no pair would delete anything (every pair with prisoners has
    exactly one prisoner and no guards)."""
    for u, v in combinations(g.vertices(), 2):
        part = partition_common_neighborhood(g, u, v)
        if part.prisoners and (len(part.prisoners) > 1 or part.guards):
            return False
    return True


def kernelize_double_domination(g: Graph) -> tuple[Graph, ReductionTrace]:
    """Apply the rule to fixpoint.

    Pairs are scanned in lexicographic order over live vertices; after every
    successful application the scan restarts on the shrunken graph. Terminates
    because each application deletes at least one vertex.
    """
    trace = ReductionTrace(original_live=g.live_count, reduced_live=g.live_count, passes=0)
    changed = True
    while changed:
        changed = False
        trace.passes += 1
        for u, v in combinations(g.vertices(), 2):
            g2, step = apply_reduction_rule(g, u, v)
            if step is not None:
                g = g2
                trace.steps.append(step)
                changed = True
                break
    trace.reduced_live = g.live_count
    assert is_reduced(g), "kernelization stopped before fixpoint"
    return g, trace
