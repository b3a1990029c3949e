from itertools import combinations

import pytest

from domkernel.domination import Variant, enumerate_minimum_sets, solve_minimum
from domkernel.errors import InvalidArgumentError
from domkernel.gadgets import (
    build_gadget,
    build_ktuple_gadget,
    build_liars_gadget,
    build_planar_liars_gadget,
    forced_vertices,
    verify_equivalence,
)
from domkernel.generators import cycle, grid, path, random_graph
from domkernel.graph import Graph


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def test_ktuple_gadget_shape():
    g = cycle(5).graph
    inst = build_ktuple_gadget(g, 2, 3)
    assert inst.graph.live_count == 8
    assert inst.offset == 3
    assert inst.budget == 5
    clique = inst.new_vertices["forced_clique"]
    assert clique == [5, 6, 7]
    # clique is mutually adjacent; originals see all but the last member
    assert inst.graph.has_edge(5, 6) and inst.graph.has_edge(6, 7)
    for v in range(5):
        assert inst.graph.has_edge(v, 5) and inst.graph.has_edge(v, 6)
        assert not inst.graph.has_edge(v, 7)


def test_ktuple_k1_appends_isolated_vertex():
    g = path(3).graph
    inst = build_ktuple_gadget(g, 1, 1)
    assert inst.graph.live_count == 4
    assert inst.graph.degree(3) == 0
    rep = verify_equivalence(g, inst)
    assert rep["equivalent"] and rep["offset_matches"]


def test_ktuple_forced_clique_in_every_optimum():
    g = cycle(4).graph
    inst = build_ktuple_gadget(g, 0, 2)
    forced = forced_vertices(inst)
    # the last clique member can only be served by the clique itself, which
    # drags the whole clique into every solution
    assert forced == frozenset(inst.new_vertices["forced_clique"])
    for sol in enumerate_minimum_sets(inst.graph, inst.variant):
        assert forced <= set(sol)


def test_liars_gadget_shape_and_offset():
    g = path(2).graph
    inst = build_liars_gadget(g, 1)
    assert inst.offset == 4
    assert inst.budget == 5
    assert inst.graph.live_count == 7
    rep = verify_equivalence(g, inst)
    assert rep["equivalent"] and rep["offset_matches"]
    assert rep["source_gamma"] == 1
    assert rep["gadget_gamma"] == 5


def test_liars_gadget_single_vertex_source():
    g = Graph(1, [])
    inst = build_liars_gadget(g, 0)
    rep = verify_equivalence(g, inst)
    assert rep["source_gamma"] == 1
    assert rep["gadget_gamma"] == 5
    assert rep["equivalent"] and rep["offset_matches"]


def test_liars_gadget_exhaustive_small():
    checked = 0
    for n in range(1, 4):
        for g in all_graphs(n):
            inst = build_liars_gadget(g, 0)
            rep = verify_equivalence(g, inst)
            assert rep["equivalent"] and rep["offset_matches"], g.edges()
            checked += 1
    assert checked == 11


def test_planar_liars_pendants_and_embedding():
    pg = cycle(4)
    inst = build_planar_liars_gadget(pg, 0)
    assert inst.graph.live_count == 16
    assert inst.offset == 12
    assert inst.plane is not None  # embedding extended, planarity certified
    pendants = inst.new_vertices["pendants"]
    assert set(pendants) == {"0", "1", "2", "3"}
    x, y, z = pendants["0"]
    assert inst.graph.has_edge(0, x)
    assert inst.graph.has_edge(x, y)
    assert inst.graph.has_edge(y, z)
    assert inst.graph.degree(z) == 1


def test_planar_liars_equivalence_on_cycles_and_grids():
    for source in (cycle(3), cycle(5), grid(2, 2)):
        inst = build_planar_liars_gadget(source, 0)
        rep = verify_equivalence(source.graph, inst)
        assert rep["equivalent"] and rep["offset_matches"], source.graph.edges()


def test_planar_liars_accepts_plain_graph():
    g = path(3).graph
    inst = build_planar_liars_gadget(g, 2)
    assert inst.plane is None
    assert inst.budget == 2 + 9
    rep = verify_equivalence(g, inst)
    assert rep["equivalent"] and rep["offset_matches"]


def test_build_gadget_dispatch():
    g = path(3).graph
    assert build_gadget(g, "ktuple:2", 0).variant == Variant.ktuple(2)
    assert build_gadget(g, "liars", 0).variant == Variant.liars()
    assert build_gadget(g, "planar-liars", 0).variant == Variant.liars()
    with pytest.raises(InvalidArgumentError):
        build_gadget(g, "ktuple:zero", 0)
    with pytest.raises(InvalidArgumentError):
        build_gadget(g, "nonsense", 0)


def test_equivalence_fields_cover_budget_shift():
    g = random_graph(6, 500, 9)
    inst = build_ktuple_gadget(g, 3, 2)
    rep = verify_equivalence(g, inst)
    assert rep["budget"] == 5
    assert rep["source_budget"] == 3
    assert rep["gadget_gamma"] == rep["source_gamma"] + 2
