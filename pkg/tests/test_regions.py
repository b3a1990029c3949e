import pytest

from domkernel.domination import Variant, solve_minimum
from domkernel.errors import InvalidArgumentError, InvalidInputError
from domkernel.generators import GeneratorSpec, generate, grid, path, wheel
from domkernel.kernelize import kernelize_double_domination
from domkernel.plane import restrict_embedding
from domkernel.regions import (
    REGIMES,
    check_region_bounds,
    genus_bound,
    region_decomposition,
    thin_planar_check,
    to_dot,
)


def decompose(pg, variant):
    res = solve_minimum(pg.graph, variant)
    assert res.feasible
    return region_decomposition(pg, res.vertices), res


def test_degenerate_region_covers_edge():
    pg = path(2)
    rd = region_decomposition(pg, {0, 1})
    assert rd.covered == frozenset({0, 1})
    assert len(rd.regions) == 1
    assert rd.regions[0].degenerate


def test_cycle_liar_decomposition_frozen():
    inst = generate(GeneratorSpec("cycle", {"n": 6}))
    rd, res = decompose(inst.plane, Variant.liars())
    assert res.cardinality == 5
    assert len(rd.regions) == 4
    report = check_region_bounds(rd, "liars")
    assert report.ok
    assert report.covers
    assert report.max_region_vertices <= 5


def test_wheel_reduced_double_regime():
    inst = generate(GeneratorSpec("wheel", {"rim": 4}))
    red, trace = kernelize_double_domination(inst.graph)
    pg = restrict_embedding(inst.plane, trace.deleted)
    rd, res = decompose(pg, Variant.ktuple(2))
    report = check_region_bounds(rd, "reduced-double")
    assert report.ok
    assert res.cardinality == 3
    assert report.live_vertices <= 18 * res.cardinality


def test_grid_all_regimes_pass():
    pg = grid(2, 3)
    for regime, variant in (
        ("reduced-double", Variant.ktuple(2)),
        ("liars", Variant.liars()),
        ("ktuple3", Variant.ktuple(3)),
    ):
        rd, _ = decompose(pg, variant)
        report = check_region_bounds(rd, regime)
        assert report.ok, (regime, report.violations)


def test_region_count_and_caps_on_stacked_sweep():
    caps = {"reduced-double": 6, "liars": 5, "ktuple3": 4}
    for n in (6, 8, 10, 12):
        for seed in (0, 1, 2):
            inst = generate(GeneratorSpec("stacked", {"n": n}, seed))
            for regime, variant in (
                ("reduced-double", Variant.ktuple(2)),
                ("liars", Variant.liars()),
                ("ktuple3", Variant.ktuple(3)),
            ):
                pg = inst.plane
                if regime == "reduced-double":
                    red, trace = kernelize_double_domination(inst.graph)
                    pg = restrict_embedding(pg, trace.deleted) if trace.deleted else pg
                res = solve_minimum(pg.graph, variant)
                if not res.feasible:
                    continue
                rd = region_decomposition(pg, res.vertices)
                assert rd.covered == frozenset(pg.graph.vertices())
                assert len(rd.regions) <= 3 * len(res.vertices)
                worst = max((len(r.vertices) for r in rd.regions), default=0)
                assert worst <= caps[regime], (inst.name, regime, worst)


def test_region_interiors_are_common_neighbors():
    inst = generate(GeneratorSpec("stacked", {"n": 10}, 4))
    rd, _ = decompose(inst.plane, Variant.ktuple(2))
    g = inst.plane.graph
    for region in rd.regions:
        u, v = region.endpoints
        commons = g.neighbors(u) & g.neighbors(v)
        assert region.interior_vertices <= commons
        assert not region.interior_vertices & set(rd.dset)


def test_decomposition_requires_double_dominating_set():
    pg = grid(2, 3)
    with pytest.raises(InvalidInputError):
        region_decomposition(pg, {0})


def test_thin_planar_multigraph():
    inst = generate(GeneratorSpec("stacked", {"n": 12}, 1))
    rd, _ = decompose(inst.plane, Variant.ktuple(2))
    assert thin_planar_check(rd)


def test_bound_report_serializes():
    pg = grid(2, 2)
    rd, _ = decompose(pg, Variant.ktuple(2))
    report = check_region_bounds(rd, "reduced-double")
    d = report.as_dict()
    assert d["regime"] == "reduced-double"
    assert d["ok"] is True
    assert d["covers"] is True
    assert isinstance(d["violations"], list)
    assert set(REGIMES) == {"reduced-double", "liars", "ktuple3"}


def test_genus_bound_arithmetic_frozen():
    assert genus_bound(4, 0, "reduced-double") == 72
    assert genus_bound(4, 0, "liars") == 60
    assert genus_bound(4, 0, "ktuple3") == 48
    assert genus_bound(4, 2, "reduced-double") == 936
    assert genus_bound(4, 1, "liars") == 540
    assert genus_bound(4, 1, "ktuple3") == 540
    with pytest.raises(InvalidArgumentError):
        genus_bound(0, 0, "liars")
    with pytest.raises(InvalidArgumentError):
        genus_bound(3, -1, "liars")
    with pytest.raises(InvalidArgumentError):
        genus_bound(3, 0, "unknown")


def test_dot_export_mentions_every_region():
    pg = grid(2, 3)
    rd, _ = decompose(pg, Variant.ktuple(2))
    dot = to_dot(rd)
    assert dot.startswith("graph region_multigraph {")
    assert dot.count(" -- ") == len(rd.regions)
    for v in sorted(rd.dset):
        assert f"  {v};" in dot
