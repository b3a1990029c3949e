import json

import pytest

from domkernel.cli import main
from domkernel.harness import normalize_report

TINY_CORPUS = {
    "kernel": [
        {"family": "stacked", "params": {"n": 8}, "seed": 0},
        {"family": "trigger", "params": {"t": 3, "hub_edge": False}, "seed": 0},
    ],
    "region": [{"family": "wheel", "params": {"rim": 5}, "seed": 0}],
    "gadget": {
        "ktuple": {"seeds": 3, "n_max": 5, "ks": [2]},
        "liars_exhaustive_max_n": 2,
        "planar_liars": {"cycles": [4], "grids": []},
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_then_solve(tmp_path, capsys):
    gpath = tmp_path / "c6.graph"
    code, _, _ = run(capsys, "gen", "--family", "cycle", "--n", "6", "-o", str(gpath))
    assert code == 0
    text = gpath.read_text()
    assert text.startswith("p 6 6\n")
    assert any(line.startswith("r ") for line in text.splitlines())

    code, out, _ = run(capsys, "solve", str(gpath), "--variant", "ktuple:2", "--mode", "brute")
    assert code == 0
    payload = json.loads(out)
    assert payload["cardinality"] == 4
    assert payload["feasible"] is True
    assert len(payload["set"]) == 4
    for key in ("cardinality", "set", "feasible", "nodes_explored", "wall_time"):
        assert key in payload


def test_gen_edges_only(tmp_path, capsys):
    gpath = tmp_path / "c5.graph"
    code, _, _ = run(capsys, "gen", "--family", "cycle", "--n", "5",
                     "--edges-only", "-o", str(gpath))
    assert code == 0
    assert not any(line.startswith("r ") for line in gpath.read_text().splitlines())


def test_gen_missing_param(capsys):
    code, _, err = run(capsys, "gen", "--family", "grid", "--rows", "2")
    assert code == 3
    assert "cols" in err


def test_kernelize_with_trace(tmp_path, capsys):
    gpath = tmp_path / "t.graph"
    run(capsys, "gen", "--family", "trigger", "--t", "5", "-o", str(gpath))
    trace = tmp_path / "trace.json"
    code, out, _ = run(capsys, "kernelize", str(gpath), "--trace", str(trace))
    assert code == 0
    assert out.startswith("p 3 2\n")
    payload = json.loads(trace.read_text())
    assert payload["original_live"] == 7
    assert payload["reduced_live"] == 3
    assert payload["id_map"] == {"0": 0, "1": 1, "2": 2}
    assert len(payload["steps"]) == 1


def test_regions_auto_and_dot(tmp_path, capsys):
    gpath = tmp_path / "c6.graph"
    run(capsys, "gen", "--family", "cycle", "--n", "6", "-o", str(gpath))
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "regions", str(gpath), "--dset", "auto",
                       "--regime", "liars", "--dot", str(dot))
    assert code == 0
    payload = json.loads(out)
    assert payload["bounds_report"]["ok"] is True
    assert payload["counts"]["covered"] == 6
    assert all({"u", "v", "boundary", "interior"} <= set(r) for r in payload["regions"])
    assert dot.read_text().startswith("graph region_multigraph {")


def test_regions_explicit_dset(tmp_path, capsys):
    gpath = tmp_path / "c4.graph"
    run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(gpath))
    code, out, _ = run(capsys, "regions", str(gpath), "--dset", "0,1,2")
    assert code == 0
    assert json.loads(out)["counts"]["dset"] == 3
    # a set that does not doubly dominate is an input error
    code, _, err = run(capsys, "regions", str(gpath), "--dset", "0")
    assert code == 3
    assert "error" in err


def test_gadget_verify_and_meta(tmp_path, capsys):
    gpath = tmp_path / "c6.graph"
    run(capsys, "gen", "--family", "cycle", "--n", "6", "-o", str(gpath))
    meta = tmp_path / "meta.json"
    code, out, err = run(capsys, "gadget", str(gpath), "--kind", "ktuple:3",
                         "--param", "2", "--meta", str(meta), "--verify", "12")
    assert code == 0
    assert out.startswith("p 9 ")
    payload = json.loads(meta.read_text())
    assert payload["budget"] == 5
    assert payload["verify"]["ran"] is True
    assert payload["verify"]["equivalent"] is True
    assert "equivalent=True" in err


def test_gadget_verify_cap_skips(tmp_path, capsys):
    gpath = tmp_path / "c6.graph"
    run(capsys, "gen", "--family", "cycle", "--n", "6", "-o", str(gpath))
    meta = tmp_path / "meta.json"
    code, _, _ = run(capsys, "gadget", str(gpath), "--kind", "planar-liars",
                     "--meta", str(meta), "--verify", "10")
    assert code == 0
    assert json.loads(meta.read_text())["verify"]["ran"] is False


def test_missing_file_is_infra_error(capsys):
    code, _, err = run(capsys, "solve", "no-such-file.graph")
    assert code == 3
    assert "error" in err


def test_bench_tiny_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps(TINY_CORPUS))
    report = tmp_path / "report.json"
    csv = tmp_path / "bench.csv"
    code, _, err = run(capsys, "bench", "--suite", "all", "--corpus", str(corpus),
                       "--out", str(report), "--csv", str(csv), "--no-figures")
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["ok"] is True
    assert set(payload["suites"]) == {"kernel", "region", "gadget"}
    assert csv.read_text().startswith("suite,")
    assert "suites:" in err


def test_bench_renders_figures(tmp_path, capsys):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps(TINY_CORPUS))
    csv = tmp_path / "bench.csv"
    code, _, err = run(capsys, "bench", "--suite", "kernel", "--corpus", str(corpus),
                       "--out", str(tmp_path / "r.json"), "--csv", str(csv))
    assert code == 0
    pngs = sorted(p.name for p in tmp_path.iterdir() if p.suffix == ".png")
    assert pngs == ["bench_kernel_ratios.png", "bench_kernel_shrink.png"]
    assert "figure:" in err


def test_bench_violation_exit_code(tmp_path, capsys):
    # a corpus whose kernel suite records a preservation failure exits with 2
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps({
        "kernel": [{"family": "trigger_chain", "params": {"count": 2, "t_max": 3},
                    "seed": 0}],
    }))
    report = tmp_path / "report.json"
    code, _, _ = run(capsys, "bench", "--suite", "kernel", "--corpus", str(corpus),
                     "--out", str(report))
    assert code == 2
    payload = json.loads(report.read_text())
    assert payload["failures"] == 1


def test_bench_deterministic_reports(tmp_path, capsys):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps(TINY_CORPUS))
    texts = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        code, _, _ = run(capsys, "bench", "--suite", "all", "--corpus", str(corpus),
                         "--out", str(out), "--no-figures")
        assert code == 0
        payload = json.loads(out.read_text())
        texts.append(json.dumps(normalize_report(payload), sort_keys=True))
    assert texts[0] == texts[1]


def test_bench_stdout_report(capsys, tmp_path):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps({"kernel": TINY_CORPUS["kernel"]}))
    code, out, _ = run(capsys, "bench", "--suite", "kernel", "--corpus", str(corpus))
    assert code == 0
    assert json.loads(out)["ok"] is True
