"""Figure rendering for benchmark reports.

Each suite gets one or two small summary figures saved as PNG files next to
the delimited output, named <stem>_<figure>.png. Everything here draws from
the plain report dictionaries produced by the harness; nothing re-runs a
solver.
"""

# The backend must be pinned before pyplot is imported: the bench runs
# headless and must not try to open a display.
import matplotlib

matplotlib.use("Agg")

import os

import matplotlib.pyplot as plt

KERNEL_BOUND_MULTIPLIER = 18
REGIME_VERTEX_CAPS = {"reduced-double": 6, "liars": 5, "ktuple3": 4}


def plot_kernel_ratios(records, path):
    """Reduced size against the optimum, with the proven bound line."""
    xs, ys = [], []
    for rec in records:
        if rec.get("ratio") is None:
            continue
        xs.append(rec["gamma2_reduced"])
        ys.append(rec["reduced_n"])
    if not xs:
        return None
    plt.figure(figsize=(7, 5))
    plt.scatter(xs, ys, s=18, alpha=0.6, label="reduced instances")
    lim = max(xs) + 1
    plt.plot([0, lim], [0, KERNEL_BOUND_MULTIPLIER * lim], "r--",
             label=f"bound {KERNEL_BOUND_MULTIPLIER}·optimum")
    plt.xlabel("double domination number of reduced graph")
    plt.ylabel("reduced vertex count")
    plt.title("Kernel size against the linear bound")
    plt.legend(loc="best")
    plt.grid(True, alpha=0.3)
    plt.savefig(path, bbox_inches="tight", dpi=110)
    plt.close()
    return path


def plot_kernel_shrink(records, path):
    """Histogram of per-instance size ratios (reduced / optimum)."""
    ratios = [rec["ratio"] for rec in records if rec.get("ratio") is not None]
    if not ratios:
        return None
    plt.figure(figsize=(7, 4))
    plt.hist(ratios, bins=24, color="#4878b0", edgecolor="black")
    plt.axvline(KERNEL_BOUND_MULTIPLIER, color="red", linestyle="--",
                label=f"bound {KERNEL_BOUND_MULTIPLIER}")
    plt.xlabel("reduced vertex count / optimum")
    plt.ylabel("instances")
    plt.title("Observed kernel ratios")
    plt.legend(loc="best")
    plt.savefig(path, bbox_inches="tight", dpi=110)
    plt.close()
    return path


def plot_region_caps(records, path):
    """Largest region seen per regime, next to the proven per-region cap."""
    seen = {regime: 0 for regime in REGIME_VERTEX_CAPS}
    for rec in records:
        for regime, entry in rec.get("regimes", {}).items():
            if entry.get("skipped") or regime not in seen:
                continue
            seen[regime] = max(seen[regime], entry.get("max_region_vertices", 0))
    if not any(seen.values()):
        return None
    regimes = list(REGIME_VERTEX_CAPS)
    xs = range(len(regimes))
    plt.figure(figsize=(7, 4))
    plt.bar([x - 0.2 for x in xs], [seen[r] for r in regimes], width=0.4,
            label="largest region observed", color="#4878b0")
    plt.bar([x + 0.2 for x in xs], [REGIME_VERTEX_CAPS[r] for r in regimes],
            width=0.4, label="per-region cap", color="#d65f5f")
    plt.xticks(list(xs), regimes)
    plt.ylabel("vertices in region")
    plt.title("Region sizes against their caps")
    plt.legend(loc="best")
    plt.savefig(path, bbox_inches="tight", dpi=110)
    plt.close()
    return path


def plot_gadget_outcomes(records, path):
    """Pass/fail counts per construction kind."""
    kinds = []
    passed = {}
    failed = {}
    for rec in records:
        kind = rec["kind"]
        if kind not in passed:
            kinds.append(kind)
            passed[kind] = failed[kind] = 0
        if rec.get("ok"):
            passed[kind] += 1
        else:
            failed[kind] += 1
    if not kinds:
        return None
    xs = range(len(kinds))
    plt.figure(figsize=(7, 4))
    plt.bar([x - 0.2 for x in xs], [passed[k] for k in kinds], width=0.4,
            label="equivalent", color="#55a868")
    plt.bar([x + 0.2 for x in xs], [failed[k] for k in kinds], width=0.4,
            label="violations", color="#d65f5f")
    plt.xticks(list(xs), kinds)
    plt.ylabel("checks")
    plt.title("Construction equivalence checks")
    plt.legend(loc="best")
    plt.savefig(path, bbox_inches="tight", dpi=110)
    plt.close()
    return path


def render_report_figures(report, csv_path):
    """Render every applicable figure next to csv_path; returns saved paths."""
    stem, _ = os.path.splitext(csv_path)
    out = []
    suites = report.get("suites", {})
    if "kernel" in suites:
        recs = suites["kernel"]["records"]
        for fn, name in ((plot_kernel_ratios, "kernel_ratios"),
                         (plot_kernel_shrink, "kernel_shrink")):
            p = fn(recs, f"{stem}_{name}.png")
            if p:
                out.append(p)
    if "region" in suites:
        p = plot_region_caps(suites["region"]["records"], f"{stem}_region_caps.png")
        if p:
            out.append(p)
    if "gadget" in suites:
        p = plot_gadget_outcomes(suites["gadget"]["records"], f"{stem}_gadget_outcomes.png")
        if p:
            out.append(p)
    return out
