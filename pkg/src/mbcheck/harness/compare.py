"""Cross-binding comparison over a batch of session reports.

Takes the reports from matched weak/strong runs (same classes, same seeds,
same budgets), partitions the detected catalog bugs by which binding caught
them, and builds median detection curves. Everything here derives from the
stable report bodies, so comparing the same reports twice gives identical
output; throughput ratios live in a sidecar because they come from wall-clock
sidecars.
"""

from __future__ import annotations

import json
from statistics import median

from mbcheck.errors import ConfigError
from mbcheck.containers import bugs as _bugs
from mbcheck.harness.reports import read_report, read_timing

GRID_POINTS = 21


def _step_value(points, t):
    # points is [(ordinal, cumulative)], ascending; value at call t
    v = 0
    for o, c in points:
        if o > t:
            break
        v = c
    return v


def _curve(series_by_class, budget, grid_points):
    """Sum per-class cumulative step functions, sampled on a fixed grid."""
    grid = [round(i * budget / (grid_points - 1)) for i in range(grid_points)]
    return [[t, sum(_step_value(s, t) for s in series_by_class)] for t in grid]


def compare_reports(paths):
    runs = []
    for p in paths:
        rep = read_report(p)
        rep["path"] = str(p)
        runs.append(rep)
    if not runs:
        raise ConfigError("no reports to compare")

    levels = {}
    for rep in runs:
        h = rep["header"]
        levels.setdefault(h["level"], []).append(rep)
    for level in levels:
        if level not in ("weak", "strong"):
            raise ConfigError("unknown level %r in reports" % (level,))

    detected = {}
    unique_real = {}
    record_totals = {}
    for level, reps in sorted(levels.items()):
        ids = set()
        totals = {}
        unique = 0
        for rep in reps:
            s = rep["summary"]
            ids.update(s["detected_bugs"])
            unique += s["unique_real"]
            for cls, n in s["records"].items():
                totals[cls] = totals.get(cls, 0) + n
        detected[level] = sorted(ids)
        unique_real[level] = unique
        record_totals[level] = totals

    strong = set(detected.get("strong", ()))
    weak = set(detected.get("weak", ()))

    curves = {}
    for level, reps in sorted(levels.items()):
        by_seed = {}
        budget = 0
        for rep in reps:
            h = rep["header"]
            b = h["budget"].get("max_calls") or rep["summary"]["calls"]
            budget = max(budget, b)
            by_seed.setdefault(h["seed"], []).append(rep["series"])
        if budget == 0:
            curves[level] = []
            continue
        per_seed = {
            seed: _curve(series_list, budget, GRID_POINTS)
            for seed, series_list in by_seed.items()
        }
        grid = [t for t, _ in next(iter(per_seed.values()))]
        curves[level] = [
            [t, median(per_seed[seed][i][1] for seed in per_seed)]
            for i, t in enumerate(grid)
        ]

    expected = {
        "strong": sorted(_bugs.detectable_at("strong")),
        "weak": sorted(_bugs.detectable_at("weak")),
    }
    out = {
        "classes": sorted({r["header"]["class"] for r in runs}),
        "seeds": sorted({r["header"]["seed"] for r in runs}),
        "reports": len(runs),
        "detected": detected,
        "partition": {
            "strong_only": sorted(strong - weak),
            "weak_only": sorted(weak - strong),
            "shared": sorted(strong & weak),
        },
        "expected": expected,
        "missed": {
            lv: sorted(set(expected[lv]) - set(detected.get(lv, ())))
            for lv in ("strong", "weak")
        },
        "unexpected": {
            lv: sorted(set(detected.get(lv, ())) - set(expected[lv]))
            for lv in ("strong", "weak")
        },
        "unique_real": unique_real,
        "record_totals": record_totals,
        "curves": curves,
    }
    return out


def throughput_ratios(paths):
    """class -> median strong calls/s over median weak calls/s, from timing
    sidecars; classes missing either side are skipped."""
    speeds = {}
    for p in paths:
        rep = read_report(p)
        h = rep["header"]
        try:
            t = read_timing(p)
        except OSError:
            continue
        speeds.setdefault(h["class"], {}).setdefault(h["level"], []).append(
            t["calls_per_s"]
        )
    out = {}
    for cls, by_level in sorted(speeds.items()):
        if "weak" in by_level and "strong" in by_level:
            w = median(by_level["weak"])
            s = median(by_level["strong"])
            if s > 0:
                out[cls] = w / s
    return out


def write_comparison(path, cmp_result, ratios=None):
    with open(path, "w") as f:
        f.write(json.dumps(cmp_result, sort_keys=True, indent=2) + "\n")
    if ratios is not None:
        with open(str(path) + ".timing", "w") as f:
            f.write(json.dumps({"weak_over_strong_speed": ratios}, sort_keys=True) + "\n")
