"""Line-delimited JSON session reports.

A report is a function of the session config alone: ordinals stand in for
time, keys are sorted, separators are fixed. Running the same config twice
must produce byte-identical files. Wall-clock figures go to a sidecar file
(``<report>.timing``) so they cannot leak into the stable part.
"""

from __future__ import annotations

import json

from mbcheck.errors import ConfigError

FORMAT = 1


def _line(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def render_report(result):
    """The report body as a string; see module docstring for stability."""
    cfg = result.config
    budget = (
        {"max_calls": cfg.max_calls}
        if cfg.max_calls is not None
        else {"wall_secs": cfg.wall_secs}
    )
    lines = [
        _line(
            {
                "kind": "header",
                "format": FORMAT,
                "class": cfg.class_name,
                "level": cfg.level,
                "seed": cfg.seed,
                "budget": budget,
                "bugs": sorted(cfg.bugs),
                "alphabet": cfg.alphabet,
                "p_new": cfg.p_new,
                "pool_max": cfg.pool_max,
                "max_object_size": cfg.max_object_size,
            }
        )
    ]
    counts = {}
    for rec in result.records:
        counts[rec.classification] = counts.get(rec.classification, 0) + 1
        lines.append(
            _line(
                {
                    "kind": "fault",
                    "class": rec.class_name,
                    "routine": rec.routine,
                    "clause": rec.clause,
                    "violation": rec.kind,
                    "classification": rec.classification,
                    "blame": rec.blame,
                    "first_call": rec.first_call,
                    "count": rec.count,
                    "matched_bug": rec.matched_bug,
                    "analogue_of": rec.analogue_of,
                    "detail": rec.detail,
                }
            )
        )
    lines.append(_line({"kind": "series", "points": [list(p) for p in result.series]}))
    lines.append(
        _line(
            {
                "kind": "summary",
                "calls": result.calls,
                "valid": result.valid_calls,
                "invalid": result.invalid_calls,
                "objects": result.objects_created,
                "records": counts,
                "unique_real": len(result.by_classification("real")),
                "detected_bugs": result.detected_bugs(),
            }
        )
    )
    return "".join(lines)


def write_report(path, result, timing=True):
    body = render_report(result)
    with open(path, "w") as f:
        f.write(body)
    if timing:
        with open(str(path) + ".timing", "w") as f:
            f.write(
                json.dumps(
                    {
                        "wall_s": result.wall_s,
                        "calls_per_s": result.calls_per_s,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
    return body


def read_report(path):
    """Parse one report into {"header": ..., "faults": [...], "series": [...],
    "summary": ...}."""
    header = None
    faults = []
    series = []
    summary = None
    with open(path) as f:
        for raw in f:
            raw = raw.strip()
            if not raw:
                continue
            row = json.loads(raw)
            kind = row.get("kind")
            if kind == "header":
                header = row
            elif kind == "fault":
                faults.append(row)
            elif kind == "series":
                series = row["points"]
            elif kind == "summary":
                summary = row
            else:
                raise ConfigError("unknown report row kind %r in %s" % (kind, path))
    if header is None or summary is None:
        raise ConfigError("%s is not a complete report" % (path,))
    return {"header": header, "faults": faults, "series": series, "summary": summary}


def read_timing(path):
    with open(str(path) + ".timing") as f:
        return json.load(f)
