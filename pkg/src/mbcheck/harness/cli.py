"""Command line front end.

Subcommands:

  run      one seeded session against one class binding
  compare  partition detected bugs and build curves from saved reports
  probe    bounded completeness check of one routine spec
  bugs     dump the seeded-defect catalog

Exit codes: 0 clean/complete, 1 real faults found or spec incomplete,
2 bad configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

import mbcheck.values as V
from mbcheck.errors import ConfigError, SpecError
from mbcheck.containers import ALL_CLASSES, build_class
from mbcheck.containers import bugs as _bugs
from mbcheck.containers.domains import SequenceDomain
from mbcheck.engine import completeness_probe
from mbcheck.harness.compare import compare_reports, throughput_ratios, write_comparison
from mbcheck.harness.reports import render_report, write_report
from mbcheck.harness.session import SessionConfig, run_session


def _parser():
    p = argparse.ArgumentParser(
        prog="mbc-test",
        description="Random testing of checked container classes under weak or strong contract bindings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one seeded session")
    run.add_argument("--class", dest="class_name", required=True, choices=ALL_CLASSES)
    run.add_argument("--spec", dest="level", required=True, choices=("weak", "strong"))
    run.add_argument("--seed", type=int, required=True)
    run.add_argument("--max-calls", type=int, default=None)
    run.add_argument("--wall-secs", type=float, default=None)
    run.add_argument(
        "--bugs",
        default="",
        help="comma-separated defect ids to seed (see the bugs subcommand)",
    )
    run.add_argument("--report", default=None, help="report path; stdout if omitted")
    run.add_argument("--p-new", type=float, default=0.2)
    run.add_argument("--pool-max", type=int, default=6)
    run.add_argument("--alphabet", type=int, default=4)
    run.add_argument("--max-object-size", type=int, default=16)

    cmp_ = sub.add_parser("compare", help="compare saved weak/strong reports")
    cmp_.add_argument("reports", nargs="*", help="report paths")
    cmp_.add_argument(
        "--pairs", default=None, help='JSON manifest: {"reports": [paths...]}'
    )
    cmp_.add_argument("--out", default=None, help="output path; stdout if omitted")

    probe = sub.add_parser("probe", help="bounded completeness check of one routine")
    probe.add_argument("--class", dest="class_name", required=True, choices=ALL_CLASSES)
    probe.add_argument("--routine", required=True)
    probe.add_argument("--spec", dest="level", default="strong", choices=("weak", "strong"))
    probe.add_argument("--max-len", type=int, default=3)
    probe.add_argument("--alphabet", type=int, default=2)
    probe.add_argument("--unique", action="store_true", help="restrict to duplicate-free states")

    sub.add_parser("bugs", help="print the seeded-defect catalog")
    return p


def _parse_bugs(raw, class_name):
    ids = tuple(x for x in (s.strip() for s in raw.split(",")) if x)
    for bug_id in ids:
        entry = _bugs.BY_ID.get(bug_id)
        if entry is None:
            raise ConfigError("unknown bug id %r" % (bug_id,))
        if entry.class_name != class_name:
            raise ConfigError(
                "bug %s belongs to class %s, not %s"
                % (bug_id, entry.class_name, class_name)
            )
    return ids


def _cmd_run(args):
    cfg = SessionConfig(
        class_name=args.class_name,
        level=args.level,
        seed=args.seed,
        max_calls=args.max_calls,
        wall_secs=args.wall_secs,
        bugs=_parse_bugs(args.bugs, args.class_name),
        p_new=args.p_new,
        pool_max=args.pool_max,
        alphabet=args.alphabet,
        max_object_size=args.max_object_size,
    )
    res = run_session(cfg)
    if args.report:
        write_report(args.report, res)
        print(
            "%s: %d calls (%d invalid), %d fault records, detected: %s"
            % (
                args.report,
                res.calls,
                res.invalid_calls,
                len(res.records),
                ",".join(res.detected_bugs()) or "-",
            )
        )
    else:
        sys.stdout.write(render_report(res))
    return 1 if res.by_classification("real") else 0


def _cmd_compare(args):
    paths = list(args.reports)
    if args.pairs:
        import os

        with open(args.pairs) as f:
            manifest = json.load(f)
        base = os.path.dirname(os.path.abspath(args.pairs))
        for rel in manifest["reports"]:
            paths.append(rel if os.path.isabs(rel) else os.path.join(base, rel))
    if not paths:
        raise ConfigError("no reports given; pass paths or --pairs")
    result = compare_reports(paths)
    ratios = throughput_ratios(paths)
    if args.out:
        write_comparison(args.out, result, ratios)
        print("%s: %d reports compared" % (args.out, result["reports"]))
    else:
        print(json.dumps(result, sort_keys=True, indent=2))
    return 0


def _fmt_roles(roles):
    parts = []
    for rid, models in sorted(roles.items()):
        who = "target" if rid == -1 else "arg%d" % rid
        inner = ", ".join("%s=%s" % (m, V.mv_repr(v)) for m, v in sorted(models.items()))
        parts.append("%s{%s}" % (who, inner))
    return "; ".join(parts)


def _fmt_args(args):
    out = []
    for k, a in enumerate(args):
        if a is None:
            out.append("void")
        elif V.is_model_value(a):
            out.append(V.mv_repr(a))
        else:
            out.append("<ref arg%d>" % k)  # model lives in the role map
    return "(%s)" % ", ".join(out)


def _cmd_probe(args):
    strong = build_class(args.class_name, "strong")
    if "sequence" not in strong.model_names:
        raise ConfigError("the completeness probe covers the sequence containers only")
    binding = strong if args.level == "strong" else build_class(args.class_name, "weak")
    routine = binding.routines.get(args.routine)
    if routine is None:
        raise ConfigError(
            "%s has no routine %r at level %s"
            % (args.class_name, args.routine, args.level)
        )
    dom = SequenceDomain(
        {args.class_name: strong},
        max_len=args.max_len,
        alphabet=args.alphabet,
        unique=args.unique,
    )
    res = completeness_probe(strong, routine, dom)
    print(
        "%s.%s [%s]: %s (%d pre-states)"
        % (args.class_name, args.routine, args.level, res.verdict, res.pre_states_checked)
    )
    if res.verdict == "incomplete":
        pre = "%s args=%s" % (_fmt_roles(res.witness_pre["roles"]), _fmt_args(res.witness_pre["args"]))
        if res.unsatisfiable:
            print("no admissible post-state for pre-state: %s" % pre)
        else:
            print("ambiguous pre-state: %s" % pre)
            for maps, result in res.witness_posts:
                shown = V.mv_repr(result) if V.is_model_value(result) else repr(result)
                print("  admitted exit: %s result=%s" % (_fmt_roles(maps), shown))
        return 1
    return 0


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "probe":
            return _cmd_probe(args)
        if args.command == "bugs":
            print(_bugs.manifest_json())
            return 0
    except (ConfigError, SpecError) as e:
        print("error: %s" % (e,), file=sys.stderr)
        return 2
    except OSError as e:
        print("error: %s" % (e,), file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
