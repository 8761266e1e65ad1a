"""Compare the compiled and pure value kernels.

Two measurements: a tight loop over the hot sequence operations, and an
end-to-end checked session per backend. Backend selection happens at import
time via MBCHECK_VALUES_BACKEND, so the session benchmark re-execs itself
once per backend.

Usage: python benchmarks/bench_backends.py [--calls N] [--ops N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def bench_ops(ops, n):
    rng_items = [ops.integer(i % 8) for i in range(64)]
    s = ops.sequence(rng_items[:12])
    t = ops.sequence(rng_items[12:20])
    probe = ops.integer(3)
    t0 = time.perf_counter()
    for i in range(n):
        u = ops.seq_concat(ops.seq_front(s, 6), t)
        ops.seq_has(u, probe)
        ops.seq_item(u, 1 + i % ops.seq_count(u))
        ops.seq_replaced_at(u, 3, probe)
        ops.seq_to_bag(t)
    return time.perf_counter() - t0


def bench_session(calls):
    from mbcheck.harness import SessionConfig, run_session

    res = run_session(
        SessionConfig("two_way_list", "strong", seed=1, max_calls=calls)
    )
    return res.wall_s, res.calls_per_s


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--calls", type=int, default=50_000)
    ap.add_argument("--ops", type=int, default=200_000)
    ap.add_argument("--backend", choices=("pure", "compiled"), default=None,
                    help=argparse.SUPPRESS)  # internal: set by the re-exec
    args = ap.parse_args()

    if args.backend:
        import mbcheck.values as V

        assert V.BACKEND == args.backend
        wall, cps = bench_session(args.calls)
        print(json.dumps({"backend": args.backend, "wall_s": wall, "calls_per_s": cps}))
        return

    from mbcheck.values import _ops_pure

    kernels = [("pure", _ops_pure)]
    try:
        from mbcheck.values import _ops_cy

        kernels.append(("compiled", _ops_cy))
    except ImportError:
        print("compiled kernel not built; benchmarking the pure kernel only")

    print("== kernel operations (%d iterations) ==" % args.ops)
    base = None
    for name, ops in kernels:
        dt = bench_ops(ops, args.ops)
        rate = args.ops / dt
        line = "%-9s %8.3fs  %12.0f iterations/s" % (name, dt, rate)
        if base is None:
            base = dt
        else:
            line += "  (%.2fx vs pure)" % (base / dt)
        print(line)

    print("== end-to-end checked session (%d calls, strong two_way_list) ==" % args.calls)
    session_base = None
    for name, _ in kernels:
        env = dict(os.environ, MBCHECK_VALUES_BACKEND=name)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__),
             "--calls", str(args.calls), "--backend", name],
            env=env, capture_output=True, text=True, check=True,
        )
        row = json.loads(out.stdout.strip().splitlines()[-1])
        line = "%-9s %8.3fs  %12.0f calls/s" % (name, row["wall_s"], row["calls_per_s"])
        if session_base is None:
            session_base = row["wall_s"]
        else:
            line += "  (%.2fx vs pure)" % (session_base / row["wall_s"])
        print(line)


if __name__ == "__main__":
    main()
