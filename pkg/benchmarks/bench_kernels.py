"""Time the compiled histogram kernels against the pure-Python fallback.

Both backends are called directly on identical flattened inputs, the
outputs are compared for equality, and the best-of-N wall times are
printed side by side.  Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --heavy
"""

from __future__ import annotations

import argparse
import time

from qdivisible import _kernels_py
from qdivisible.constructions import direct_sum, lifted_mrd, spread
from qdivisible.subspaces import SubspaceSet, _flat_gens

try:
    from qdivisible import _kernels_c
except ImportError:
    _kernels_c = None


def _workloads(heavy: bool) -> list[tuple[str, SubspaceSet]]:
    sets = [
        ("spread(2,2,3)", spread(2, 2, 3)),
        ("lifted_mrd(2,2,3)", lifted_mrd(2, 2, 3)),
        ("spread(2,2,4)", spread(2, 2, 4)),
        ("lifted_mrd(3,1,2)", lifted_mrd(3, 1, 2)),
        ("spread(3,2,2)", spread(3, 2, 2)),
    ]
    if heavy:
        sets.append(
            ("spread(2,2,3) + lifted_mrd(2,2,3)",
             direct_sum(spread(2, 2, 3), lifted_mrd(2, 2, 3)))
        )
    return sets


def _incidence_args(s: SubspaceSet) -> tuple:
    f = s.ctx
    return (f.q, s.v, s.n, s.k, _flat_gens(s), f.add_table, f.mul_table)


def _triple_args(s: SubspaceSet) -> tuple:
    f = s.ctx
    return (f.q, s.v, s.n, s.k, _flat_gens(s),
            f.add_table, f.mul_table, f.neg_table, f.inv_table)


def _time_call(fn, args, repeat: int) -> tuple[float, object]:
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs (default 3)")
    parser.add_argument("--heavy", action="store_true",
                        help="include a 53-member set in GF(2)^13")
    args = parser.parse_args(argv)

    if _kernels_c is None:
        print("compiled kernel not built; timing the Python backend only")

    jobs = []
    for name, s in _workloads(args.heavy):
        jobs.append((f"{name} incidence", _kernels_py.incidence_histogram,
                     None if _kernels_c is None else _kernels_c.incidence_histogram,
                     _incidence_args(s)))
        jobs.append((f"{name} triples", _kernels_py.triple_dim_histogram,
                     None if _kernels_c is None else _kernels_c.triple_dim_histogram,
                     _triple_args(s)))

    width = max(len(label) for label, *_ in jobs)
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, py_fn, c_fn, call_args in jobs:
        py_time, py_out = _time_call(py_fn, call_args, args.repeat)
        if c_fn is None:
            print(f"{label:<{width}}  {py_time * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
            continue
        c_time, c_out = _time_call(c_fn, call_args, args.repeat)
        if list(py_out) != list(c_out):
            raise SystemExit(f"backend mismatch on {label}: {py_out} vs {c_out}")
        ratio = py_time / c_time if c_time > 0 else float("inf")
        print(f"{label:<{width}}  {py_time * 1e3:>8.2f}ms  "
              f"{c_time * 1e3:>8.2f}ms  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
