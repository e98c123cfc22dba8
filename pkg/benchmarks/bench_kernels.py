"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-naive]

Kernel timings call both modules in-process on every catalog table.  The
end-to-end timings run each workload in a subprocess, once with the
default backend and once with HYPERFIELD_PURE_PYTHON=1.
"""

import argparse
import os
import subprocess
import sys
import time

from hyperfields import _kernels_py
from hyperfields.catalog import load_catalog

try:
    from hyperfields import _kernels as _compiled
except ImportError:
    _compiled = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def kernel_rows(repeat):
    tables = [e.structure for e in load_catalog().entries.values()]
    args = [(list(h.flat_add), h.flat_mul, h.order, h.neg_one) for h in tables]

    def check(mod):
        return lambda: [mod.is_hyperfield(*a) for a in args]

    def assoc(mod):
        return lambda: [mod.assoc_failures(a[0], a[2]) for a in args]

    def set_add(mod):
        def run():
            for add, _, n, _ in args:
                full = (1 << n) - 1
                for a in range(1, full + 1):
                    mod.set_add(add, n, a, full ^ a or 1)
        return run

    rows = []
    for label, make in (("is_hyperfield x catalog", check), ("assoc_failures x catalog", assoc),
                        ("set_add all masks", set_add)):
        py = _time(make(_kernels_py), repeat)
        cy = _time(make(_compiled), repeat) if _compiled else None
        rows.append((label, cy, py))
    return rows


def _subprocess_time(code, pure):
    env = dict(os.environ)
    if pure:
        env["HYPERFIELD_PURE_PYTHON"] = "1"
    start = time.perf_counter()
    subprocess.run([sys.executable, "-c", code], env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def workload_rows(skip_naive):
    jobs = [("enumerate(5)", "from hyperfields import enumerate_hyperfields as e; e(5)")]
    if not skip_naive:
        jobs.append(("naive_enumerate(4)", "from hyperfields import naive_enumerate as e; e(4)"))
    rows = []
    for label, code in jobs:
        cy = _subprocess_time(code, pure=False) if _compiled else None
        py = _subprocess_time(code, pure=True)
        rows.append((label, cy, py))
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-naive", action="store_true", help="skip the slow naive oracle run")
    args = parser.parse_args(argv)

    print(f"{'workload':28} {'cython (ms)':>12} {'python (ms)':>12} {'speedup':>9}")
    for label, cy, py in kernel_rows(args.repeat) + workload_rows(args.skip_naive):
        if cy is None:
            print(f"{label:28} {'n/a':>12} {py * 1e3:12.3f} {'':>9}")
        else:
            print(f"{label:28} {cy * 1e3:12.3f} {py * 1e3:12.3f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
