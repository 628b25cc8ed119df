"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload is run with both backends; results must agree exactly.
"""
import argparse
import random
import time

from coderco import _kernels_py, exactlin
from coderco.cochain import d_coder_matrix
from coderco.comodule import coadjoint
from coderco.examples import build
from coderco.exactlin import SparseMat, kernel_basis, rank

try:
    from coderco import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_sparse(rows, cols, density, seed):
    rng = random.Random(seed)
    ents = [(i, j, rng.randint(-5, 5)) for i in range(rows) for j in range(cols) if rng.random() < density]
    return SparseMat.from_entries(rows, cols, ents)


def workloads(quick):
    out = []
    for name, params, n in ([("divided_power", (3,), 2), ("tensor", (2, 1), 2)] if quick else
                            [("divided_power", (3,), 3), ("comatrix", (2,), 3), ("tensor", (2, 2), 2),
                             ("comatrix", (3,), 2)]):
        cp = build(name, params)
        out.append((f"d_coder^{n} {name}{params}", d_coder_matrix(cp, coadjoint(cp), n)))
    size = 40 if quick else 120
    out.append((f"random {size}x{size} 10%", random_sparse(size, size, 0.1, 1)))
    out.append((f"random {size}x{2 * size} 5%", random_sparse(size, 2 * size, 0.05, 2)))
    return out


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def run(repeat=3, quick=False):
    backends = [_kernels_py] + ([_kernels_c] if _kernels_c else [])
    rows = []
    for label, mat in workloads(quick):
        line = {"workload": label, "shape": mat.shape}
        results = {}
        for k in backends:
            exactlin.kernels = k
            secs, res = timed(lambda: (rank(mat), kernel_basis(mat), mat.transpose() @ mat), repeat)
            line[k.BACKEND] = secs
            results[k.BACKEND] = res
        exactlin.kernels = backends[-1]
        vals = list(results.values())
        line["agree"] = all(v == vals[0] for v in vals)
        rows.append(line)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true")
    args = p.parse_args()
    rows = run(args.repeat, args.quick)
    has_c = _kernels_c is not None
    print(f"{'workload':34} {'shape':>16} {'python s':>10} {'cython s':>10} {'speedup':>8} agree")
    for r in rows:
        c = r.get("cython")
        speed = f"{r['python'] / c:8.2f}" if c else "     n/a"
        cs = f"{c:10.4f}" if c else "       n/a"
        print(f"{r['workload']:34} {str(r['shape']):>16} {r['python']:10.4f} {cs} {speed} {r['agree']}")
    if not has_c:
        print("compiled kernels not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
