"""Numba kernels against their numpy twins.

Times the two hot loops of the finite-field oracle (orbit encoding and
row reduction) and one end-to-end class enumeration on each backend, and
checks that both backends return identical arrays.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kroncomp.oracle import _kernels as K
from kroncomp.oracle.ffield import gl_matrices
from kroncomp.oracle.hall import _build_class_table, _class_table, _weights
from kroncomp.roots import DimVector


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def orbit_case(p, nj, ni, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(nj, ni))
    B = rng.integers(0, p, size=(nj, ni))
    return A, B, gl_matrices(nj, p), gl_matrices(ni, p), p, _weights(p, nj, ni)


def rref_case(p, n, count=400, seed=1):
    rng = np.random.default_rng(seed)
    return [rng.integers(0, p, size=(n, n + 3)) for _ in range(count)], p


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not K.HAVE_NUMBA:
        print("numba unavailable (or KRONCOMP_DISABLE_NUMBA set); nothing to compare")
        return

    cases = [
        ("orbit codes  F_2 (3x3)", lambda: orbit_case(2, 3, 3)),
        ("orbit codes  F_3 (2x3)", lambda: orbit_case(3, 2, 3)),
    ]
    print(f"{'kernel':28s}{'numpy':>12s}{'numba':>12s}{'speedup':>10s}")
    for name, make in cases:
        data = make()
        K.set_backend("numba")
        K.orbit_codes(*data)  # compile
        t_nb, out_nb = best_of(lambda: K.orbit_codes(*data), args.repeat)
        K.set_backend("numpy")
        t_np, out_np = best_of(lambda: K.orbit_codes(*data), args.repeat)
        assert np.array_equal(out_nb, out_np), name
        print(f"{name:28s}{t_np * 1e3:10.2f}ms{t_nb * 1e3:10.2f}ms{t_np / t_nb:9.1f}x")

    for p, n in ((2, 6), (3, 6)):
        mats, _ = rref_case(p, n)

        def run():
            return [K.rref_mod_p(M, p) for M in mats]
        K.set_backend("numba")
        run()
        t_nb, out_nb = best_of(run, args.repeat)
        K.set_backend("numpy")
        t_np, out_np = best_of(run, args.repeat)
        for (r1, p1), (r2, p2) in zip(out_nb, out_np):
            assert np.array_equal(r1, r2) and np.array_equal(p1, p2)
        name = f"rref x{len(mats)} F_{p} ({n}x{n + 3})"
        print(f"{name:28s}{t_np * 1e3:10.2f}ms{t_nb * 1e3:10.2f}ms{t_np / t_nb:9.1f}x")

    # end to end: classify Rep(3,3)(F_2) from scratch on each backend
    timings = {}
    tables = {}
    for name in ("numba", "numpy"):
        K.set_backend(name)
        _build_class_table.cache_clear()
        t0 = time.perf_counter()
        tables[name] = _class_table(2, DimVector(3, 3))
        timings[name] = time.perf_counter() - t0
    assert np.array_equal(tables["numba"].canon, tables["numpy"].canon)
    label = "classify Rep(3,3)(F_2)"
    print(f"{label:28s}{timings['numpy']:11.2f}s{timings['numba']:11.2f}s"
          f"{timings['numpy'] / timings['numba']:9.1f}x")
    K.set_backend("numba")


if __name__ == "__main__":
    main()
