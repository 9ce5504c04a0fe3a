"""Benchmark the isotropy-counting kernel across its three implementations.

The library dispatches between the numba kernel and the numpy fallback via
the WITTCURVE_NO_NUMBA environment flag; this script times both directly,
plus a pure-Python object-arithmetic baseline, on the same full-space scan.

Run from the repository root:  python3 benchmarks/bench_isotropy.py
"""

import itertools
import time

import numpy as np

from wittcurve._kernels import (
    HAS_NUMBA,
    _count_isotropic_njit,
    _count_isotropic_numpy,
)
from wittcurve.fields import make_field


def count_python(field, entries):
    zero = field.zero
    count = 0
    for vec in itertools.product(field.elements(), repeat=len(entries)):
        acc = zero
        for a, v in zip(entries, vec):
            acc = acc + a * v * v
        if acc == zero:
            count += 1
    return count - 1  # drop the zero vector


def bench(func, *args, warmup=True, repeat=1):
    if warmup:
        func(*args)
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = func(*args)
    t1 = time.perf_counter()
    return (t1 - t0) / repeat, out


if __name__ == "__main__":
    q, rank = 101, 3
    field = make_field(q)
    entries = tuple(field.element(a) for a in (1, 2, 5))
    diag = np.array([a.index for a in entries], dtype=np.int64)
    add, mul = field.op_tables()

    print(f"counting isotropic vectors of <1,2,5> over F_{q}: {q}^{rank} = {q**rank} vectors")

    t_py, n_py = bench(count_python, field, entries, warmup=False)
    t_np, n_np = bench(_count_isotropic_numpy, diag, add, mul, repeat=3)
    print(f"Python objects: {t_py:.3f}s")
    print(f"NumPy fallback: {t_np:.3f}s  ({t_py / t_np:0.1f}x)")
    assert n_np == n_py, (n_np, n_py)

    if HAS_NUMBA:
        t_nb, n_nb = bench(_count_isotropic_njit, diag, add, mul, repeat=3)
        print(f"Numba kernel:   {t_nb:.3f}s  ({t_py / t_nb:0.1f}x)")
        assert n_nb == n_py, (n_nb, n_py)
    else:
        print("Numba kernel:   unavailable (numba not importable)")

    # classical check: a nondegenerate odd-rank form has q^(n-1) - 1 of them
    assert n_py == q ** (rank - 1) - 1
