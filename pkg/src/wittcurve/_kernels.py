"""Scan kernels for isotropic vectors of diagonal forms.

Everything here works on element indices and the dense (add, mul) op tables
from fields.op_tables, so the hot loops never touch Python objects.  Two
implementations are kept in lockstep: numba-compiled odometer loops and a
chunked numpy fallback.  Both walk the same deterministic enumeration, so
they return identical vectors, and the callers in forms re-verify results
with exact field arithmetic.

Set WITTCURVE_NO_NUMBA=1 to force the numpy path (also used automatically
when numba is not importable).  The flag is read per call, not at import.

Enumeration order for the search: vectors are grouped by their first nonzero
coordinate (the lead), with the lead position running from n-1 down to 0.
The lead is normalized to 1 and the coordinates after it run through all
q-ary tuples in ascending lexicographic order, earlier positions most
significant.  This visits one representative per projective point and agrees
with scanning all nonzero vectors in plain lexicographic order.
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 1 << 15

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


def _use_numba() -> bool:
    return HAS_NUMBA and os.environ.get("WITTCURVE_NO_NUMBA", "") != "1"


@njit(cache=True)
def _first_isotropic_njit(diag: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    n = diag.shape[0]
    q = add.shape[0]
    sq = np.empty(q, dtype=np.int64)
    for x in range(q):
        sq[x] = mul[x, x]
    for lead in range(n - 1, -1, -1):
        m = n - 1 - lead
        base = np.int64(diag[lead])  # contribution of the unit lead coordinate
        digits = np.zeros(m, dtype=np.int64)
        total = 1
        for _ in range(m):
            total *= q
        for _ in range(total):
            acc = base
            for i in range(m):
                acc = np.int64(add[acc, mul[diag[lead + 1 + i], sq[digits[i]]]])
            if acc == 0:
                out = np.zeros(n, dtype=np.int64)
                out[lead] = 1
                for i in range(m):
                    out[lead + 1 + i] = digits[i]
                return out
            k = m - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] < q:
                    break
                digits[k] = 0
                k -= 1
    return np.empty(0, dtype=np.int64)


@njit(cache=True)
def _count_isotropic_njit(diag: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.int64:
    n = diag.shape[0]
    q = add.shape[0]
    sq = np.empty(q, dtype=np.int64)
    for x in range(q):
        sq[x] = mul[x, x]
    digits = np.zeros(n, dtype=np.int64)
    total = 1
    for _ in range(n):
        total *= q
    count = np.int64(0)
    for _ in range(total):
        acc = np.int64(0)
        for i in range(n):
            acc = np.int64(add[acc, mul[diag[i], sq[digits[i]]]])
        if acc == 0:
            count += 1
        k = n - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < q:
                break
            digits[k] = 0
            k -= 1
    return count - 1  # the zero vector is always isotropic


def _first_isotropic_numpy(diag: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    n = diag.shape[0]
    q = add.shape[0]
    sq = mul[np.arange(q), np.arange(q)].astype(np.int64)
    for lead in range(n - 1, -1, -1):
        m = n - 1 - lead
        total = q**m
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            acc = np.full(idx.shape, diag[lead], dtype=np.int64)
            for i in range(m):
                dig = (idx // q ** (m - 1 - i)) % q
                acc = add[acc, mul[diag[lead + 1 + i], sq[dig]]].astype(np.int64)
            hits = np.flatnonzero(acc == 0)
            if hits.size:
                it = int(idx[hits[0]])
                out = np.zeros(n, dtype=np.int64)
                out[lead] = 1
                for i in range(m):
                    out[lead + 1 + i] = (it // q ** (m - 1 - i)) % q
                return out
    return np.empty(0, dtype=np.int64)


def _count_isotropic_numpy(diag: np.ndarray, add: np.ndarray, mul: np.ndarray) -> int:
    n = diag.shape[0]
    q = add.shape[0]
    sq = mul[np.arange(q), np.arange(q)].astype(np.int64)
    total = q**n
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        acc = np.zeros(idx.shape, dtype=np.int64)
        for i in range(n):
            dig = (idx // q ** (n - 1 - i)) % q
            acc = add[acc, mul[diag[i], sq[dig]]].astype(np.int64)
        count += int(np.count_nonzero(acc == 0))
    return count - 1


def first_isotropic(diag_codes: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray | None:
    """First isotropic coordinate vector of <a_0,...,a_{n-1}> in scan order.

    diag_codes holds the element indices of the diagonal entries.  Returns an
    int64 index vector, or None if the form is anisotropic.
    """
    diag = np.ascontiguousarray(diag_codes, dtype=np.int64)
    if diag.shape[0] == 0:
        return None
    if _use_numba():
        out = _first_isotropic_njit(diag, add, mul)
    else:
        out = _first_isotropic_numpy(diag, add, mul)
    return out if out.size else None


def count_isotropic(diag_codes: np.ndarray, add: np.ndarray, mul: np.ndarray) -> int:
    """Number of nonzero vectors v with sum a_i v_i^2 = 0, over the whole space."""
    diag = np.ascontiguousarray(diag_codes, dtype=np.int64)
    if diag.shape[0] == 0:
        return 0
    if _use_numba():
        return int(_count_isotropic_njit(diag, add, mul))
    return _count_isotropic_numpy(diag, add, mul)
