"""Dense mod-p kernels: row reduction and matrix products over GF(p).

These two loops sit under every predicate in the package, so by default they
are compiled with numba (cached across processes).  Set ACCMOD_NUMBA=0 to
select the pure-numpy fallback; benchmarks/bench_kernels.py compares the two.

All kernels take int64 arrays with entries already reduced to [0, p) and a
prime p small enough that p*p*cols fits in int64 (see fields.PRIME_LIMIT).
"""

from __future__ import annotations

import os

import numpy as np


def _rref_mod_loops(a, p):
    """In-place RREF of `a` mod p; returns (matrix, pivot columns)."""
    r, c = a.shape
    piv = np.empty(min(r, c), dtype=np.int64)
    npiv = 0
    row = 0
    for col in range(c):
        if row == r:
            break
        sel = -1
        for i in range(row, r):
            if a[i, col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != row:
            for j in range(c):
                t = a[row, j]
                a[row, j] = a[sel, j]
                a[sel, j] = t
        # inverse of the pivot via Fermat: x^(p-2) mod p
        base = a[row, col]
        e = p - 2
        acc = 1
        while e > 0:
            if e & 1:
                acc = (acc * base) % p
            base = (base * base) % p
            e >>= 1
        if acc != 1:
            for j in range(c):
                a[row, j] = (a[row, j] * acc) % p
        for i in range(r):
            if i != row and a[i, col] != 0:
                f = a[i, col]
                for j in range(c):
                    a[i, j] = (a[i, j] - f * a[row, j]) % p
        piv[npiv] = col
        npiv += 1
        row += 1
    return a, piv[:npiv]


def _matmul_mod_loops(a, b, p):
    n, k = a.shape
    k2, m = b.shape
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s += a[i, t] * b[t, j]
            out[i, j] = s % p
    return out


def _rref_mod_numpy(a, p):
    """Vectorized fallback with the same contract as _rref_mod_loops."""
    r, c = a.shape
    pivs = []
    row = 0
    for col in range(c):
        if row == r:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        sel = row + int(nz[0])
        if sel != row:
            a[[row, sel]] = a[[sel, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        if inv != 1:
            a[row] = (a[row] * inv) % p
        colvals = a[:, col].copy()
        colvals[row] = 0
        if np.any(colvals):
            a -= np.outer(colvals, a[row])
            a %= p
        pivs.append(col)
        row += 1
    return a, np.asarray(pivs, dtype=np.int64)


def _matmul_mod_numpy(a, b, p):
    return (a @ b) % p


def _pick_backend() -> str:
    flag = os.environ.get("ACCMOD_NUMBA", "auto").strip().lower()
    if flag in ("0", "off", "false", "no"):
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


BACKEND = _pick_backend()

if BACKEND == "numba":
    from numba import njit

    rref_mod = njit(cache=True)(_rref_mod_loops)
    matmul_mod = njit(cache=True)(_matmul_mod_loops)
else:
    rref_mod = _rref_mod_numpy
    matmul_mod = _matmul_mod_numpy


def implementations():
    """Backend name -> (rref, matmul); used by parity tests and benchmarks."""
    impls = {"numpy": (_rref_mod_numpy, _matmul_mod_numpy)}
    if BACKEND == "numba":
        impls["numba"] = (rref_mod, matmul_mod)
    return impls
