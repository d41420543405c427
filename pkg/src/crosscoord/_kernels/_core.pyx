# cython: language_level=3
"""Compiled kernels: simplex projection and the min-norm Gram solver.

Mirrors crosscoord._kernels._py operation for operation; see that module
for the reference semantics.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

cdef double _SIMPLEX_ATOL = 1e-12


cdef void _project_inplace(double* v, double* scratch, Py_ssize_t n) noexcept nogil:
    """Project v (length n) onto the simplex, writing the result into v."""
    cdef Py_ssize_t i, j, rho
    cdef double s, css, theta, key
    cdef bint nonneg = True

    if n == 1:
        v[0] = 1.0
        return

    s = 0.0
    for i in range(n):
        s += v[i]
        if v[i] < 0.0:
            nonneg = False
    if nonneg and (s - 1.0 if s >= 1.0 else 1.0 - s) <= _SIMPLEX_ATOL:
        return

    # insertion sort into descending order (n is the agent count: tiny)
    for i in range(n):
        scratch[i] = v[i]
    for i in range(1, n):
        key = scratch[i]
        j = i - 1
        while j >= 0 and scratch[j] < key:
            scratch[j + 1] = scratch[j]
            j -= 1
        scratch[j + 1] = key

    rho = 0
    css = 0.0
    theta = 0.0
    for i in range(n):
        css += scratch[i]
        if scratch[i] + (1.0 - css) / (i + 1.0) > 0.0:
            rho = i
            theta = (css - 1.0) / (i + 1.0)
    for i in range(n):
        v[i] = v[i] - theta
        if v[i] < 0.0:
            v[i] = 0.0


def simplex_project(v):
    """Euclidean projection of a vector onto the probability simplex."""
    cdef cnp.ndarray[double, ndim=1] arr = np.ascontiguousarray(v, dtype=np.float64).copy()
    cdef Py_ssize_t n = arr.shape[0]
    cdef double* scratch = <double*> malloc(n * sizeof(double))
    if scratch == NULL:
        raise MemoryError()
    try:
        _project_inplace(&arr[0], scratch, n)
    finally:
        free(scratch)
    return arr


def min_norm_gram(gram, double tol=1e-10, long max_iter=100_000):
    """Weights on the simplex minimizing gamma' G gamma for a PSD Gram matrix G."""
    cdef cnp.ndarray[double, ndim=2] g = np.ascontiguousarray(gram, dtype=np.float64)
    cdef Py_ssize_t k = g.shape[0]
    cdef cnp.ndarray[double, ndim=1] gamma
    cdef double g11, g12, g22, denom, a, lip, step, delta, d, acc
    cdef double* buf
    cdef double* cur
    cdef double* nxt
    cdef double* scratch
    cdef Py_ssize_t i, j
    cdef long it

    if k == 1:
        return np.array([1.0])
    if k == 2:
        g11 = g[0, 0]
        g12 = g[0, 1]
        g22 = g[1, 1]
        denom = g11 + g22 - 2.0 * g12
        if denom <= 0.0:
            a = 0.5
        else:
            a = (g22 - g12) / denom
            if a < 0.0:
                a = 0.0
            elif a > 1.0:
                a = 1.0
        return np.array([a, 1.0 - a])

    gamma = np.full(k, 1.0 / k)
    lip = 0.0
    for i in range(k):
        lip += g[i, i]
    lip *= 2.0
    if lip <= 0.0:
        return gamma
    step = 1.0 / lip

    buf = <double*> malloc(3 * k * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cur = buf
    nxt = buf + k
    scratch = buf + 2 * k
    try:
        with nogil:
            for i in range(k):
                cur[i] = 1.0 / k
            for it in range(max_iter):
                for i in range(k):
                    acc = 0.0
                    for j in range(k):
                        acc += g[i, j] * cur[j]
                    nxt[i] = cur[i] - step * 2.0 * acc
                _project_inplace(nxt, scratch, k)
                delta = 0.0
                for i in range(k):
                    d = nxt[i] - cur[i]
                    if d < 0.0:
                        d = -d
                    if d > delta:
                        delta = d
                    cur[i] = nxt[i]
                if delta <= tol:
                    break
        for i in range(k):
            gamma[i] = cur[i]
    finally:
        free(buf)
    return gamma
