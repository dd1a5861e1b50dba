# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython twin of _kernels_py: same schoolbook loops, no interpreter overhead.

Coefficients are arbitrary-precision Python ints, so the arithmetic itself
still goes through PyNumber_*; the win comes from removing bytecode dispatch
and list indexing overhead in the double loop.
"""

BACKEND = "cython"


def convolve(list a, list b):
    """Schoolbook product of two ascending int coefficient lists."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def horner(list coeffs, x):
    """Evaluate an ascending coefficient list at x (any numeric type)."""
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i
    acc = 0
    for i in range(n - 1, -1, -1):
        acc = acc * x + coeffs[i]
    return acc
