"""Pure-Python fallback for the hot integer-polynomial kernels.

Coefficient lists are ascending-power Python ints of arbitrary size, so the
loops below cannot be vectorized with fixed-width numpy arrays; the Cython
twin (_kernels_c) runs the same schoolbook loops without interpreter
overhead.
"""

BACKEND = "python"


def convolve(a, b):
    """Schoolbook product of two ascending int coefficient lists."""
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return out


def horner(coeffs, x):
    """Evaluate an ascending coefficient list at x (any numeric type)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
