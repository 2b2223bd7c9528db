# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: weighted PAVA and the Brownian-minus-parabola argmax.

Results are bit-identical to isoinverse._kernels.pure: same double
arithmetic in the same order, same first-wins tie convention.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def pava_blocks(double[::1] y, double[::1] w):
    cdef Py_ssize_t n = y.shape[0]
    starts_arr = np.empty(n, dtype=np.int64)
    means_arr = np.empty(n, dtype=np.float64)
    weights_arr = np.empty(n, dtype=np.float64)
    cdef long long[::1] starts = starts_arr
    cdef double[::1] means = means_arr
    cdef double[::1] weights = weights_arr
    cdef Py_ssize_t i, m = 0
    cdef double wsum
    with nogil:
        for i in range(n):
            starts[m] = i
            means[m] = y[i]
            weights[m] = w[i]
            m += 1
            while m >= 2 and means[m - 2] > means[m - 1]:
                wsum = weights[m - 2] + weights[m - 1]
                means[m - 2] = (weights[m - 2] * means[m - 2] + weights[m - 1] * means[m - 1]) / wsum
                weights[m - 2] = wsum
                m -= 1
    return starts_arr[:m].copy(), means_arr[:m].copy()


def brownian_parabola_argmax(double[:, ::1] steps_left, double[:, ::1] steps_right, double dt):
    cdef Py_ssize_t m = steps_left.shape[0]
    cdef Py_ssize_t k = steps_left.shape[1]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double sdt = sqrt(dt)
    cdef Py_ssize_t i, j, best_j
    cdef int best_side
    cdef double walk, val, best, t
    with nogil:
        for i in range(m):
            # Left walk runs outward from 0 while the canonical scan order
            # starts at -T, so ties prefer the larger j (>=); the center and
            # right side then only win on strictly greater values.
            walk = 0.0
            best = -1e308
            best_j = 0
            for j in range(k):
                walk += steps_left[i, j]
                t = (j + 1) * dt
                val = walk * sdt - t * t
                if val >= best:
                    best = val
                    best_j = j
            best_side = -1
            if 0.0 > best:
                best = 0.0
                best_side = 0
            walk = 0.0
            for j in range(k):
                walk += steps_right[i, j]
                t = (j + 1) * dt
                val = walk * sdt - t * t
                if val > best:
                    best = val
                    best_j = j
                    best_side = 1
            if best_side == 0:
                out[i] = 0.0
            elif best_side > 0:
                out[i] = (best_j + 1) * dt
            else:
                out[i] = -(best_j + 1) * dt
    return out_arr
