"""Pure-Python/numpy fallbacks for the compiled kernels.

Both backends must return bit-identical results: the pooled-mean updates in
``pava_blocks`` use the same scalar double arithmetic in the same order as the
compiled loop, and ``brownian_parabola_argmax`` reproduces numpy's first-wins
argmax convention over the grid ordered from -T to T.
"""

import numpy as np


def pava_blocks(y, w):
    """Weighted pool-adjacent-violators on (y, w).

    Returns (starts, levels): int64 block start indices and float64 block
    means, with levels nondecreasing. Pooling keeps running weighted means,
    never re-summing, so the pass is O(n).
    """
    n = len(y)
    starts = [0] * n
    means = [0.0] * n
    weights = [0.0] * n
    m = 0
    for i in range(n):
        starts[m] = i
        means[m] = float(y[i])
        weights[m] = float(w[i])
        m += 1
        while m >= 2 and means[m - 2] > means[m - 1]:
            wsum = weights[m - 2] + weights[m - 1]
            means[m - 2] = (weights[m - 2] * means[m - 2] + weights[m - 1] * means[m - 1]) / wsum
            weights[m - 2] = wsum
            m -= 1
    return (
        np.asarray(starts[:m], dtype=np.int64),
        np.asarray(means[:m], dtype=np.float64),
    )


def brownian_parabola_argmax(steps_left, steps_right, dt):
    """Location of the max of B(t) - t^2 on the grid, one path per row.

    ``steps_left``/``steps_right`` hold the raw standard-normal increments of
    the two independent walks (outward from 0); scaling by sqrt(dt) happens
    here. Ties resolve to the first grid point scanning from -T.
    """
    m, k = steps_left.shape
    tgrid = np.arange(1, k + 1) * dt
    drift = tgrid * tgrid
    sdt = np.sqrt(dt)
    left = np.cumsum(steps_left, axis=1) * sdt - drift
    right = np.cumsum(steps_right, axis=1) * sdt - drift
    values = np.concatenate([left[:, ::-1], np.zeros((m, 1)), right], axis=1)
    idx = np.argmax(values, axis=1)
    return (idx - k) * dt
