"""Geometric convex-independence test straight from support functions.

A member B is on the hull of the subset iff some direction has
``h_B > max of the others``.  The margin is scanned on a dense angular grid
and every local maximum is refined by golden-section search.  This route
does not share code with the tangent solver, so it can serve as an oracle.
"""
from __future__ import annotations

import numpy as np

from convexpos.errors import SubsetTooSmall, ToleranceError, UnknownLabel
from convexpos.geometry.bodies import Arrangement, support

EPS = 1e-9
INV_PHI = (np.sqrt(5) - 1) / 2


def _margin(arr: Arrangement, b, others, theta):
    hb = support(arr[b], theta)
    ho = np.max([support(arr[o], theta) for o in others], axis=0)
    return hb - ho


def _golden_max(f, lo, hi, iters=48):
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return max(fc, fd)


def max_margin(arr: Arrangement, b, others, grid: int = 4096) -> float:
    theta = 2 * np.pi * np.arange(grid) / grid
    vals = _margin(arr, b, others, theta)
    best = float(vals.max())
    step = 2 * np.pi / grid
    # the margin is Lipschitz with constant 2 * max |vertex|, so peaks far
    # below zero cannot reach it within one grid step
    lip = 2 * max(float(np.hypot(*arr[x].vertices.T).max()) for x in [b, *others])
    peaks = np.nonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))[0]
    for i in peaks:
        if vals[i] < -lip * step - 1e-6:
            continue
        f = lambda t: float(_margin(arr, b, others, np.array([t]))[0])  # noqa: E731
        best = max(best, _golden_max(f, theta[i] - step, theta[i] + step))
    return best


def is_convexly_independent_geometric(
    arr: Arrangement, subset, grid: int = 4096, eps: float = EPS
) -> bool:
    labels = list(dict.fromkeys(subset))
    if len(labels) < 3:
        raise SubsetTooSmall("independence is defined for three or more labels")
    for x in labels:
        if x not in arr.bodies:
            raise UnknownLabel(x)
    for b in labels:
        others = [o for o in labels if o != b]
        m = max_margin(arr, b, others, grid)
        if abs(m) <= eps:
            raise ToleranceError(f"margin of {b!r} is {m:.3g}, within tolerance {eps}")
        if m < 0:
            return False
    return True
