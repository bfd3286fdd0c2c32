"""Seeded jitter that removes degenerate tangencies."""
from __future__ import annotations

from itertools import combinations

import numpy as np

from convexpos.errors import ConvexPosError, PerturbationFailed
from convexpos.geometry.bodies import Arrangement, ConvexBody, InvalidBody
from convexpos.geometry.tangents import common_tangent_angles, dualize


def _tangent_counts(arr: Arrangement) -> dict:
    out = {}
    for a, b in combinations(arr.labels, 2):
        try:
            out[(a, b)] = len(common_tangent_angles(arr[a], arr[b]))
        except ConvexPosError:
            out[(a, b)] = None
    return out


def _is_generic(arr: Arrangement) -> bool:
    try:
        dualize(arr)
    except ConvexPosError:
        return False
    return True


def perturb(arr: Arrangement, eps: float, seed: int = 0, retries: int = 50) -> Arrangement:
    """Jitter every vertex by less than ``eps`` until the arrangement is generic.

    A generic input is returned unchanged.  Tangent counts of pairs that were
    already non-degenerate must survive the jitter.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if _is_generic(arr):
        return arr
    before = _tangent_counts(arr)
    for attempt in range(retries):
        rng = np.random.default_rng([seed, attempt])
        bodies = {}
        try:
            for label, body in arr:
                k = len(body.vertices)
                r = eps * 0.99 * np.sqrt(rng.random(k))
                a = rng.random(k) * 2 * np.pi
                bodies[label] = ConvexBody(body.vertices + np.c_[r * np.cos(a), r * np.sin(a)])
        except InvalidBody:
            continue
        cand = Arrangement(bodies)
        if not _is_generic(cand):
            continue
        after = _tangent_counts(cand)
        if all(c is None or after[p] == c for p, c in before.items()):
            return cand
    raise PerturbationFailed(f"no generic jitter found in {retries} attempts")
