"""Seeded random instances.

Every instance draws from ``np.random.default_rng([seed, counter])`` so a
batch can be split across workers and still reproduce serial output.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from convexpos.cc.wiring import WiringDiagram
from convexpos.cylinder.system import is_convexly_independent
from convexpos.errors import ConvexPosError, GenerationFailed
from convexpos.geometry.bodies import Arrangement, ConvexBody
from convexpos.geometry.tangents import common_tangent_angles, dualize


def rng_for(seed: int, counter: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, counter])


def random_wiring_diagram(n: int, rng: np.random.Generator, labels=None) -> WiringDiagram:
    """Swap random adjacent pairs that are still in their initial order."""
    labels = list(range(n)) if labels is None else list(labels)
    rank = {x: i for i, x in enumerate(labels)}
    perm = list(labels)
    switches = []
    while True:
        ready = [i for i in range(n - 1) if rank[perm[i]] < rank[perm[i + 1]]]
        if not ready:
            break
        i = ready[int(rng.integers(len(ready)))]
        switches.append((perm[i], perm[i + 1]))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return WiringDiagram(tuple(labels), tuple(switches))


def random_points(n: int, rng: np.random.Generator, retries: int = 100) -> Arrangement:
    """Points on a fine grid with no three collinear and no parallel segments."""
    for _ in range(retries):
        pts = rng.integers(0, 10**6, size=(n, 2))
        arr = Arrangement.from_points({i: (float(x), float(y)) for i, (x, y) in enumerate(pts)})
        try:
            dualize(arr)
        except ConvexPosError:
            continue
        return arr
    raise GenerationFailed(f"no generic {n}-point set in {retries} attempts")


def thin_body(center, angle, length, width, k: int = 6) -> ConvexBody:
    t = 2 * np.pi * np.arange(k) / k + 0.3
    local = np.c_[0.5 * length * np.cos(t), 0.5 * width * np.sin(t)]
    c, s = np.cos(angle), np.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    return ConvexBody(local @ rot.T + np.asarray(center))


def _random_body(rng, box, point_prob):
    center = rng.random(2) * box
    if rng.random() < point_prob:
        return ConvexBody.point(*center)
    return thin_body(center, rng.random() * np.pi, 1.5 + rng.random() * 4.5, 0.05 + 0.25 * rng.random())


def random_arrangement(
    n: int,
    rng: np.random.Generator,
    point_prob: float = 0.5,
    independent_triples: bool = True,
    box: float = 10.0,
    retries: int = 400,
    restarts: int = 20,
) -> Arrangement:
    """Incrementally add points and thin polygons, keeping every pair non-crossing.

    With ``independent_triples`` a body is kept only if no triple becomes
    dependent.  The final arrangement is generic (its dual system exists).
    After ``retries`` rejected candidates the partial arrangement is dropped
    and the search starts over, at most ``restarts`` times.
    """
    for _ in range(restarts + 1):
        bodies = _grow(n, rng, point_prob, independent_triples, box, retries)
        if len(bodies) == n:
            return Arrangement(bodies)
    raise GenerationFailed(f"placed {len(bodies)} of {n} bodies after {restarts} restarts")


def _grow(n, rng, point_prob, independent_triples, box, budget) -> dict:
    bodies: dict = {}
    while len(bodies) < n and budget > 0:
        budget -= 1
        label = len(bodies)
        cand = _random_body(rng, box, point_prob)
        try:
            if any(len(common_tangent_angles(cand, b)) != 2 for b in bodies.values()):
                continue
            arr = Arrangement({**bodies, label: cand})
            S = dualize(arr) if len(arr) >= 2 else None
        except ConvexPosError:
            continue
        if independent_triples and S is not None and len(arr) >= 3:
            others = [x for x in arr.labels if x != label]
            if not all(is_convexly_independent(S, (a, b, label)) for a, b in combinations(others, 2)):
                continue
        bodies[label] = cand
    return bodies


def all_wiring_diagrams(n: int, labels=None):
    """Every valid diagram with the given base (one per reduced word)."""
    labels = tuple(range(n)) if labels is None else tuple(labels)
    rank = {x: i for i, x in enumerate(labels)}
    perm = list(labels)
    switches: list = []
    total = n * (n - 1) // 2

    def rec():
        if len(switches) == total:
            yield WiringDiagram(labels, tuple(switches))
            return
        for i in range(n - 1):
            x, y = perm[i], perm[i + 1]
            if rank[x] < rank[y]:
                switches.append((x, y))
                perm[i], perm[i + 1] = y, x
                yield from rec()
                perm[i], perm[i + 1] = x, y
                switches.pop()

    yield from rec()
