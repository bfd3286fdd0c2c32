"""Common supporting tangents and dualization into curve systems.

Between consecutive edge-normal angles of two polygons the extreme
vertices ``vA``, ``vB`` are fixed, so ``h_A - h_B = <vA - vB, u(theta)>``
is a single sinusoid ``R cos(theta - phi)`` whose zeros are
``phi +- pi/2``.  Point-only arrangements are handled in exact rational
arithmetic instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import pi

import numpy as np

from convexpos.cylinder.system import CurveSystem, pair_key
from convexpos.errors import CrossingPair, DegeneratePair, InvalidSystem, NotGeneric
from convexpos.geometry.bodies import Arrangement, ConvexBody, support

TWO_PI = 2 * pi
EPS = 1e-9
MIN_EVENT_GAP = 1e-7


@dataclass(frozen=True)
class TangentEvent:
    pair: tuple
    angle: float
    sign: object  # label whose support is larger just after the event


def _breakpoints(A: ConvexBody, B: ConvexBody) -> np.ndarray:
    pts = np.concatenate([A.edge_normal_angles(), B.edge_normal_angles(), [0.0]])
    pts = np.unique(np.mod(pts, TWO_PI))
    return np.append(pts, pts[0] + TWO_PI)


def common_tangent_angles(A: ConvexBody, B: ConvexBody, eps: float = EPS) -> list[float]:
    """All angles in [0, 2pi) where the supports of A and B cross."""
    bps = _breakpoints(A, B)
    scale = 1.0 + max(np.abs(A.vertices).max(), np.abs(B.vertices).max())
    zeros = []
    for lo, hi in zip(bps[:-1], bps[1:]):
        if hi - lo < 1e-15:
            continue
        mid = 0.5 * (lo + hi)
        u = np.array([np.cos(mid), np.sin(mid)])
        va = A.vertices[int(np.argmax(A.vertices @ u))]
        vb = B.vertices[int(np.argmax(B.vertices @ u))]
        d = va - vb
        R = float(np.hypot(*d))
        if R <= eps * scale:
            raise DegeneratePair(("A", "B"), "supports coincide on an interval")
        phi = float(np.arctan2(d[1], d[0]))
        for z in (phi + pi / 2, phi - pi / 2):
            z = lo + np.mod(z - lo, TWO_PI)
            if z <= hi + 1e-15:
                zeros.append(float(np.mod(z, TWO_PI)))
    zeros.sort()
    merged = []
    for z in zeros:
        if merged and abs(z - merged[-1]) < 1e-12:
            continue
        merged.append(z)
    if len(merged) > 1 and merged[0] + TWO_PI - merged[-1] < 1e-12:
        merged.pop()
    if not merged:
        return merged
    # each zero must be a transversal sign change
    na = A.edge_normal_angles()
    nb = B.edge_normal_angles()
    ext = merged + [merged[0] + TWO_PI]
    mids = [0.5 * (a + b) for a, b in zip(ext[:-1], ext[1:])]
    diffs = support(A, np.array(mids)) - support(B, np.array(mids))
    for k, z in enumerate(merged):
        left, right = diffs[k - 1], diffs[k]
        if abs(left) <= eps * scale or abs(right) <= eps * scale:
            raise DegeneratePair(("A", "B"), f"near-tangential contact at {z:.6g}")
        if np.sign(left) == np.sign(right):
            raise DegeneratePair(("A", "B"), f"tangential contact at {z:.6g}")
        if _near_any(z, na) and _near_any(z, nb):
            raise DegeneratePair(("A", "B"), f"common tangent along parallel edges at {z:.6g}")
    return merged


def _near_any(z, angles, tol=1e-9) -> bool:
    if len(angles) == 0:
        return False
    d = np.abs(np.mod(angles - z + pi, TWO_PI) - pi)
    return bool(d.min() < tol)


def tangent_events(arr: Arrangement, eps: float = EPS) -> list[TangentEvent]:
    """Sorted crossing events of the dual curves; every pair must cross twice."""
    events = []
    for a, b in combinations(arr.labels, 2):
        A, B = arr[a], arr[b]
        try:
            angles = common_tangent_angles(A, B, eps)
        except DegeneratePair as err:
            raise DegeneratePair((a, b), str(err).split(": ", 1)[-1]) from None
        if len(angles) != 2:
            raise CrossingPair((a, b), len(angles))
        for z in angles:
            after = z + 1e-6
            larger = a if support(A, after) > support(B, after) else b
            events.append(TangentEvent((a, b), z, larger))
    events.sort(key=lambda e: e.angle)
    return events


def _exact_direction_key():
    """Order directions by angle in (0, 2pi]."""

    def half(v):
        x, y = v
        return 0 if (y > 0 or (y == 0 and x < 0)) else 1

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        c = u[0] * v[1] - u[1] * v[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return cmp_to_key(cmp)


def dualize_points_exact(arr: Arrangement) -> CurveSystem:
    """Dual system of point bodies using exact rational orientation tests."""
    pts = {k: (Fraction(float(b.vertices[0, 0])), Fraction(float(b.vertices[0, 1]))) for k, b in arr}
    events = []
    for a, b in combinations(arr.labels, 2):
        dx, dy = pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]
        if dx == 0 and dy == 0:
            raise DegeneratePair((a, b), "identical points")
        for d in ((-dy, dx), (dy, -dx)):
            events.append((d, (a, b)))
    key = _exact_direction_key()
    events.sort(key=lambda e: key(e[0]))
    for (d1, p1), (d2, p2) in zip(events, events[1:]):
        if key(d1) == key(d2):
            raise NotGeneric(f"pairs {p1!r} and {p2!r} have a common tangent direction")
    # just after angle 0 the support is x + tiny * y
    base = tuple(sorted(arr.labels, key=lambda k: pts[k]))
    return CurveSystem(base, tuple(pair_key(*p) for _, p in events))


def dualize(arr: Arrangement, eps: float = EPS) -> CurveSystem:
    """Cyclic crossing sequence of the support curves, read from angle 0."""
    if len(arr) < 2:
        return CurveSystem(arr.labels, ())
    if arr.all_points:
        return dualize_points_exact(arr)
    events = tangent_events(arr, eps)
    angles = np.array([e.angle for e in events])
    gaps = np.diff(np.append(angles, angles[0] + TWO_PI))
    if gaps.min() < MIN_EVENT_GAP:
        k = int(np.argmin(gaps))
        raise NotGeneric(f"events {events[k].pair!r} and {events[(k + 1) % len(events)].pair!r} coincide")
    if angles[0] < MIN_EVENT_GAP or TWO_PI - angles[-1] < MIN_EVENT_GAP:
        raise NotGeneric("a common tangent lies at angle 0")
    theta0 = 0.5 * angles[0]
    h = {k: float(support(b, theta0)) for k, b in arr}
    base = tuple(sorted(arr.labels, key=lambda k: h[k]))
    vals = sorted(h.values())
    if min(np.diff(vals)) < eps:
        raise NotGeneric("tied supports at angle 0")
    try:
        return CurveSystem(base, tuple(e.pair for e in events))
    except InvalidSystem as err:
        raise NotGeneric(f"numerical event order inconsistent: {err}") from None
