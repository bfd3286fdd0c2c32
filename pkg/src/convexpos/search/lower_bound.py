"""Point sets with 2^(n-2) points and no n in convex position.

``cupcap_set(k, l)`` has C(k+l-4, k-2) points, no k-cup and no l-cap: it
is ``cupcap_set(k-1, l)`` followed by ``cupcap_set(k, l-1)`` shifted right
and far enough up that every connecting slope exceeds every inner slope.
The blocks ``cupcap_set(n-i, i+2)`` for i = 0..n-2 are then laid out from
left to right along a concave, falling arc whose connecting slopes lie
below every inner slope.  All checks use exact integer arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from convexpos.errors import SizeLimit
from convexpos.geometry.bodies import Arrangement
from convexpos.limits import get_limit


def _slope(p, q) -> Fraction:
    return Fraction(q[1] - p[1], q[0] - p[0])


def _inner_slopes(pts):
    return [_slope(p, q) for p, q in combinations(sorted(pts), 2)]


@lru_cache(maxsize=None)
def cupcap_set(k: int, l: int) -> tuple:
    if k <= 2 or l <= 2:
        return ((0, 0),)
    left = cupcap_set(k - 1, l)
    right = cupcap_set(k, l - 1)
    dx = max(p[0] for p in left) - min(p[0] for p in right) + 1
    inner = _inner_slopes(left) + _inner_slopes(right)
    top = max(inner, default=Fraction(0))
    dy = 1
    while True:
        moved = tuple((x + dx, y + dy) for x, y in right)
        if all(_slope(p, q) > top for p in left for q in moved):
            return tuple(sorted(left + moved))
        dy *= 2


def _concave_ok(blocks) -> bool:
    for i, j, k in combinations(range(len(blocks)), 3):
        for p in blocks[i]:
            for q in blocks[j]:
                s1 = _slope(p, q)
                for r in blocks[k]:
                    if not s1 > _slope(q, r):
                        return False
    return True


def _general_position(pts) -> bool:
    if len({p[0] for p in pts}) != len(pts):
        return False
    for p, q, r in combinations(pts, 3):
        if (q[0] - p[0]) * (r[1] - p[1]) == (q[1] - p[1]) * (r[0] - p[0]):
            return False
    return True


def _orientations(pts):
    out = []
    for p, q, r in combinations(pts, 3):
        d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        out.append(d > 0)
    return out


def _distinct_directions(pts) -> bool:
    seen = set()
    for p, q in combinations(pts, 2):
        s = _slope(p, q)
        if s in seen:
            return False
        seen.add(s)
    return True


def _break_parallels(pts, seed: int):
    """Scale up and jitter so that no two segments are parallel.

    The jitter is accepted only if every triple keeps its orientation, so
    the convex-position structure is untouched.
    """
    rng = np.random.default_rng(seed)
    target = _orientations(pts)
    scale = 64
    while True:
        jitter = rng.integers(-8, 9, size=(len(pts), 2))
        cand = [(x * scale + int(a), y * scale + int(b)) for (x, y), (a, b) in zip(pts, jitter)]
        if (
            len({p[0] for p in cand}) == len(cand)
            and _orientations(cand) == target
            and _distinct_directions(cand)
        ):
            return sorted(cand)
        scale *= 2


def lower_bound_points(n: int) -> list[tuple[int, int]]:
    """Integer points, sorted by x."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n > get_limit("lower_bound"):
        raise SizeLimit(f"lower bound construction limited to n <= {get_limit('lower_bound')}")
    raw = [cupcap_set(n - i, i + 2) for i in range(n - 1)]
    inner = [s for b in raw for s in _inner_slopes(b)]
    low = min(inner, default=Fraction(0))
    width = max(max(p[0] for p in b) - min(p[0] for p in b) for b in raw) + 1
    height = max(max(p[1] for p in b) - min(p[1] for p in b) for b in raw) + 1
    drop, spacing = 1, 32 * width
    while True:
        # block i sits near (i * spacing, -drop * i * (i + 1) / 2): a falling concave arc
        blocks = []
        for i, b in enumerate(raw):
            x0 = i * spacing - min(p[0] for p in b)
            y0 = -drop * (i * (i + 1) // 2) * height - min(p[1] for p in b)
            blocks.append([(x + x0, y + y0) for x, y in b])
        jumps_ok = all(
            _slope(p, q) < low
            for i, j in combinations(range(len(blocks)), 2)
            for p in blocks[i]
            for q in blocks[j]
        )
        pts = sorted(p for b in blocks for p in b)
        if jumps_ok and _concave_ok(blocks) and _general_position(pts):
            return _break_parallels(pts, seed=n)
        drop *= 2
        if drop > 1 << 40:
            drop, spacing = 1, 2 * spacing


def lower_bound_construction(n: int, verify: bool | None = None) -> Arrangement:
    """Point bodies labelled 0..2^(n-2)-1 with no n convexly independent.

    For n <= 6 the claim is re-checked by exhaustive search before returning.
    """
    pts = lower_bound_points(n)
    arr = Arrangement.from_points({i: p for i, p in enumerate(pts)})
    if verify is None:
        verify = n <= 6
    if verify and len(pts) >= 3:
        from convexpos.geometry.tangents import dualize
        from convexpos.search.brute import has_independent_subset

        if has_independent_subset(dualize(arr), n):
            raise AssertionError(f"construction for n={n} has {n} independent points")
    return arr
