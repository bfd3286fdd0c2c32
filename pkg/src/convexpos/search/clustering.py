"""Convex n-clusterings: n equal disjoint groups whose transversals are all convex."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from convexpos.cylinder.system import CurveSystem, is_convexly_independent
from convexpos.errors import ClusterOverlap, SizeLimit, UnequalSizes, UnknownLabel
from convexpos.geometry.bodies import Arrangement
from convexpos.limits import get_limit


@dataclass(frozen=True)
class ConvexClustering:
    clusters: tuple

    def __post_init__(self):
        object.__setattr__(self, "clusters", tuple(tuple(c) for c in self.clusters))

    @property
    def n(self) -> int:
        return len(self.clusters)

    @property
    def size(self) -> int:
        return len(self.clusters[0]) if self.clusters else 0

    def to_json(self) -> dict:
        return {"clusters": [list(c) for c in self.clusters]}

    @classmethod
    def from_json(cls, data: dict) -> "ConvexClustering":
        return cls(tuple(tuple(c) for c in data["clusters"]))


@dataclass(frozen=True)
class ClusteringReport:
    ok: bool
    size: int
    checked: int
    witness: tuple | None

    def __bool__(self):
        return self.ok


def _as_system(source) -> CurveSystem:
    if isinstance(source, Arrangement):
        from convexpos.geometry.tangents import dualize

        return dualize(source)
    return source


def verify_clustering(source, clustering: ConvexClustering) -> ClusteringReport:
    """Check every transversal with the envelope oracle."""
    S = _as_system(source)
    seen = set()
    for c in clustering.clusters:
        for x in c:
            if x in seen:
                raise ClusterOverlap(f"label {x!r} appears in two clusters")
            if x not in S.index:
                raise UnknownLabel(x)
            seen.add(x)
    sizes = {len(c) for c in clustering.clusters}
    if len(sizes) > 1:
        raise UnequalSizes(f"cluster sizes {sorted(sizes)}")
    total = clustering.size ** clustering.n
    cap = get_limit("transversals")
    if total > cap:
        raise SizeLimit(f"{total} transversals exceed the cap {cap}")
    checked = 0
    for tr in product(*clustering.clusters):
        checked += 1
        if len(tr) >= 3 and not is_convexly_independent(S, tr):
            return ClusteringReport(False, clustering.size, checked, tr)
    return ClusteringReport(True, clustering.size, checked, None)


def find_clustering(source, n: int, size: int) -> ConvexClustering | None:
    """Backtracking search; clusters are kept in increasing order of their minimum."""
    if n < 3 or size < 1:
        raise ValueError("need n >= 3 and size >= 1")
    S = _as_system(source)
    if S.n > get_limit("clustering"):
        raise SizeLimit(f"{S.n} curves exceed the clustering search limit")
    if n * size > S.n:
        return None
    labels = S.labels
    chosen: list[tuple] = []

    def partial_ok(new) -> bool:
        k = len(chosen) + 1
        if k < 3:
            return True
        for tr in product(*chosen):
            for x in new:
                if not is_convexly_independent(S, tr + (x,)):
                    return False
        return True

    def rec(used: set) -> bool:
        if len(chosen) == n:
            return True
        free = [x for x in labels if x not in used]
        if len(free) < (n - len(chosen)) * size:
            return False
        for first in free:
            if chosen and first < chosen[-1][0]:
                continue
            rest = [x for x in free if x > first]
            for tail in combinations(rest, size - 1):
                cluster = (first,) + tail
                if not partial_ok(cluster):
                    continue
                chosen.append(cluster)
                if rec(used | set(cluster)):
                    return True
                chosen.pop()
        return False

    return ConvexClustering(tuple(chosen)) if rec(set()) else None
