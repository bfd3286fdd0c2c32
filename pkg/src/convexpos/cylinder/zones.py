"""Triple classification, zones, triangle flips and the orientable reduction.

A convexly independent triple is orientable when its envelope word has
length 3 and non-orientable when it reads ``(t, x, t, y)``.  In the second
case every stretch of gaps where ``t`` is on top (within the triple) holds
exactly three events of the triple: ``t`` rising over one curve, the other
two curves crossing, ``t`` falling below the second one.  Those are the
left, bottom and right vertices of a zone.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from convexpos.cylinder.system import (
    CurveSystem,
    envelope_tops,
    is_convexly_independent,
    pair_key,
    restrict,
    upper_envelope,
)
from convexpos.errors import (
    ConvexPosError,
    LabelMismatch,
    StaleZone,
    TripleNotIndependent,
    TripleNotNonOrientable,
    ZoneNotEmpty,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TripleClass:
    kind: str  # "orientable" or "non-orientable"
    cycle: tuple | None = None
    top: object = None

    @property
    def orientable(self) -> bool:
        return self.kind == "orientable"


@dataclass(frozen=True, order=True)
class Zone:
    triple: tuple
    left_vertex: int
    bottom_vertex: int
    right_vertex: int
    top: object
    side: int

    @property
    def vertices(self) -> tuple:
        return (self.left_vertex, self.bottom_vertex, self.right_vertex)

    def to_json(self) -> dict:
        return {
            "triple": list(self.triple),
            "top": self.top,
            "vertices": list(self.vertices),
            "side": self.side,
        }


@dataclass(frozen=True)
class ZoneStatus:
    empty: bool
    free: bool
    intruders: tuple


def classify_triple(S: CurveSystem, triple) -> TripleClass:
    triple = tuple(sorted(triple))
    if not is_convexly_independent(S, triple):
        raise TripleNotIndependent(triple)
    env = upper_envelope(S, triple)
    if len(env) == 3:
        k = env.index(min(env))
        return TripleClass("orientable", cycle=env[k:] + env[:k])
    top = next(x for x in env if env.count(x) == 2)
    return TripleClass("non-orientable", top=top)


def alternation_words(S: CurveSystem, triple) -> dict:
    """Crossing word of each curve of the triple against the other two."""
    out = {}
    for x in triple:
        others = set(triple) - {x}
        out[x] = tuple(
            e[1] if e[0] == x else e[0]
            for e in S.events
            if x in e and (e[0] in others or e[1] in others)
        )
    return out


def is_alternating(cyc_word) -> bool:
    """Cyclic 4-letter word of type (x, y, x, y)."""
    return len(cyc_word) == 4 and all(cyc_word[i] != cyc_word[(i + 1) % 4] for i in range(4))


def _triple_event_indices(S: CurveSystem, triple) -> list[int]:
    a, b, c = sorted(triple)
    idx = []
    for pair in ((a, b), (a, c), (b, c)):
        idx.extend(S.pair_events.get(pair, ()))
    return sorted(idx)


def find_zones(S: CurveSystem, triple) -> tuple[Zone, Zone]:
    triple = tuple(sorted(triple))
    cls = classify_triple(S, triple)
    if cls.orientable:
        raise TripleNotNonOrientable(triple)
    t = cls.top
    idx = _triple_event_indices(S, triple)  # six events, cyclic order
    sub = restrict(S, triple)
    tops = envelope_tops(sub, triple)  # restricted gap r lies before restricted event r
    zones = []
    for r in range(6):
        # restricted event r - 1 enters a run of t, event r + 1 leaves it
        if tops[r] == t and tops[(r + 1) % 6] == t:
            left, bottom, right = idx[(r - 1) % 6], idx[r], idx[(r + 1) % 6]
            zones.append((left, bottom, right))
    if len(zones) != 2:
        raise ConvexPosError(f"triple {triple!r} does not have two zones")
    zones.sort()
    return tuple(Zone(triple, l, b, r, t, side) for side, (l, b, r) in enumerate(zones))


def _span(m: int, start: int, stop: int) -> list[int]:
    """Cyclic indices start, start + 1, ..., stop (inclusive)."""
    out = [start % m]
    while out[-1] != stop % m:
        out.append((out[-1] + 1) % m)
    return out


def _zone_roles(S: CurveSystem, z: Zone) -> tuple:
    """Lower curve before and after the bottom vertex, checking consistency."""
    m = S.m
    t = z.top
    if any(not 0 <= i < m for i in z.vertices):
        raise StaleZone(f"zone {z} does not fit the system")
    el, eb, er = (S.events[i] for i in z.vertices)
    if set(z.triple) != set(el) | set(eb) | set(er):
        raise StaleZone(f"zone {z} does not fit the system")
    if t not in el or t not in er or t in eb:
        raise StaleZone(f"zone {z} has inconsistent vertex events")
    p = el[0] if el[1] == t else el[1]
    q = er[0] if er[1] == t else er[1]
    if {p, q} != set(eb) or p == q:
        raise StaleZone(f"zone {z} has inconsistent vertex events")
    span = _span(m, z.left_vertex, z.right_vertex)
    if z.bottom_vertex not in span:
        raise StaleZone(f"zone {z} bottom vertex outside its span")
    triple_set = set(z.triple)
    for i in span[1:-1]:
        if i != z.bottom_vertex and set(S.events[i]) <= triple_set:
            raise StaleZone(f"zone {z} has another triple event inside")
    perm = S.permutations[(z.left_vertex + 1) % m]
    if perm.index(t) < perm.index(p):
        raise StaleZone(f"zone {z}: top curve is not above after the left vertex")
    return p, q, span


def zone_status(S: CurveSystem, z: Zone) -> ZoneStatus:
    p, q, span = _zone_roles(S, z)
    t = z.top
    m = S.m
    pos = S.positions
    idx = S.index
    it, ip, iq = idx[t], idx[p], idx[q]
    intruders = set()
    lower = ip
    for e in span[:-1]:
        if e == z.bottom_vertex:
            lower = iq
        g = (e + 1) % m
        lo, hi = pos[g, lower], pos[g, it]
        if hi - lo > 1:
            for j in range(S.n):
                if lo < pos[g, j] < hi:
                    intruders.add(S.labels[j])
    free = not any(t in S.events[i] for i in span[1:-1] if i != z.bottom_vertex)
    return ZoneStatus(not intruders, free, tuple(sorted(intruders)))


def check_all_triples_independent(S: CurveSystem) -> None:
    for triple in combinations(S.labels, 3):
        if not is_convexly_independent(S, triple):
            raise TripleNotIndependent(triple)


def non_orientable_triples(S: CurveSystem) -> list[tuple]:
    out = []
    for triple in combinations(S.labels, 3):
        if len(upper_envelope(S, triple)) == 4:
            out.append(triple)
    return out


def all_zones(S: CurveSystem) -> list[Zone]:
    out = []
    for triple in non_orientable_triples(S):
        out.extend(find_zones(S, triple))
    return sorted(out, key=lambda z: (z.triple, z.left_vertex))


def _span_len(m, z):
    return (z.right_vertex - z.left_vertex) % m


def _inside(m, outer: Zone, inner: Zone) -> bool:
    """Event span of ``inner`` strictly contained in that of ``outer``."""
    lo = (inner.left_vertex - outer.left_vertex) % m
    hi = (inner.right_vertex - outer.left_vertex) % m
    return 0 <= lo < hi <= _span_len(m, outer) and (lo, hi) != (0, _span_len(m, outer))


def _walk(S: CurveSystem, zones: list[Zone]) -> Zone | None:
    """Descend into zones nested inside a non-empty zone until one is empty."""
    m = S.m
    z = zones[0]
    while True:
        st = zone_status(S, z)
        if st.empty:
            return z
        nested = [w for w in zones if _inside(m, z, w) and set(w.triple) & set(st.intruders)]
        if not nested:
            nested = [w for w in zones if _inside(m, z, w)]
        if not nested:
            return None
        z = min(nested, key=lambda w: (_span_len(m, w), w.triple, w.left_vertex))


def find_empty_zone(S: CurveSystem, strategy: str = "enumerate") -> Zone | None:
    """An empty zone of some non-orientable triple, or None if S is orientable.

    ``enumerate`` returns the zone with the smallest (triple, left vertex);
    ``walk`` follows nested zones and falls back to enumeration.
    """
    check_all_triples_independent(S)
    zones = all_zones(S)
    if not zones:
        return None
    if strategy == "walk":
        found = _walk(S, zones)
        if found is not None:
            return found
        log.info("zone walk stalled; falling back to enumeration")
    elif strategy != "enumerate":
        raise ValueError(f"unknown strategy {strategy!r}")
    for z in zones:
        if zone_status(S, z).empty:
            return z
    raise ConvexPosError("non-orientable system without an empty zone")


def _flip_rotated(S: CurveSystem, z: Zone) -> tuple[CurveSystem, tuple]:
    m = S.m
    L = z.left_vertex
    R = S.rotate(L)
    b = (z.bottom_vertex - L) % m
    r = (z.right_vertex - L) % m
    ev = R.events
    between_lb = ev[1:b]
    between_br = ev[b + 1 : r]
    new = between_lb + (ev[r], ev[b], ev[0]) + between_br + ev[r + 1 :]
    flipped = CurveSystem(R.base, new)
    back = flipped.rotate((m - L) % m)
    k = len(between_lb)
    return back, tuple((L + k + i) % m for i in range(3))


def triangle_flip(S: CurveSystem, z: Zone) -> CurveSystem:
    """Reverse the three vertex events of an empty zone."""
    return flip_with_positions(S, z)[0]


def flip_with_positions(S: CurveSystem, z: Zone) -> tuple[CurveSystem, tuple]:
    st = zone_status(S, z)
    if not st.empty:
        raise ZoneNotEmpty(z, st.intruders)
    new, positions = _flip_rotated(S, z)
    # full re-validation, not just the local argument
    new = CurveSystem(new.base, new.events)
    return new, positions


@dataclass(frozen=True)
class FlipRecord:
    triple: tuple
    top: object
    vertex_indices_before: tuple
    position_after: tuple
    non_orientable_before: int
    non_orientable_after: int

    def to_json(self) -> dict:
        return {
            "triple": list(self.triple),
            "top": self.top,
            "vertex_indices_before": list(self.vertex_indices_before),
            "position_after": list(self.position_after),
        }


def reduce_to_orientable(S: CurveSystem, strategy: str = "enumerate"):
    """Flip empty zones until every triple is orientable.

    Returns ``(system, flip_log)``.  The independence hypothesis is checked
    again before every flip and the count of non-orientable triples must
    drop by at least one per flip.
    """
    records: list[FlipRecord] = []
    count = len(non_orientable_triples(S))
    budget = count
    while True:
        z = find_empty_zone(S, strategy=strategy)
        if z is None:
            return S, records
        if len(records) >= budget:
            raise ConvexPosError("flip budget exceeded")
        new, positions = flip_with_positions(S, z)
        after = len(non_orientable_triples(new))
        if after >= count:
            raise ConvexPosError(f"flip did not reduce non-orientable triples ({count} -> {after})")
        records.append(FlipRecord(z.triple, z.top, z.vertices, positions, count, after))
        S, count = new, after


@dataclass(frozen=True)
class WeakMapReport:
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_weak_map(before: CurveSystem, after: CurveSystem, max_subset_size: int = 6) -> WeakMapReport:
    """Every set independent after the map must be independent before it."""
    if set(before.labels) != set(after.labels):
        raise LabelMismatch(f"{before.labels!r} vs {after.labels!r}")
    checked = 0
    bad = []
    top = min(max_subset_size, after.n)
    for k in range(3, top + 1):
        for subset in combinations(after.labels, k):
            checked += 1
            if is_convexly_independent(after, subset) and not is_convexly_independent(before, subset):
                bad.append(subset)
    return WeakMapReport(checked, tuple(bad))


def triple_class_table(S: CurveSystem) -> dict:
    return {t: classify_triple(S, t) for t in combinations(S.labels, 3)}


def crossing_pairs_unchanged(before: CurveSystem, after: CurveSystem, triple: Iterable) -> bool:
    """Crossing words of pairs with at most one member in ``triple`` agree."""
    tri = set(triple)
    for x in before.labels:
        others = [y for y in before.labels if y != x and not ({x, y} <= tri)]
        w1 = [pair_key(*e) for e in before.events if x in e and (set(e) - {x}) <= set(others)]
        w2 = [pair_key(*e) for e in after.events if x in e and (set(e) - {x}) <= set(others)]
        if not _cyclic_equal(w1, w2):
            return False
    return True


def _cyclic_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = b + b
    return any(doubled[i : i + len(a)] == a for i in range(len(b)))
