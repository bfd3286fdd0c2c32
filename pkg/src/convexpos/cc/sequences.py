"""Wiring diagrams from chirotopes.

For a start order of the labels, every triple i < j < k either switches
(ij, ik, jk) or (jk, ik, ij), and which of the two is fixed by its
orientation.  Switching adjacent pairs greedily subject to these local
orders gives a diagram; starting from the angular order around a hull
vertex makes the greedy succeed.  Every result is checked against the
chirotope before it is returned.
"""
from __future__ import annotations

from functools import cmp_to_key
from itertools import combinations

from convexpos.cc.chirotope import Chirotope, chirotope_from_system
from convexpos.cc.wiring import WiringDiagram, double_cover
from convexpos.errors import ConvexPosError


def _triple_orders(chi: Chirotope, order) -> dict:
    rank = {x: i for i, x in enumerate(order)}
    out = {}
    for t in combinations(order, 3):
        i, j, k = sorted(t, key=rank.get)
        asc = ((i, j), (i, k), (j, k))
        c = chirotope_from_system(double_cover(WiringDiagram((i, j, k), asc)))
        out[frozenset(t)] = asc if c.orient(i, j, k) == chi.orient(i, j, k) else asc[::-1]
    return out


def _greedy(chi: Chirotope, order) -> WiringDiagram | None:
    rank = {x: i for i, x in enumerate(order)}
    local = _triple_orders(chi, order)
    perm = list(order)
    done: set = set()
    switches = []
    total = len(order) * (len(order) - 1) // 2
    while len(switches) < total:
        for p in range(len(perm) - 1):
            x, y = perm[p], perm[p + 1]
            if rank[x] > rank[y]:
                continue
            ready = True
            for z in order:
                if z == x or z == y:
                    continue
                for pair in local[frozenset((x, y, z))]:
                    if set(pair) == {x, y}:
                        break
                    if frozenset(pair) not in done:
                        ready = False
                        break
                if not ready:
                    break
            if ready:
                switches.append((x, y))
                done.add(frozenset((x, y)))
                perm[p], perm[p + 1] = y, x
                break
        else:
            return None
    return WiringDiagram(tuple(order), tuple(switches))


def hull_vertices(chi: Chirotope) -> list:
    """Labels v for which every other pair is ordered the same way around v."""
    out = []
    for v in chi.labels:
        others = [x for x in chi.labels if x != v]
        first = sorted(others, key=cmp_to_key(lambda a, b: -chi.orient(v, a, b)))
        if all(chi.orient(v, a, b) == 1 for a, b in combinations(first, 2)):
            out.append(v)
    return out


def wiring_from_chirotope(chi: Chirotope) -> WiringDiagram:
    """A wiring diagram whose double cover has chirotope ``chi``."""
    for v in hull_vertices(chi):
        others = [x for x in chi.labels if x != v]
        order = [v] + sorted(others, key=cmp_to_key(lambda a, b: -chi.orient(v, a, b)))
        W = _greedy(chi, order)
        if W is not None and chirotope_from_system(double_cover(W)) == chi:
            return W
    raise ConvexPosError("no allowable sequence found for this chirotope")
