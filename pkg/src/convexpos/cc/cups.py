"""Cups and caps in wiring diagrams.

Wires are ordered by their start height.  For wires ``x < y < z`` the
triple is a 3-cup exactly when ``{y, z}`` cross before ``{x, y}``; a chain
is a cup when the crossings of consecutive wires happen in strictly
decreasing order going up, and a cap when they happen in increasing order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from convexpos import _kernels
from convexpos.cc.wiring import (
    WiringDiagram,
    lower_envelope_path,
    require_valid,
    restrict_diagram,
    upper_envelope_path,
)
from convexpos.cylinder.system import pair_key


@dataclass(frozen=True)
class CupCapCertificate:
    kind: str  # "cup" or "cap"
    wires: tuple
    witness: WiringDiagram

    def __len__(self):
        return len(self.wires)

    def check(self) -> bool:
        return is_cup(self.witness) if self.kind == "cup" else is_cap(self.witness)


def is_cup(W: WiringDiagram) -> bool:
    """Every wire reaches the upper envelope."""
    return set(upper_envelope_path(W)) == set(W.base)


def is_cap(W: WiringDiagram) -> bool:
    return set(lower_envelope_path(W)) == set(W.base)


def switch_table(W: WiringDiagram) -> np.ndarray:
    """``T[i, j]``: index of the switch between the wires starting at heights i, j."""
    pos = {x: i for i, x in enumerate(W.base)}
    n = W.n
    T = np.full((n, n), -1, dtype=np.int64)
    for k, (x, y) in enumerate(W.switches):
        i, j = sorted((pos[x], pos[y]))
        T[i, j] = T[j, i] = k
    return T


def longest_cup_cap(W: WiringDiagram) -> tuple[CupCapCertificate, CupCapCertificate]:
    require_valid(W)
    cup, cap = _kernels.cup_cap_lengths(switch_table(W))
    out = []
    for kind, chain in (("cup", cup), ("cap", cap)):
        wires = tuple(W.base[i] for i in chain)
        out.append(CupCapCertificate(kind, wires, restrict_diagram(W, wires)))
    return out[0], out[1]


def brute_force_cup_cap(W: WiringDiagram) -> tuple[int, int]:
    """Largest cup and cap sizes by testing every subset's restriction."""
    require_valid(W)
    best = {"cup": min(W.n, 2), "cap": min(W.n, 2)}
    for k in range(3, W.n + 1):
        grew = False
        for subset in combinations(W.base, k):
            sub = restrict_diagram(W, subset)
            if best["cup"] < k and is_cup(sub):
                best["cup"] = k
                grew = True
            if best["cap"] < k and is_cap(sub):
                best["cap"] = k
                grew = True
            if best["cup"] == k and best["cap"] == k:
                break
        if not grew:
            break
    return best["cup"], best["cap"]


def is_cup_by_triples(W: WiringDiagram, wires) -> bool:
    """Chain criterion: consecutive crossings in decreasing order going up."""
    T = switch_table(W)
    pos = sorted(W.base.index(x) for x in wires)
    return all(T[a, b] > T[b, c] for a, b, c in zip(pos, pos[1:], pos[2:]))


def cup_diagram(k: int, labels=None) -> WiringDiagram:
    """The k-cup: the top wire sinks first, then the next, and so on."""
    labels = list(range(k)) if labels is None else list(labels)
    switches = []
    for top in range(k - 1, 0, -1):
        for below in range(top - 1, -1, -1):
            switches.append((labels[below], labels[top]))
    return WiringDiagram(tuple(labels), tuple(switches))


def cap_diagram(k: int, labels=None) -> WiringDiagram:
    """The k-cap: the bottom wire rises first, then the next, and so on."""
    labels = list(range(k)) if labels is None else list(labels)
    switches = []
    for bottom in range(k - 1):
        for above in range(bottom + 1, k):
            switches.append((labels[bottom], labels[above]))
    return WiringDiagram(tuple(labels), tuple(switches))


def pair_order(W: WiringDiagram) -> dict:
    return {pair_key(*s): k for k, s in enumerate(W.switches)}
