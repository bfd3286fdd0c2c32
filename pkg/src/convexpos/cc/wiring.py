"""Wiring diagrams: half-periods of allowable sequences.

Orders are read bottom to top.  A switch ``(x, y)`` says that ``x`` lies
immediately below ``y`` and the two wires cross.  Textual words such as
``"badc"`` list a permutation in the same bottom-to-top order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from convexpos.cylinder.system import CurveSystem, pair_key
from convexpos.errors import InvalidDiagram, NonAdjacentSwitch, UnknownLabel


@dataclass(frozen=True)
class WiringDiagram:
    base: tuple
    switches: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "switches", tuple(tuple(s) for s in self.switches))

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def top(self):
        return self.base[-1]

    def to_json(self) -> dict:
        return {"base": list(self.base), "switches": [list(s) for s in self.switches]}

    @classmethod
    def from_json(cls, data: dict) -> "WiringDiagram":
        return cls(tuple(data["base"]), tuple(tuple(s) for s in data["switches"]))


def word(perm: Sequence) -> str:
    """Bottom-to-top permutation as a string of labels."""
    return "".join(str(x) for x in perm)


def parse_switches(text: str) -> tuple:
    """``"dc,ac,bc"`` -> ``(("d","c"), ("a","c"), ("b","c"))`` for one-letter labels."""
    return tuple((s[0], s[1]) for s in text.replace(" ", "").split(",") if s)


def simulate(base: Sequence, switches: Iterable) -> list[tuple]:
    """Every permutation of the diagram, initial one included."""
    perm = list(base)
    where = {x: i for i, x in enumerate(perm)}
    out = [tuple(perm)]
    for k, (x, y) in enumerate(switches):
        for label in (x, y):
            if label not in where:
                raise UnknownLabel(label)
        i, j = where[x], where[y]
        if j != i + 1:
            reason = "wrong order (above, below)" if i == j + 1 else "not adjacent"
            raise NonAdjacentSwitch(k, (x, y), reason)
        perm[i], perm[j] = y, x
        where[x], where[y] = j, i
        out.append(tuple(perm))
    return out


@dataclass(frozen=True)
class DiagramReport:
    problems: tuple

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.valid


def validate_wiring_diagram(W: WiringDiagram) -> DiagramReport:
    problems = []
    if len(set(W.base)) != len(W.base):
        problems.append("base has repeated labels")
        return DiagramReport(tuple(problems))
    try:
        perms = simulate(W.base, W.switches)
    except NonAdjacentSwitch as err:
        problems.append(f"non-adjacent switch at {err.index}: {err.pair!r}")
        perms = None
    except UnknownLabel as err:
        problems.append(f"unknown label {err.label!r}")
        perms = None
    seen: dict = {}
    for k, s in enumerate(W.switches):
        key = pair_key(*s)
        if key in seen:
            problems.append(f"duplicate pair {key!r} at switches {seen[key]} and {k}")
        else:
            seen[key] = k
    for pair in combinations(sorted(W.base), 2):
        if pair not in seen:
            problems.append(f"missing pair {pair!r}")
    if perms is not None and perms[-1] != tuple(reversed(W.base)):
        problems.append("final permutation is not the reverse of base")
    return DiagramReport(tuple(problems))


def require_valid(W: WiringDiagram) -> WiringDiagram:
    report = validate_wiring_diagram(W)
    if not report.valid:
        raise InvalidDiagram(report.problems)
    return W


def double_cover(W: WiringDiagram) -> CurveSystem:
    """Full period on the cylinder: the switches, then the same pairs again."""
    require_valid(W)
    events = tuple(pair_key(*s) for s in W.switches)
    return CurveSystem(W.base, events + events)


def rotate_half_period(W: WiringDiagram) -> WiringDiagram:
    """Move the first crossing to the far end, through the line at infinity."""
    require_valid(W)
    if not W.switches:
        return W
    x, y = W.switches[0]
    base = list(W.base)
    i = base.index(x)
    base[i], base[i + 1] = y, x
    return WiringDiagram(tuple(base), W.switches[1:] + ((y, x),))


def restrict_diagram(W: WiringDiagram, subset: Iterable) -> WiringDiagram:
    keep = set(subset)
    for label in keep:
        if label not in W.base:
            raise UnknownLabel(label)
    return WiringDiagram(
        tuple(x for x in W.base if x in keep),
        tuple(s for s in W.switches if s[0] in keep and s[1] in keep),
    )


def delete_wire(W: WiringDiagram, label) -> WiringDiagram:
    return restrict_diagram(W, [x for x in W.base if x != label])


def _commute_to_front(switches: Sequence, chosen: set) -> list:
    """Stable partition: chosen indices first, others after, order kept."""
    return [switches[k] for k in sorted(chosen)] + [
        s for k, s in enumerate(switches) if k not in chosen
    ]


def evacuate_top_wire(W: WiringDiagram) -> WiringDiagram:
    """Equivalent diagram whose top wire crosses every other wire first.

    Crossings between wires that the top wire has not reached yet ("left"
    crossings) are commuted to the front and rotated out to the far end;
    the top wire's crossings are then commuted to the front.  Commuting
    label-disjoint neighbours is an isotopy, so the double cover is
    unchanged up to rotation and the triple orientations are preserved.
    """
    require_valid(W)
    w = W.top
    sw = W.switches
    w_idx = [k for k, s in enumerate(sw) if w in s]
    if not w_idx:
        return W
    last = w_idx[-1]
    crossed = set()
    west = set()
    for k in range(last):
        x, y = sw[k]
        if w in (x, y):
            crossed.add(y if x == w else x)
        elif x not in crossed and y not in crossed:
            west.add(k)
    out = WiringDiagram(W.base, tuple(_commute_to_front(sw, west)))
    require_valid(out)
    for _ in range(len(west)):
        out = rotate_half_period(out)
    sw = out.switches
    w_first = {k for k, s in enumerate(sw) if w in s}
    out = WiringDiagram(out.base, tuple(_commute_to_front(sw, w_first)))
    return require_valid(out)


def is_evacuated(W: WiringDiagram) -> bool:
    n = W.n
    return all(W.top in s for s in W.switches[: n - 1])


def upper_envelope_path(W: WiringDiagram) -> tuple:
    """Top wire in every gap of the half-period, initial and final included."""
    return tuple(p[-1] for p in simulate(W.base, W.switches))


def lower_envelope_path(W: WiringDiagram) -> tuple:
    return tuple(p[0] for p in simulate(W.base, W.switches))
