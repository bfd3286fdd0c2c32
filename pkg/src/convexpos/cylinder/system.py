"""Curve systems on the cylinder, encoded by their crossing sequence.

A system is a vertical order of labels at angle 0 (bottom to top) plus the
cyclic sequence of crossings met when the angle sweeps once around.  Only
the order of crossings is kept; angles are implicit ranks.

Gap ``g`` is the vertical order after the first ``g`` events, so event ``e``
separates gap ``e`` from gap ``e + 1`` (indices mod the event count).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from convexpos import _kernels
from convexpos.errors import InvalidSystem, SubsetTooSmall, UnknownLabel

Label = Hashable


def pair_key(x, y) -> tuple:
    """Canonical (sorted) form of an unordered pair of labels."""
    return (x, y) if x <= y else (y, x)


def apply_transposition(perm: list, x, y) -> int | None:
    """Swap adjacent labels ``x`` and ``y`` in ``perm`` in place.

    Returns the lower position of the swap, or None if they are not adjacent.
    """
    i = perm.index(x)
    j = perm.index(y)
    if abs(i - j) != 1:
        return None
    perm[i], perm[j] = perm[j], perm[i]
    return min(i, j)


@dataclass(frozen=True)
class CurveSystem:
    """Combinatorial system of curves, each pair crossing exactly twice.

    ``base`` lists labels bottom-to-top at angle 0; ``events`` is the cyclic
    sequence of crossings, each an unordered pair of labels adjacent at the
    moment it is applied.  Construction validates all invariants.
    """

    base: tuple
    events: tuple
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "events", tuple(pair_key(*e) for e in self.events))
        if self._checked:
            problems = system_problems(self.base, self.events)
            if problems:
                raise InvalidSystem(problems)

    # -- basic structure --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def m(self) -> int:
        return len(self.events)

    @cached_property
    def labels(self) -> tuple:
        return tuple(sorted(self.base))

    @cached_property
    def index(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def permutations(self) -> tuple:
        """Vertical order (bottom to top) in every gap."""
        perm = list(self.base)
        out = []
        for x, y in self.events:
            out.append(tuple(perm))
            apply_transposition(perm, x, y)
        if not out:
            out.append(tuple(perm))
        return tuple(out)

    @cached_property
    def positions(self) -> np.ndarray:
        """``positions[g, i]`` is the height rank of ``labels[i]`` in gap ``g``."""
        idx = self.index
        table = np.empty((len(self.permutations), self.n), dtype=np.int32)
        for g, perm in enumerate(self.permutations):
            for rank, label in enumerate(perm):
                table[g, idx[label]] = rank
        return table

    @cached_property
    def pair_events(self) -> dict:
        """Event indices of every pair, in cyclic order."""
        out: dict = {}
        for e, pair in enumerate(self.events):
            out.setdefault(pair, []).append(e)
        return {pair: tuple(v) for pair, v in out.items()}

    def indices_of(self, subset: Iterable) -> list[int]:
        idx = self.index
        out = []
        for label in subset:
            if label not in idx:
                raise UnknownLabel(label)
            out.append(idx[label])
        return out

    def rotate(self, r: int) -> "CurveSystem":
        """Same system read from gap ``r`` onwards."""
        if self.m == 0:
            return self
        r %= self.m
        return CurveSystem(self.permutations[r], self.events[r:] + self.events[:r], _checked=False)

    def to_json(self) -> dict:
        return {"base": list(self.base), "events": [list(e) for e in self.events]}

    @classmethod
    def from_json(cls, data: dict) -> "CurveSystem":
        return cls(tuple(data["base"]), tuple(tuple(e) for e in data["events"]))


def system_problems(base: Sequence, events: Sequence) -> list[str]:
    problems = []
    if len(set(base)) != len(base):
        problems.append("base has repeated labels")
        return problems
    labels = set(base)
    perm = list(base)
    for e, (x, y) in enumerate(events):
        if x not in labels or y not in labels or x == y:
            problems.append(f"event {e} {(x, y)!r} has unknown or equal labels")
            return problems
        if apply_transposition(perm, x, y) is None:
            problems.append(f"event {e} {(x, y)!r} is not adjacent")
            return problems
    if tuple(perm) != tuple(base):
        problems.append("events do not return to base")
    counts = Counter(pair_key(*e) for e in events)
    for pair in combinations(sorted(labels), 2):
        c = counts.get(pair, 0)
        if c != 2:
            problems.append(f"pair {pair!r} crosses {c} times (expected 2)")
    return problems


def restrict(system: CurveSystem, subset: Iterable) -> CurveSystem:
    """Sub-system on ``subset``: other curves and their crossings deleted."""
    keep = set(subset)
    if len(keep) < 2:
        raise SubsetTooSmall("restriction needs at least two labels")
    for label in keep:
        if label not in system.index:
            raise UnknownLabel(label)
    base = tuple(x for x in system.base if x in keep)
    events = tuple(e for e in system.events if e[0] in keep and e[1] in keep)
    return CurveSystem(base, events, _checked=False)


def collapse_cyclic(seq: Sequence) -> tuple:
    """Remove cyclically repeated neighbours from a cyclic word."""
    word = []
    for x in seq:
        if not word or word[-1] != x:
            word.append(x)
    while len(word) > 1 and word[0] == word[-1]:
        word.pop()
    return tuple(word)


def envelope_tops(system: CurveSystem, subset: Iterable) -> tuple:
    """Topmost label of ``subset`` in every gap."""
    labels = list(subset)
    if not labels:
        raise SubsetTooSmall("envelope of an empty subset")
    idx = system.indices_of(labels)
    tops = system.positions[:, idx].argmax(axis=1)
    return tuple(labels[t] for t in tops)


def upper_envelope(system: CurveSystem, subset: Iterable | None = None) -> tuple:
    """Cyclic envelope word: the top curve per gap, repeats collapsed.

    The word starts with the top curve of gap 0.
    """
    if subset is None:
        subset = system.labels
    return collapse_cyclic(envelope_tops(system, subset))


def lower_envelope(system: CurveSystem, subset: Iterable | None = None) -> tuple:
    if subset is None:
        subset = system.labels
    labels = list(subset)
    idx = system.indices_of(labels)
    bottoms = system.positions[:, idx].argmin(axis=1)
    return collapse_cyclic(labels[b] for b in bottoms)


def is_convexly_independent(system: CurveSystem, subset: Iterable) -> bool:
    """True iff every curve of ``subset`` reaches the upper envelope of the subset."""
    labels = list(dict.fromkeys(subset))
    if len(labels) < 3:
        raise SubsetTooSmall("independence is defined for three or more labels")
    idx = system.indices_of(labels)
    return _kernels.subset_independent(system.positions, np.asarray(idx, dtype=np.int32))


def crossing_word(system: CurveSystem, label, others: Iterable) -> tuple:
    """Cyclic order in which ``label`` meets the curves in ``others``."""
    others = set(others)
    word = []
    for x, y in system.events:
        if x == label and y in others:
            word.append(y)
        elif y == label and x in others:
            word.append(x)
    return tuple(word)


def is_generalized_configuration(system: CurveSystem) -> bool:
    """True iff the system is the double cover of a wiring diagram.

    Equivalent to antipodality: event ``i + N`` repeats event ``i`` and the
    vertical order half a period later is reversed, ``N = C(n, 2)``.
    """
    m = system.m
    if m == 0 or m % 2:
        return False
    half = m // 2
    ev = system.events
    if any(ev[i] != ev[i + half] for i in range(half)):
        return False
    perms = system.permutations
    return all(perms[g + half] == perms[g][::-1] for g in range(half))


def independent_triples(system: CurveSystem) -> Iterable[tuple]:
    for triple in combinations(system.labels, 3):
        if is_convexly_independent(system, triple):
            yield triple
