"""Chirotopes (CC systems) of generalized configurations.

``sign[i, j, k] = +1`` when the labels ``i, j, k`` (by index into the sorted
label tuple) appear in counter-clockwise cyclic order, ``-1`` otherwise and
``0`` on repeated indices.  Cyclic symmetry and antisymmetry are properties
of the array, so only interiority and transitivity need checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping

import numpy as np

from convexpos import _kernels
from convexpos.cylinder.system import CurveSystem, upper_envelope
from convexpos.errors import (
    AxiomViolation,
    NonOrientableTriple,
    SubsetTooSmall,
    UnknownLabel,
)


def normalize_cycle(cycle) -> tuple:
    """Rotate a cyclic triple so its smallest label comes first."""
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


class Chirotope:
    def __init__(self, labels: Iterable, sign: np.ndarray):
        self.labels = tuple(labels)
        self.index = {x: i for i, x in enumerate(self.labels)}
        self.sign = np.ascontiguousarray(sign, dtype=np.int8)
        self.sign.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_cycles(cls, cycles: Mapping) -> "Chirotope":
        """Build from ``{frozenset or triple: cyclic order}`` for every triple."""
        labels = sorted({x for cyc in cycles.values() for x in cyc})
        idx = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        sign = np.zeros((n, n, n), dtype=np.int8)
        for cyc in cycles.values():
            a, b, c = (idx[x] for x in cyc)
            for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
                sign[p, q, r] = 1
                sign[q, p, r] = -1
        missing = [t for t in combinations(range(n), 3) if sign[t] == 0]
        if missing:
            raise ValueError(f"orientation missing for {len(missing)} triples")
        return cls(labels, sign)

    @classmethod
    def from_points(cls, points: Mapping) -> "Chirotope":
        """Exact orientations of labelled points (``label -> (x, y)``)."""
        labels = sorted(points)
        pts = [tuple(Fraction(v) for v in points[x]) for x in labels]
        cycles = {}
        for i, j, k in combinations(range(len(labels)), 3):
            d = orient2d(pts[i], pts[j], pts[k])
            if d == 0:
                raise ValueError(f"collinear points {labels[i], labels[j], labels[k]!r}")
            tri = (labels[i], labels[j], labels[k]) if d > 0 else (labels[i], labels[k], labels[j])
            cycles[frozenset(tri)] = tri
        return cls.from_cycles(cycles)

    def orient(self, a, b, c) -> int:
        try:
            return int(self.sign[self.index[a], self.index[b], self.index[c]])
        except KeyError as err:
            raise UnknownLabel(err.args[0]) from None

    def cycle(self, triple) -> tuple:
        """Counter-clockwise cyclic order of a triple, smallest label first."""
        a, b, c = sorted(triple)
        return normalize_cycle((a, b, c) if self.orient(a, b, c) > 0 else (a, c, b))

    def cycles(self) -> dict:
        return {t: self.cycle(t) for t in combinations(self.labels, 3)}

    def relabel(self, mapping: Mapping) -> "Chirotope":
        return Chirotope.from_cycles(
            {t: tuple(mapping[x] for x in cyc) for t, cyc in self.cycles().items()}
        )

    def restrict(self, subset: Iterable) -> "Chirotope":
        keep = sorted(set(subset))
        idx = [self.index[x] for x in keep]
        return Chirotope(keep, self.sign[np.ix_(idx, idx, idx)])

    def with_flipped(self, triple) -> "Chirotope":
        """Copy with the orientation of one triple reversed."""
        sign = self.sign.copy()
        for p, q, r in permutations(self.index[x] for x in triple):
            sign[p, q, r] = -sign[p, q, r]
        return Chirotope(self.labels, sign)

    def __eq__(self, other):
        if not isinstance(other, Chirotope):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.sign, other.sign)

    def __hash__(self):
        return hash((self.labels, self.sign.tobytes()))

    def __repr__(self):
        return f"Chirotope(n={self.n})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "triples": [{"t": list(t), "cyclic": list(c)} for t, c in self.cycles().items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Chirotope":
        cycles = {tuple(row["t"]): tuple(row["cyclic"]) for row in data["triples"]}
        chi = cls.from_cycles(cycles)
        if chi.n != data["n"]:
            raise ValueError(f"declared n={data['n']} but {chi.n} labels found")
        return chi


def orient2d(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def chirotope_from_system(S: CurveSystem) -> Chirotope:
    """Triple orders read off the upper envelopes of all 3-curve restrictions."""
    cycles = {}
    for triple in combinations(S.labels, 3):
        env = upper_envelope(S, triple)
        if len(env) != 3:
            raise NonOrientableTriple(triple)
        cycles[triple] = env
    if S.n < 3:
        return Chirotope(S.labels, np.zeros((S.n,) * 3, dtype=np.int8))
    return Chirotope.from_cycles(cycles)


@dataclass(frozen=True)
class AxiomReport:
    count: int
    violations: tuple  # (axiom name, label tuple)

    @property
    def ok(self) -> bool:
        return self.count == 0

    def __bool__(self):
        return self.ok


_AXIOM_NAMES = {4: "interiority", 5: "transitivity"}


def verify_cc_axioms(chi: Chirotope, limit: int = 20) -> AxiomReport:
    """Check interiority over 4-tuples and transitivity over 5-tuples.

    Interiority: ``tqr, ptr, pqt => pqr``.
    Transitivity: ``tsp, tsq, tsr, tpq, tqr => tpr``.
    """
    if chi.n < 4:
        return AxiomReport(0, ())
    count, rows = _kernels.cc_violations(chi.sign, limit)
    lab = chi.labels
    return AxiomReport(
        int(count), tuple((_AXIOM_NAMES[a], tuple(lab[i] for i in t)) for a, t in rows)
    )


def is_convexly_independent_chirotope(chi: Chirotope, subset: Iterable) -> bool:
    """No member lies inside a triangle of three others."""
    labels = list(dict.fromkeys(subset))
    if len(labels) < 3:
        raise SubsetTooSmall("independence is defined for three or more labels")
    idx = []
    for x in labels:
        if x not in chi.index:
            raise UnknownLabel(x)
        idx.append(chi.index[x])
    if len(idx) == 3:
        return True
    return bool(_kernels.caratheodory_independent(chi.sign, idx))


def _first_independent_of_size(chi: Chirotope, k: int) -> list[int]:
    n = chi.n
    cur: list[int] = []

    def dfs(start):
        if len(cur) == k:
            return True
        for x in range(start, n):
            if len(cur) + (n - x) < k:
                return False
            cur.append(x)
            if len(cur) < 4 or _kernels.caratheodory_independent(chi.sign, cur):
                if dfs(x + 1):
                    return True
            cur.pop()
        return False

    return list(cur) if dfs(0) else []


def max_independent_dp(chi: Chirotope) -> tuple:
    """Largest convexly independent label set, lexicographically smallest.

    The size comes from a convex-chain dynamic program (valid for CC
    systems); the lexicographically first set of that size is then located
    by a pruned depth-first search.
    """
    report = verify_cc_axioms(chi, limit=5)
    if not report.ok:
        raise AxiomViolation(report)
    if chi.n <= 3:
        return chi.labels
    k = int(_kernels.max_convex_chain(chi.sign))
    found = _first_independent_of_size(chi, k)
    if len(found) != k:
        raise AssertionError("convex chain size not attained by any subset")
    return tuple(chi.labels[i] for i in found)
