"""Realize a wiring diagram by convex polygons.

Each curve of the double cover becomes a piecewise-linear rank function,
sampled on ``M`` uniform angles and smoothed.  Adding a common constant
makes every sampled function satisfy the discrete curvature condition,
and the polygon cut out by the half-planes ``<u_i, x> <= g_i`` then has
``g`` as its support at every sample.  Between two samples the support is
a positive combination of the two sampled values, so two realized bodies
cross exactly where their sampled differences change sign.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from convexpos.cc.chirotope import chirotope_from_system
from convexpos.cc.wiring import WiringDiagram, double_cover
from convexpos.errors import ConvexPosError, GridTooCoarse
from convexpos.geometry.bodies import Arrangement, ConvexBody
from convexpos.geometry.tangents import dualize

SMOOTHING_PASSES = 3


@dataclass(frozen=True)
class RealizedArrangement:
    bodies: Arrangement
    grid: int
    lift: float
    samples: dict  # label -> lifted support values g on the grid

    def to_json(self) -> dict:
        out = self.bodies.to_json()
        out["grid"] = self.grid
        out["lift"] = self.lift
        return out


def grid_angles(M: int) -> np.ndarray:
    return 2 * np.pi * (np.arange(M) + 0.5) / M


def rank_curves(system, M: int) -> dict:
    """Piecewise-linear heights: gap k sits at angle 2pi k / E, at its rank."""
    E = system.m
    perms = system.permutations
    ranks = np.array([[perm.index(x) for perm in perms] for x in system.labels], dtype=float)
    # sample position in units of gaps
    s = (np.arange(M) + 0.5) * E / M
    k = np.floor(s).astype(int)
    w = s - k
    lo = ranks[:, k % E]
    hi = ranks[:, (k + 1) % E]
    vals = (1 - w) * lo + w * hi
    return {x: vals[i] for i, x in enumerate(system.labels)}


def smooth(f: np.ndarray, passes: int = SMOOTHING_PASSES) -> np.ndarray:
    for _ in range(passes):
        f = sum(np.roll(f, s) for s in (-2, -1, 0, 1, 2)) / 5.0
    return f


def curvature(g: np.ndarray) -> np.ndarray:
    """Discrete g + g'' with central differences."""
    d = 2 * np.pi / len(g)
    return g + (np.roll(g, -1) - 2 * g + np.roll(g, 1)) / d**2


def _edge_condition(g: np.ndarray) -> np.ndarray:
    """Positive iff every half-plane contributes an edge to the polygon."""
    d = 2 * np.pi / len(g)
    return g + (np.roll(g, -1) - 2 * g + np.roll(g, 1)) / (2 * (1 - np.cos(d)))


def polygon_from_support(g: np.ndarray) -> np.ndarray:
    """Vertices where consecutive lines <u_i, x> = g_i meet (CCW)."""
    th = grid_angles(len(g))
    t1, t2 = th, np.roll(th, -1)
    g1, g2 = g, np.roll(g, -1)
    det = np.sin(t2 - t1)
    x = (g1 * np.sin(t2) - g2 * np.sin(t1)) / det
    y = (g2 * np.cos(t1) - g1 * np.cos(t2)) / det
    return np.c_[x, y]


def _realize_at(W: WiringDiagram, M: int):
    F = double_cover(W)
    f = {x: smooth(v) for x, v in rank_curves(F, M).items()}
    c0 = max(float(np.max(-np.minimum(curvature(v), _edge_condition(v)))) for v in f.values())
    big = max(float(np.abs(v).max()) for v in f.values())
    lift = c0 + 1 + big
    samples = {x: v + lift for x, v in f.items()}
    bodies = Arrangement({x: ConvexBody(polygon_from_support(g)) for x, g in samples.items()})
    return F, RealizedArrangement(bodies, M, lift, samples)


def realize_wiring_diagram(W: WiringDiagram, grid_size: int | None = None, max_grid: int = 1 << 14):
    """Bodies whose dual system has the chirotope of ``double_cover(W)``.

    The grid doubles until the chirotope round trip succeeds.
    """
    E = 2 * len(W.switches)
    if E == 0:
        raise ValueError("diagram needs at least two wires")
    M = max(grid_size or 0, 8 * E)
    M = E * -(-M // E)  # a multiple of E keeps samples off the crossing angles
    last = None
    while M <= max_grid:
        F, out = _realize_at(W, M)
        try:
            got = chirotope_from_system(dualize(out.bodies))
            if got == chirotope_from_system(F):
                return out
            last = "chirotope mismatch"
        except ConvexPosError as err:
            last = str(err)
        M *= 2
    raise GridTooCoarse(f"round trip failed up to grid {max_grid}: {last}")


def blaschke_margin(realized: RealizedArrangement) -> float:
    """Smallest discrete curvature g + g'' over all curves and samples."""
    return min(float(curvature(g).min()) for g in realized.samples.values())
