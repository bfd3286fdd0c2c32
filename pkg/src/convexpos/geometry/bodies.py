"""Convex bodies (points and strictly convex polygons) and support functions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np


class InvalidBody(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ConvexBody:
    """A point (one vertex) or a strictly convex polygon with CCW vertices."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(v)):
            raise InvalidBody("non-finite coordinates")
        k = len(v)
        if k == 2 or k == 0:
            raise InvalidBody(f"a body needs 1 or at least 3 vertices, got {k}")
        if k >= 3:
            e = np.roll(v, -1, axis=0) - v
            turn = e[:, 0] * np.roll(e, -1, axis=0)[:, 1] - e[:, 1] * np.roll(e, -1, axis=0)[:, 0]
            if np.any(turn <= 0):
                raise InvalidBody("polygon is not strictly convex and counter-clockwise")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @classmethod
    def point(cls, x, y) -> "ConvexBody":
        return cls(np.array([[x, y]], dtype=float))

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def edge_normal_angles(self) -> np.ndarray:
        """Angles of outward edge normals; vertex i is extreme between normals i-1 and i."""
        if self.is_point:
            return np.empty(0)
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        return np.mod(np.arctan2(-e[:, 0], e[:, 1]), 2 * np.pi)

    def translated(self, dx, dy) -> "ConvexBody":
        return ConvexBody(self.vertices + np.array([dx, dy]))

    def __eq__(self, other):
        return isinstance(other, ConvexBody) and np.array_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def to_json(self) -> list:
        return [[float(x), float(y)] for x, y in self.vertices]


def support(A: ConvexBody, theta):
    """h_A(theta) = max over vertices of <v, (cos theta, sin theta)>; vectorized."""
    th = np.asarray(theta, dtype=float)
    u = np.stack([np.cos(th), np.sin(th)], axis=-1)
    vals = u @ A.vertices.T
    return vals.max(axis=-1)


def argmax_vertex(A: ConvexBody, theta: float) -> np.ndarray:
    u = np.array([np.cos(theta), np.sin(theta)])
    return A.vertices[int(np.argmax(A.vertices @ u))]


def convex_hull(points) -> np.ndarray:
    """Strict CCW hull (monotone chain), collinear points dropped."""
    pts = sorted(set(map(tuple, np.asarray(points, dtype=float))))
    if len(pts) <= 2:
        return np.array(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


class Arrangement:
    """Labelled convex bodies, in insertion order."""

    def __init__(self, bodies: Mapping | Iterable):
        items = bodies.items() if isinstance(bodies, Mapping) else bodies
        self.bodies = {}
        for label, body in items:
            if label in self.bodies:
                raise ValueError(f"duplicate label {label!r}")
            self.bodies[label] = body if isinstance(body, ConvexBody) else ConvexBody(body)

    @classmethod
    def from_points(cls, points: Mapping) -> "Arrangement":
        return cls({k: ConvexBody.point(*p) for k, p in points.items()})

    @property
    def labels(self) -> tuple:
        return tuple(sorted(self.bodies))

    def __len__(self):
        return len(self.bodies)

    def __getitem__(self, label) -> ConvexBody:
        return self.bodies[label]

    def __iter__(self):
        return iter(self.bodies.items())

    def __eq__(self, other):
        return isinstance(other, Arrangement) and self.bodies == other.bodies

    def subset(self, labels) -> "Arrangement":
        return Arrangement({x: self.bodies[x] for x in labels})

    @property
    def all_points(self) -> bool:
        return all(b.is_point for b in self.bodies.values())

    def to_json(self) -> dict:
        return {"bodies": [{"label": k, "vertices": b.to_json()} for k, b in self.bodies.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Arrangement":
        return cls([(row["label"], ConvexBody(row["vertices"])) for row in data["bodies"]])
