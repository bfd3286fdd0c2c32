import numpy as np
import pytest

from convexpos.cc.wiring import WiringDiagram, parse_switches
from convexpos.cylinder.system import CurveSystem
from convexpos.geometry.bodies import Arrangement, ConvexBody

# Labels 1..5 of the five-point diagram are the points below.
FIVE_POINTS = {1: (0, 0), 2: (1, -2), 3: (2, 3), 4: (4, 0), 5: (7, -1)}


@pytest.fixture
def four_wire():
    return WiringDiagram(tuple("badc"), parse_switches("dc,ac,bc,ad,bd,ba"))


@pytest.fixture
def five_point():
    sw = ((2, 1), (4, 3), (5, 3), (5, 4), (5, 1), (4, 1), (5, 2), (4, 2), (3, 1), (3, 2))
    return WiringDiagram((5, 4, 3, 2, 1), sw)


@pytest.fixture
def nx3():
    return CurveSystem(tuple("cab"), (("a", "b"), ("a", "b"), ("a", "c"), ("b", "c"), ("b", "c"), ("a", "c")))


@pytest.fixture
def full_period3():
    return CurveSystem(tuple("abc"), tuple(parse_switches("ab,ac,bc,ba,ca,cb")))


def bad_pentagon_bodies() -> Arrangement:
    """The ten triangles of the bad pentagon, from their drawing coordinates."""

    def polar(deg, r):
        t = np.radians(deg)
        return np.array([r * np.cos(t), r * np.sin(t)])

    bodies = {}
    for x in range(5):
        for kind, (ang, rad) in (("i", (72 * x + 27, 0.9)), ("o", (72 * x - 17.5, 7))):
            c = polar(ang, rad)
            tri = -0.4 * np.array(
                [c - 0.4 * polar(72 * x, 1), c + 0.4 * polar(72 * x, 1), c - 1.2 * polar(72 * x + 90, 1)]
            )
            u, v = tri[1] - tri[0], tri[2] - tri[0]
            if u[0] * v[1] - u[1] * v[0] < 0:
                tri = tri[::-1]
            bodies[f"{kind}{x}"] = ConvexBody(tri)
    return Arrangement(bodies)


@pytest.fixture
def bad_pentagon():
    return bad_pentagon_bodies()
