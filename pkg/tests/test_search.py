import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexpos.cc.chirotope import chirotope_from_system, max_independent_dp
from convexpos.cc.cups import cup_diagram, is_cup
from convexpos.cc.wiring import WiringDiagram, double_cover, parse_switches, restrict_diagram
from convexpos.cylinder.system import CurveSystem, is_convexly_independent, restrict
from convexpos.cylinder.zones import reduce_to_orientable
from convexpos.errors import ClusterOverlap, SizeLimit, UnequalSizes, UnknownLabel
from convexpos.generate import all_wiring_diagrams, random_arrangement, random_points, random_wiring_diagram, rng_for, thin_body
from convexpos.geometry.bodies import Arrangement, ConvexBody
from convexpos.geometry.tangents import dualize
from convexpos.search.brute import brute_force_max_independent, has_independent_subset, max_independent_size
from convexpos.search.clustering import ConvexClustering, find_clustering, verify_clustering
from convexpos.search.lower_bound import lower_bound_construction, lower_bound_points
from convexpos.search.pipeline import SearchCertificate, es_pipeline, theorem_bound, validate_certificate

# convex, and with no two parallel connecting segments
PENTAGON = {0: (0, 0), 1: (7, 1), 2: (10, 6), 3: (4, 11), 4: (-2, 5)}


def independent_by_subsets(S, k):
    """Plain scan over all k-subsets with the envelope test."""
    return any(is_convexly_independent(S, sub) for sub in combinations(S.labels, k))


def test_brute_force_examples(nx3):
    assert len(brute_force_max_independent(dualize(Arrangement.from_points(PENTAGON)))) == 5
    assert sorted(brute_force_max_independent(nx3)) == ["a", "b", "c"]
    # [DERIVED] exhaustive scan of all subsets
    S = dualize(lower_bound_construction(5))
    assert max_independent_size(S) == 4
    assert independent_by_subsets(S, 4) and not independent_by_subsets(S, 5)


def test_brute_force_limit():
    S = double_cover(random_wiring_diagram(12, rng_for(0, 0)))
    with pytest.raises(SizeLimit):
        brute_force_max_independent(S, limit=10)


def test_brute_force_limit_env(monkeypatch):
    S = double_cover(random_wiring_diagram(12, rng_for(0, 0)))
    monkeypatch.setenv("CONVEXPOS_LIMITS", "brute=8")
    with pytest.raises(SizeLimit):
        brute_force_max_independent(S)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 8), st.integers(0, 10**6))
def test_brute_force_matches_subset_scan(n, seed):
    S = double_cover(random_wiring_diagram(n, rng_for(seed, 2)))
    best = brute_force_max_independent(S)
    assert len(best) >= 3 and is_convexly_independent(S, best)
    assert not independent_by_subsets(S, len(best) + 1) if len(best) < n else True


def test_pipeline_three_wires():
    for W in all_wiring_diagrams(3):
        cert = es_pipeline(W, 3)
        assert len(cert) == 3 and validate_certificate(cert, W)


def test_pipeline_five_cup():
    # [REF] a 5-cup is itself a certificate
    W = cup_diagram(5)
    cert = es_pipeline(W, 5)
    assert cert.kind == "cup" and len(cert) == 5
    assert validate_certificate(cert, W)
    assert is_cup(restrict_diagram(cert.witness, cert.labels))


def test_pipeline_trace_and_json():
    W = random_wiring_diagram(11, rng_for(9, 0))
    cert = es_pipeline(W, 5)
    steps = [t["step"] for t in cert.trace]
    assert steps[:3] == ["evacuate", "delete", "cup_cap"]
    data = cert.to_json()
    assert data["kind"] == cert.kind and data["labels"] == list(cert.labels)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_pipeline_at_bound_n5(seed):
    W = random_wiring_diagram(theorem_bound(5), rng_for(seed, 0))
    cert = es_pipeline(W, 5)
    assert len(cert) == 5 and validate_certificate(cert, W)
    # [DERIVED] cross-check with exhaustive search
    assert has_independent_subset(double_cover(W), 5)


def test_pipeline_n4_every_five_wire_diagram():
    for W in all_wiring_diagrams(5):
        cert = es_pipeline(W, 4)
        assert len(cert) == 4 and validate_certificate(cert, W)


def test_pipeline_below_bound_returns_best():
    W = WiringDiagram(tuple("abcd"), parse_switches("cd,bd,ad,bc,ac,ab"))
    cert = es_pipeline(W, 6)
    assert len(cert) <= 4 and validate_certificate(cert, W)
    with pytest.raises(ValueError):
        es_pipeline(W, 2)


def test_validate_rejects_bad_certificate(five_point):
    # the five reference points are not in convex position
    labels = tuple(five_point.base)
    assert not validate_certificate(SearchCertificate("independent-set", labels), five_point)
    assert not validate_certificate(SearchCertificate("cup", labels, witness=five_point), five_point)
    good = tuple(sorted(max_independent_dp(chirotope_from_system(double_cover(five_point)))))
    assert validate_certificate(SearchCertificate("independent-set", good), five_point)


def test_theorem_bound_values():
    assert [theorem_bound(n) for n in (5, 6, 7)] == [11, 36, 127]


def test_lower_bound_sizes():
    assert len(lower_bound_points(3)) == 2
    assert len(lower_bound_construction(4)) == 4
    assert len(lower_bound_construction(6, verify=False)) == 16
    with pytest.raises(SizeLimit):
        lower_bound_points(9)
    with pytest.raises(ValueError):
        lower_bound_points(2)


def test_lower_bound_n4():
    S = dualize(lower_bound_construction(4))
    assert max_independent_size(S) == 3


def test_lower_bound_is_integer_and_generic():
    pts = lower_bound_points(5)
    assert all(isinstance(c, int) for p in pts for c in p)
    assert len({p[0] for p in pts}) == len(pts)


def corner_clusters(size, r=0.01):
    corners = [(0, 0), (10, 0), (5, 8)]
    pts = {}
    for i, (cx, cy) in enumerate(corners):
        for j in range(size):
            a = 2 * math.pi * (j + 0.3 * i) / size
            pts[f"{'xyz'[i]}{j}"] = (cx + r * math.cos(a), cy + r * math.sin(a))
    return Arrangement.from_points(pts)


def test_clustering_corners_pass():
    arr = corner_clusters(2)
    rep = verify_clustering(arr, ConvexClustering((("x0", "x1"), ("y0", "y1"), ("z0", "z1"))))
    assert rep.ok and rep.size == 2 and rep.checked == 8 and rep.witness is None


def test_clustering_errors():
    arr = corner_clusters(2)
    with pytest.raises(ClusterOverlap):
        verify_clustering(arr, ConvexClustering((("x0", "x1"), ("x1", "y1"), ("z0", "z1"))))
    with pytest.raises(UnequalSizes):
        verify_clustering(arr, ConvexClustering((("x0", "x1"), ("y0",), ("z0", "z1"))))
    with pytest.raises(UnknownLabel):
        verify_clustering(arr, ConvexClustering((("x0", "q"), ("y0", "y1"), ("z0", "z1"))))


def test_clustering_middle_cluster_fails():
    # tall bars on the left and right, small points between them
    bodies = {
        "l0": thin_body((0, 0), math.pi / 2, 6, 0.2),
        "l1": thin_body((-1, 0.3), math.pi / 2 + 0.05, 6, 0.2),
        "m0": ConvexBody.point(5, 0.1),
        "m1": ConvexBody.point(5.5, -0.2),
        "r0": thin_body((10, 0.2), math.pi / 2 - 0.03, 6, 0.2),
        "r1": thin_body((11, -0.1), math.pi / 2 + 0.02, 6, 0.2),
    }
    arr = Arrangement(bodies)
    S = dualize(arr)
    rep = verify_clustering(S, ConvexClustering((("l0", "l1"), ("m0", "m1"), ("r0", "r1"))))
    assert not rep.ok and rep.witness is not None
    # [DERIVED] the witness is dependent under the envelope oracle
    assert not is_convexly_independent(S, rep.witness)


def test_find_clustering_corners():
    arr = corner_clusters(3)
    found = find_clustering(arr, 3, 3)
    assert found is not None and found.n == 3 and found.size == 3
    assert verify_clustering(arr, found).ok


def test_find_clustering_trivial_cases():
    pent = Arrangement.from_points(PENTAGON)
    found = find_clustering(pent, 5, 1)
    assert found.clusters == ((0,), (1,), (2,), (3,), (4,))
    four = Arrangement.from_points({"a": (0, 0), "b": (4, 0), "c": (0, 4), "d": (1, 1)})
    assert find_clustering(four, 4, 1) is None
    with pytest.raises(ValueError):
        find_clustering(four, 2, 1)


def test_clustering_json():
    c = ConvexClustering((("a", "b"), ("c", "d"), ("e", "f")))
    assert ConvexClustering.from_json(c.to_json()) == c
    assert c.to_json() == {"clusters": [["a", "b"], ["c", "d"], ["e", "f"]]}


@settings(max_examples=15, deadline=None)
@given(st.integers(5, 10), st.integers(0, 10**6))
def test_dp_matches_brute_force_on_reduced_arrangements(n, seed):
    S = dualize(random_arrangement(n, rng_for(seed, 1)))
    T, _ = reduce_to_orientable(S)
    assert len(max_independent_dp(chirotope_from_system(T))) == max_independent_size(T)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_monotone_under_adding_curves(seed):
    S = dualize(random_points(10, rng_for(seed, 0)))
    sizes = [max_independent_size(restrict(S, S.labels[:k])) for k in range(3, S.n + 1)]
    assert all(a <= b for a, b in zip(sizes, sizes[1:]))
