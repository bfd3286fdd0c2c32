"""The eight acceptance criteria; each prints one PASS/FAIL line.

    python3 -m pytest tests/test_acceptance.py -v
"""
import json
import time
from math import comb

import pytest

from convexpos.cc.chirotope import chirotope_from_system, is_convexly_independent_chirotope, max_independent_dp
from convexpos.cc.cups import brute_force_cup_cap, longest_cup_cap
from convexpos.cc.wiring import double_cover
from convexpos.cli import main
from convexpos.cylinder.system import crossing_word, is_convexly_independent, upper_envelope
from convexpos.cylinder.zones import classify_triple, find_zones, non_orientable_triples, reduce_to_orientable, zone_status
from convexpos.generate import all_wiring_diagrams, random_wiring_diagram, rng_for
from convexpos.geometry.realize import blaschke_margin, realize_wiring_diagram
from convexpos.geometry.tangents import dualize
from convexpos.search.brute import has_independent_subset, max_independent_size
from convexpos.search.lower_bound import lower_bound_construction
from convexpos.search.pipeline import es_pipeline, theorem_bound, validate_certificate
from convexpos.suites import run_suite

SEED = 20240601


@pytest.fixture
def report(capsys):
    start = time.perf_counter()

    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - start:.1f}s) {detail}")
        assert ok, detail

    return emit


def test_criterion_1_small_n_exact(report):
    five = list(all_wiring_diagrams(5))
    sizes5 = [max_independent_size(double_cover(W)) for W in five]
    four = list(all_wiring_diagrams(4))
    sizes4 = [max_independent_size(double_cover(W)) for W in four]
    witness = [W for W, s in zip(four, sizes4) if s == 3]
    ok = len(five) == 768 and min(sizes5) >= 4 and len(four) == 16 and witness
    report(1, ok, f"{len(five)} five-wire diagrams, min max-independent {min(sizes5)}; "
                  f"{len(witness)} of {len(four)} four-wire diagrams have max 3")


def test_criterion_2_lower_bounds(report):
    sizes, clean = [], []
    for n in (4, 5, 6):
        S = dualize(lower_bound_construction(n, verify=False))
        sizes.append(S.n)
        clean.append(not has_independent_subset(S, n) and has_independent_subset(S, n - 1))
    ok = sizes == [4, 8, 16] and all(clean)
    report(2, ok, f"sizes {sizes}, no n-independent set: {clean}")


def test_criterion_3_pipeline_n5(report):
    bad = []
    kinds = {}
    for c in range(1000):
        W = random_wiring_diagram(theorem_bound(5), rng_for(SEED + 3, c))
        cert = es_pipeline(W, 5)
        kinds[cert.kind] = kinds.get(cert.kind, 0) + 1
        if len(cert) != 5 or not validate_certificate(cert, W):
            bad.append(c)
    report(3, not bad and theorem_bound(5) == 11, f"1000 diagrams on 11 wires, certificate kinds {kinds}, failures {bad[:5]}")


def test_criterion_4_reduction_suite(report, tmp_path, capsys):
    out = tmp_path / "weakmap.json"
    code = main(["verify", "--suite", "weakmap", "--instances", "200", "--seed", "3", "--out", str(out)])
    capsys.readouterr()
    data = json.loads(out.read_text())
    bad = data["failures"]
    report(4, code == 0 and not bad and data["instances"] == 200,
           f"{data['instances'] - len(bad)}/200 arrangements reduce with a valid weak map; "
           f"first failure {bad[0] if bad else None}")


def test_criterion_5_realization(report, four_wire):
    diagrams = [four_wire] + [random_wiring_diagram(3 + c % 4, rng_for(SEED + 5, c)) for c in range(100)]
    bad, margins = [], []
    for i, W in enumerate(diagrams):
        R = realize_wiring_diagram(W)
        margin = blaschke_margin(R)
        margins.append(margin)
        same = chirotope_from_system(dualize(R.bodies)) == chirotope_from_system(double_cover(W))
        if not same or not margin > 1e-9:
            bad.append(i)
    report(5, not bad, f"{len(diagrams)} diagrams round-trip, smallest margin {min(margins):.3g}, failures {bad[:5]}")


def test_criterion_6_oracle_agreement(report):
    results = run_suite("oracle", 100, SEED + 6)
    bad = [r for r in results if not r.ok]
    report(6, not bad and len(results) == 100,
           f"{len(results) - len(bad)}/100 arrangements agree on all subsets up to 5; "
           f"first failure {bad[0].detail if bad else None}")


OBS_33 = [(3, 3), (4, 4), (4, 5)]


def test_criterion_7_cups_caps(report):
    mismatched, dependent, dp_bad, obs_checked, obs_bad = [], [], [], 0, []
    for c in range(500):
        W = random_wiring_diagram(3 + c % 6, rng_for(SEED + 7, c))
        cup, cap = longest_cup_cap(W)
        if (len(cup), len(cap)) != brute_force_cup_cap(W):
            mismatched.append(c)
        S = double_cover(W)
        for cert in (cup, cap):
            if len(cert) >= 3 and not is_convexly_independent(S, cert.wires):
                dependent.append(c)
        chi = chirotope_from_system(S)
        best = max_independent_dp(chi)
        if len(best) != max_independent_size(S) or not is_convexly_independent_chirotope(chi, best):
            dp_bad.append(c)
        for k, l in OBS_33:
            if W.n >= comb(k + l - 4, k - 2) + 1:
                obs_checked += 1
                if not (len(cup) >= k or len(cap) >= l):
                    obs_bad.append((c, k, l))
    ok = not (mismatched or dependent or dp_bad or obs_bad) and obs_checked > 0
    report(7, ok, f"500 diagrams: DP/brute mismatches {len(mismatched)}, dependent certificates {len(dependent)}, "
                  f"independent-set DP mismatches {len(dp_bad)}, cup/cap bound checked {obs_checked} times "
                  f"with {len(obs_bad)} failures")


def test_criterion_8_nx3(report, nx3):
    env = upper_envelope(nx3)
    cls = classify_triple(nx3, "abc")
    zones = find_zones(nx3, "abc")
    empty = [zone_status(nx3, z).empty for z in zones]
    T, log = reduce_to_orientable(nx3)
    after = classify_triple(T, "abc")
    cycle = chirotope_from_system(T).cycle("abc")
    ok = (
        env == ("b", "a", "b", "c")
        and cls.kind == "non-orientable" and cls.top == "b"
        and len(zones) == 2 and all(empty)
        and len(log) == 1 and not non_orientable_triples(T)
        and after.orientable and after.cycle == cycle
        and crossing_word(T, "a", "bc") == tuple("bcbc")
    )
    report(8, ok, f"envelope {env}, {cls.kind} with top {cls.top}, empty zones {empty}, "
                  f"{len(log)} flip, cyclic order {cycle}")
