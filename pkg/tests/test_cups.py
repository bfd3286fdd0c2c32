from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexpos.cc.chirotope import chirotope_from_system, is_convexly_independent_chirotope
from convexpos.cc.cups import (
    brute_force_cup_cap,
    cap_diagram,
    cup_diagram,
    is_cap,
    is_cup,
    is_cup_by_triples,
    longest_cup_cap,
)
from convexpos.cc.wiring import WiringDiagram, double_cover, parse_switches, restrict_diagram, validate_wiring_diagram
from convexpos.generate import all_wiring_diagrams, random_wiring_diagram, rng_for
from convexpos.search.brute import has_independent_subset


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_cup_and_cap_diagrams(k):
    cup, cap = cup_diagram(k), cap_diagram(k)
    assert validate_wiring_diagram(cup).valid and validate_wiring_diagram(cap).valid
    assert is_cup(cup) and not is_cap(cup)
    assert is_cap(cap) and not is_cup(cap)
    assert len(longest_cup_cap(cup)[0]) == k
    assert len(longest_cup_cap(cap)[1]) == k


def test_three_wire_example():
    # [DERIVED] read with (below, above) switches: bc, ac, ab on base abc
    W = WiringDiagram(tuple("abc"), parse_switches("bc,ac,ab"))
    cup, cap = longest_cup_cap(W)
    assert (len(cup), len(cap)) == (3, 2)
    assert brute_force_cup_cap(W) == (3, 2)


def test_every_three_wire_diagram_is_cup_or_cap():
    # [REF] every diagram on three wires is a 3-cup or a 3-cap
    for W in all_wiring_diagrams(3):
        cup, cap = longest_cup_cap(W)
        assert max(len(cup), len(cap)) == 3


def test_cups_unique_up_to_commutation():
    # all 5-wire cups have the same triple structure as the constructed one
    target = chirotope_from_system(double_cover(cup_diagram(5)))
    cups = [W for W in all_wiring_diagrams(5) if is_cup(W)]
    assert cups
    assert all(chirotope_from_system(double_cover(W)) == target for W in cups)


def test_five_cup_is_convexly_independent():
    # [REF] the wires of a 5-cup are independent
    W = cup_diagram(5)
    cup, _ = longest_cup_cap(W)
    assert len(cup) == 5
    chi = chirotope_from_system(double_cover(W))
    assert is_convexly_independent_chirotope(chi, cup.wires)


def test_certificates_check():
    W = random_wiring_diagram(8, rng_for(2, 0))
    cup, cap = longest_cup_cap(W)
    assert cup.check() and cap.check()
    assert is_cup(restrict_diagram(W, cup.wires))


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 8), st.integers(0, 10**6))
def test_dp_matches_brute_force(n, seed):
    W = random_wiring_diagram(n, rng_for(seed, 0))
    cup, cap = longest_cup_cap(W)
    assert (len(cup), len(cap)) == brute_force_cup_cap(W)
    chi = chirotope_from_system(double_cover(W))
    for cert in (cup, cap):
        assert cert.check()
        if len(cert) >= 3:
            assert is_convexly_independent_chirotope(chi, cert.wires)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_chain_criterion(seed):
    W = random_wiring_diagram(7, rng_for(seed, 3))
    for sub in combinations(W.base, 4):
        assert is_cup_by_triples(W, sub) == is_cup(restrict_diagram(W, sub))


@pytest.mark.parametrize("k,l", [(3, 3), (4, 4), (4, 5)])
def test_cup_cap_bound(k, l):
    n = comb(k + l - 4, k - 2) + 1
    for c in range(60):
        cup, cap = longest_cup_cap(random_wiring_diagram(n, rng_for(100 + k * 10 + l, c)))
        assert len(cup) >= k or len(cap) >= l


def test_erdos_szekeres_bound_is_tight():
    # one wire fewer admits neither: the 3-cup/3-cap bound needs 3 wires
    W = WiringDiagram((0, 1), ((0, 1),))
    cup, cap = longest_cup_cap(W)
    assert len(cup) < 3 and len(cap) < 3


def test_single_point_improvement_conditional():
    # The hypothesis (no 5 independent among C(5,3) = 10 wires) never holds
    # since g(5) = 9; the conditional property is checked as stated.
    hits = 0
    for c in range(40):
        W = random_wiring_diagram(10, rng_for(34, c))
        if not has_independent_subset(double_cover(W), 5):
            hits += 1
            assert len(longest_cup_cap(W)[0]) >= 4
    assert hits == 0
