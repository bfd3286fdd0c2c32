from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexpos.cc.chirotope import chirotope_from_system
from convexpos.cc.wiring import (
    WiringDiagram,
    delete_wire,
    double_cover,
    evacuate_top_wire,
    is_evacuated,
    lower_envelope_path,
    parse_switches,
    restrict_diagram,
    rotate_half_period,
    simulate,
    upper_envelope_path,
    validate_wiring_diagram,
    word,
)
from convexpos.cylinder.system import is_generalized_configuration
from convexpos.errors import InvalidDiagram, NonAdjacentSwitch, UnknownLabel
from convexpos.generate import random_wiring_diagram, rng_for


def diagrams(max_n=7):
    return st.builds(
        lambda n, seed: random_wiring_diagram(n, rng_for(seed, n)),
        st.integers(3, max_n),
        st.integers(0, 10**6),
    )


def test_simulate_four_wire_words(four_wire):
    # [REF] permutation sequence listed for the four-point configuration
    words = [word(p) for p in simulate(four_wire.base, four_wire.switches)]
    assert words == ["badc", "bacd", "bcad", "cbad", "cbda", "cdba", "cdab"]


def test_simulate_empty():
    assert simulate(tuple("abc"), ()) == [tuple("abc")]


def test_simulate_non_adjacent():
    with pytest.raises(NonAdjacentSwitch) as err:
        simulate(tuple("abc"), [("a", "c")])
    assert err.value.index == 0 and err.value.reason == "not adjacent"


def test_simulate_wrong_order():
    with pytest.raises(NonAdjacentSwitch) as err:
        simulate(tuple("abc"), [("a", "b"), ("a", "b")])
    assert err.value.index == 1 and "wrong order" in err.value.reason


def test_simulate_unknown_label():
    with pytest.raises(UnknownLabel):
        simulate(tuple("abc"), [("a", "z")])


def test_validate_reference_diagrams(four_wire, five_point):
    # [REF] both listed switch sequences are valid half-periods
    assert validate_wiring_diagram(four_wire).valid
    assert validate_wiring_diagram(five_point).valid


def test_validate_missing_pair():
    rep = validate_wiring_diagram(WiringDiagram(tuple("abc"), parse_switches("bc")))
    assert not rep.valid
    assert any("missing pair ('a', 'c')" in p for p in rep.problems)
    assert any("reverse" in p for p in rep.problems)


def test_validate_duplicate_and_nonadjacent():
    rep = validate_wiring_diagram(WiringDiagram(tuple("abc"), parse_switches("ab,ba,ac")))
    assert any("duplicate" in p for p in rep.problems)
    rep = validate_wiring_diagram(WiringDiagram(tuple("abc"), parse_switches("ac,ab,bc")))
    assert any("non-adjacent" in p for p in rep.problems)


def test_double_cover_requires_valid():
    with pytest.raises(InvalidDiagram):
        double_cover(WiringDiagram(tuple("abc"), parse_switches("ab")))


def test_double_cover_cup3():
    S = double_cover(WiringDiagram(tuple("abc"), parse_switches("bc,ac,ab")))
    assert S.m == 6
    assert all(len(v) == 2 for v in S.pair_events.values())


def test_double_cover_five_point(five_point):
    S = double_cover(five_point)
    assert S.m == 20
    assert is_generalized_configuration(S)


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_round_trip_and_antipodality(W):
    perms = simulate(W.base, W.switches)
    assert perms[-1] == tuple(reversed(W.base))
    S = double_cover(W)
    assert S.m == W.n * (W.n - 1)
    assert is_generalized_configuration(S)


def test_rotate_example(four_wire):
    R = rotate_half_period(four_wire)
    assert R.switches == parse_switches("ac,bc,ad,bd,ba,cd")
    assert R.base == tuple("bacd")
    S, T = double_cover(four_wire), double_cover(R)
    assert any(S.rotate(r).events == T.events for r in range(S.m))


@settings(max_examples=30, deadline=None)
@given(diagrams(6))
def test_rotate_full_period_and_chirotope(W):
    R = W
    chi = chirotope_from_system(double_cover(W))
    for _ in range(2 * len(W.switches)):
        R = rotate_half_period(R)
        assert validate_wiring_diagram(R).valid
        assert chirotope_from_system(double_cover(R)) == chi
    assert R == W


def test_restrict_and_delete(five_point):
    sub = restrict_diagram(five_point, [1, 3, 5])
    assert sub.base == (5, 3, 1)
    assert validate_wiring_diagram(sub).valid
    assert delete_wire(five_point, 5).n == 4
    with pytest.raises(UnknownLabel):
        restrict_diagram(five_point, [1, 9])


def test_envelope_paths(four_wire):
    assert upper_envelope_path(four_wire) == tuple("cdddaab")
    assert lower_envelope_path(four_wire) == tuple("bbbcccc")


def test_evacuate_fixed_point(four_wire):
    assert is_evacuated(four_wire)
    assert evacuate_top_wire(four_wire) == four_wire


def test_evacuate_five_point_moves_three_crossings(five_point):
    # [DERIVED] the top wire 1 has exactly three crossings to its left
    # among wires it has not met yet: 43, 53, 54.  They leave through the
    # far end reversed.
    E = evacuate_top_wire(five_point)
    assert is_evacuated(E)
    assert E.switches[-3:] == ((3, 4), (3, 5), (4, 5))
    assert E.switches[:4] == ((2, 1), (5, 1), (4, 1), (3, 1))
    assert chirotope_from_system(double_cover(E)) == chirotope_from_system(double_cover(five_point))


@settings(max_examples=60, deadline=None)
@given(diagrams(7))
def test_evacuate_preserves_chirotope(W):
    E = evacuate_top_wire(W)
    assert validate_wiring_diagram(E).valid
    assert E.top == W.top
    assert is_evacuated(E)
    assert chirotope_from_system(double_cover(E)) == chirotope_from_system(double_cover(W))


def test_json_round_trip(five_point):
    assert WiringDiagram.from_json(five_point.to_json()) == five_point


def test_every_pair_once(five_point):
    pairs = sorted(tuple(sorted(s)) for s in five_point.switches)
    assert pairs == sorted(combinations(sorted(five_point.base), 2))
