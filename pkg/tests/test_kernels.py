import os
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexpos import _kernels
from convexpos._kernels import _pykernels as py
from convexpos.cc.chirotope import Chirotope, chirotope_from_system
from convexpos.cc.cups import switch_table
from convexpos.cc.wiring import double_cover
from convexpos.generate import random_points, random_wiring_diagram, rng_for

cy = pytest.importorskip("convexpos._kernels._ckernels")


def diagram_case(n, seed):
    W = random_wiring_diagram(n, rng_for(seed, 0))
    S = double_cover(W)
    return W, S, chirotope_from_system(S).sign


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 10), st.integers(0, 10**6))
def test_backends_agree_on_diagrams(n, seed):
    W, S, sign = diagram_case(n, seed)
    pos = S.positions
    assert py.max_independent_search(pos) == cy.max_independent_search(pos)
    assert py.max_independent_search(pos, 4) == cy.max_independent_search(pos, 4)
    assert py.max_convex_chain(sign) == cy.max_convex_chain(sign)
    assert py.cup_cap_lengths(switch_table(W)) == cy.cup_cap_lengths(switch_table(W))
    assert py.cc_violations(sign, 10) == cy.cc_violations(sign, 10)
    for sub in combinations(range(n), min(4, n)):
        assert py.subset_independent(pos, list(sub)) == cy.subset_independent(pos, list(sub))
        assert py.caratheodory_independent(sign, list(sub)) == cy.caratheodory_independent(sign, list(sub))


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 8), st.integers(0, 10**6), st.data())
def test_backends_agree_on_violations(n, seed, data):
    arr = random_points(n, rng_for(seed, 0))
    chi = Chirotope.from_points({x: tuple(arr[x].vertices[0]) for x in arr.labels})
    triple = data.draw(st.sampled_from(list(combinations(chi.labels, 3))))
    sign = chi.with_flipped(triple).sign
    limit = data.draw(st.integers(0, 20))
    assert py.cc_violations(sign, limit) == cy.cc_violations(sign, limit)


def test_selected_backend():
    forced = os.environ.get("CONVEXPOS_PURE_PYTHON", "") not in ("", "0")
    assert _kernels.BACKEND == ("python" if forced else "cython")


def test_pure_python_switch():
    env = dict(os.environ, CONVEXPOS_PURE_PYTHON="1")
    code = "from convexpos import _kernels; print(_kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_empty_and_tiny_inputs():
    T = np.full((1, 1), -1, dtype=np.int64)
    assert py.cup_cap_lengths(T) == cy.cup_cap_lengths(T)
    sign = np.zeros((3, 3, 3), dtype=np.int8)
    sign[0, 1, 2] = sign[1, 2, 0] = sign[2, 0, 1] = 1
    sign[1, 0, 2] = sign[0, 2, 1] = sign[2, 1, 0] = -1
    assert py.max_convex_chain(sign) == cy.max_convex_chain(sign) == 3
