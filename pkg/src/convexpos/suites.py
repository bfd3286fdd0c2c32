"""Seeded property suites shared by ``convexpos verify`` and the test-suite.

Instance ``c`` of a suite run with seed ``s`` draws only from
``rng_for(s, c)``, so instances can run in any order or in parallel and the
merged report is the same.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations

from convexpos.cc.chirotope import (
    chirotope_from_system,
    is_convexly_independent_chirotope,
    verify_cc_axioms,
)
from convexpos.cc.wiring import double_cover
from convexpos.cylinder.system import is_convexly_independent
from convexpos.cylinder.zones import non_orientable_triples, reduce_to_orientable, verify_weak_map
from convexpos.generate import random_arrangement, random_points, random_wiring_diagram, rng_for
from convexpos.geometry.oracle import is_convexly_independent_geometric
from convexpos.geometry.tangents import dualize
from convexpos.search.pipeline import es_pipeline, theorem_bound, validate_certificate


@dataclass(frozen=True)
class InstanceResult:
    instance: int
    ok: bool
    detail: str = ""


def weakmap_instance(seed: int, c: int) -> InstanceResult:
    rng = rng_for(seed, c)
    n = 5 + int(rng.integers(6))
    S = dualize(random_arrangement(n, rng))
    start = len(non_orientable_triples(S))
    T, log = reduce_to_orientable(S)
    if len(log) > start:
        return InstanceResult(c, False, f"{len(log)} flips for {start} non-orientable triples")
    counts = [start] + [r.non_orientable_after for r in log]
    if any(b >= a for a, b in zip(counts, counts[1:])):
        return InstanceResult(c, False, f"non-decreasing counts {counts}")
    if non_orientable_triples(T):
        return InstanceResult(c, False, "result not orientable")
    rep = verify_cc_axioms(chirotope_from_system(T))
    if not rep.ok:
        return InstanceResult(c, False, f"axiom violations {rep.violations[:3]}")
    wm = verify_weak_map(S, T, max_subset_size=6)
    if not wm.ok:
        return InstanceResult(c, False, f"weak map fails on {wm.violations[:3]}")
    return InstanceResult(c, True, f"n={n} flips={len(log)}")


def oracle_instance(seed: int, c: int, max_subset: int = 5) -> InstanceResult:
    """Geometric, envelope and (when orientable) chirotope independence agree."""
    rng = rng_for(seed, c)
    n = 5 + int(rng.integers(3))
    if c % 2 == 0:
        arr = random_points(n, rng)
    else:
        arr = random_arrangement(n, rng, independent_triples=bool(c % 4 == 1))
    S = dualize(arr)
    chi = None
    if not non_orientable_triples(S) and all(
        is_convexly_independent(S, t) for t in combinations(S.labels, 3)
    ):
        chi = chirotope_from_system(S)
    checked = 0
    for k in range(3, min(max_subset, n) + 1):
        for sub in combinations(S.labels, k):
            env = is_convexly_independent(S, sub)
            geo = is_convexly_independent_geometric(arr, sub)
            checked += 1
            if env != geo:
                return InstanceResult(c, False, f"{sub}: envelope {env} geometric {geo}")
            if chi is not None and is_convexly_independent_chirotope(chi, sub) != env:
                return InstanceResult(c, False, f"{sub}: chirotope disagrees")
    return InstanceResult(c, True, f"n={n} subsets={checked} chirotope={'yes' if chi else 'no'}")


def axioms_instance(seed: int, c: int) -> InstanceResult:
    rng = rng_for(seed, c)
    n = 3 + int(rng.integers(6))
    W = random_wiring_diagram(n, rng)
    rep = verify_cc_axioms(chirotope_from_system(double_cover(W)))
    if not rep.ok:
        return InstanceResult(c, False, f"axiom violations {rep.violations[:3]}")
    return InstanceResult(c, True, f"n={n}")


def bound_instance(seed: int, c: int) -> InstanceResult:
    rng = rng_for(seed, c)
    n = 4 + c % 3
    # the binomial bound only holds from n = 5; below that g(n) = 2^(n-2) + 1
    W = random_wiring_diagram(theorem_bound(n) if n >= 5 else 2 ** (n - 2) + 1, rng)
    cert = es_pipeline(W, n)
    if len(cert.labels) < n or not validate_certificate(cert, W):
        return InstanceResult(c, False, f"n={n}: {cert.kind} {cert.labels}")
    return InstanceResult(c, True, f"n={n} {cert.kind}")


SUITES = {
    "weakmap": weakmap_instance,
    "oracle": oracle_instance,
    "axioms": axioms_instance,
    "bound": bound_instance,
}


def run_suite(name: str, instances: int, seed: int, workers: int = 1) -> list[InstanceResult]:
    fn = partial(SUITES[name], seed)
    if workers <= 1:
        return [fn(c) for c in range(instances)]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(fn, range(instances)))
