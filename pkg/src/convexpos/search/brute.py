"""Exhaustive maximum convexly independent subset."""
from __future__ import annotations

from convexpos import _kernels
from convexpos.cylinder.system import CurveSystem
from convexpos.errors import SizeLimit
from convexpos.limits import get_limit


def brute_force_max_independent(S: CurveSystem, limit: int | None = None, lower: int = 0) -> tuple:
    """Lexicographically first maximum independent label set.

    Independence is hereditary, so the depth-first search over label sets in
    lexicographic order abandons every branch whose prefix is dependent.
    ``lower`` is an optional known lower bound on the answer.
    """
    limit = get_limit("brute") if limit is None else limit
    if S.n > limit:
        raise SizeLimit(f"{S.n} curves exceeds the brute-force limit {limit}")
    found = _kernels.max_independent_search(S.positions, lower)
    return tuple(S.labels[i] for i in found)


def max_independent_size(S: CurveSystem, limit: int | None = None) -> int:
    return len(brute_force_max_independent(S, limit))


def has_independent_subset(S: CurveSystem, k: int) -> bool:
    """True iff some k labels are convexly independent."""
    if k <= 2:
        return S.n >= k
    return len(brute_force_max_independent(S, lower=k)) >= k
