"""Cup/cap search for n points in convex position in a wiring diagram.

The top wire is evacuated so it crosses every other wire first, then it
is deleted.  An (n-1)-cup in what remains extends by the deleted wire to an
n-cup; otherwise an n-cap is looked for; otherwise the chirotope of the
double cover is searched directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from convexpos.cc.chirotope import chirotope_from_system, max_independent_dp
from convexpos.cc.cups import is_cap, is_cup, longest_cup_cap
from convexpos.cc.wiring import (
    WiringDiagram,
    delete_wire,
    double_cover,
    evacuate_top_wire,
    require_valid,
    restrict_diagram,
)
from convexpos.cylinder.system import is_convexly_independent


@dataclass(frozen=True)
class SearchCertificate:
    kind: str  # "independent-set", "cup" or "cap"
    labels: tuple
    trace: tuple = ()
    witness: WiringDiagram | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.labels)

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": list(self.labels), "trace": list(self.trace)}


def validate_certificate(cert: SearchCertificate, W: WiringDiagram) -> bool:
    """Re-check a certificate against the envelope oracle or restriction test."""
    if len(cert.labels) < 3:
        return len(set(cert.labels)) == len(cert.labels)
    if cert.kind in ("cup", "cap"):
        sub = restrict_diagram(cert.witness, cert.labels)
        if not (is_cup(sub) if cert.kind == "cup" else is_cap(sub)):
            return False
    return is_convexly_independent(double_cover(W), cert.labels)


def theorem_bound(n: int) -> int:
    """Wire count from which an n-certificate is guaranteed, for n >= 5."""
    return comb(2 * n - 5, n - 2) + 1


def es_pipeline(W: WiringDiagram, n: int) -> SearchCertificate:
    require_valid(W)
    if n < 3:
        raise ValueError("n must be at least 3")
    trace = []
    E = evacuate_top_wire(W)
    moved = sum(1 for a, b in zip(W.switches, E.switches) if a != b)
    trace.append({"step": "evacuate", "wire": E.top, "changed_switches": moved})
    w = E.top
    W0 = delete_wire(E, w)
    trace.append({"step": "delete", "wire": w, "remaining": W0.n})
    best = None
    if W0.n >= 1:
        cup, cap = longest_cup_cap(W0) if W0.n >= 2 else (None, None)
        cup_len = len(cup.wires) if cup else W0.n
        cap_len = len(cap.wires) if cap else W0.n
        trace.append({"step": "cup_cap", "cup": cup_len, "cap": cap_len})
        if cup is not None and cup_len >= n - 1:
            wires = tuple(sorted(cup.wires[-(n - 1):] + (w,), key=E.base.index))
            return SearchCertificate("cup", wires, tuple(trace), E)
        if cap is not None and cap_len >= n:
            wires = cap.wires[:n]
            return SearchCertificate("cap", wires, tuple(trace), E)
        if cup is not None:
            best = SearchCertificate("cup", cup.wires + (w,), (), E)
            if not is_cup(restrict_diagram(E, best.labels)):
                best = SearchCertificate("cup", cup.wires, (), E)
            if cap_len > len(best.labels):
                best = SearchCertificate("cap", cap.wires, (), E)
    if W.n >= 3:
        chi = chirotope_from_system(double_cover(W))
        dp = max_independent_dp(chi)
        trace.append({"step": "dp", "size": len(dp)})
        if len(dp) >= n:
            return SearchCertificate("independent-set", dp[:n], tuple(trace), E)
        if best is None or len(dp) > len(best.labels):
            best = SearchCertificate("independent-set", dp, (), E)
    if best is None:
        best = SearchCertificate("independent-set", W.base, (), E)
    trace.append({"step": "best", "size": len(best.labels)})
    return SearchCertificate(best.kind, best.labels, tuple(trace), E)
