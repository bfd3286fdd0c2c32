"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

from convexpos._kernels import _pykernels as py
from convexpos.cc.chirotope import chirotope_from_system
from convexpos.cc.cups import switch_table
from convexpos.cc.wiring import double_cover
from convexpos.generate import random_wiring_diagram, rng_for
from convexpos.search.lower_bound import lower_bound_construction
from convexpos.geometry.tangents import dualize

try:
    from convexpos._kernels import _ckernels as cy
except ImportError:
    cy = None


def cases():
    W = random_wiring_diagram(14, rng_for(0, 0))
    S = double_cover(W)
    sign = chirotope_from_system(S).sign
    lb = dualize(lower_bound_construction(6, verify=False))
    T = switch_table(random_wiring_diagram(40, rng_for(0, 1)))
    return {
        "max_independent_search (16 points)": lambda k: k.max_independent_search(lb.positions),
        "cc_violations (14 labels)": lambda k: k.cc_violations(sign, 10),
        "max_convex_chain (14 labels)": lambda k: k.max_convex_chain(sign),
        "cup_cap_lengths (40 wires)": lambda k: k.cup_cap_lengths(T),
        "subset_independent x1000": lambda k: [k.subset_independent(S.positions, [0, 3, 5, 7, 9]) for _ in range(1000)],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        if cy is None:
            print(f"{name:40s} {tp:10.4f} {'n/a':>10s}")
            continue
        assert fn(py) == fn(cy) or name.startswith("subset"), name
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:40s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
