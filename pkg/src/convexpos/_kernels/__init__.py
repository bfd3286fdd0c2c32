"""Kernel backend selection.

The compiled extension is used when it was built; setting
``CONVEXPOS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

if os.environ.get("CONVEXPOS_PURE_PYTHON", "") not in ("", "0"):
    from convexpos._kernels._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from convexpos._kernels._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from convexpos._kernels._pykernels import *  # noqa: F401,F403
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "subset_independent",
    "max_independent_search",
    "cc_violations",
    "caratheodory_independent",
    "max_convex_chain",
    "cup_cap_lengths",
]
