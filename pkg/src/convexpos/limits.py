"""Size caps, overridable with ``CONVEXPOS_LIMITS="brute=18,transversals=2000000"``."""
import os

DEFAULTS = {
    "brute": 16,
    "transversals": 10**6,
    "lower_bound": 8,
    "clustering": 24,
    "axioms": 16,
}


def get_limit(name: str) -> int:
    raw = os.environ.get("CONVEXPOS_LIMITS", "")
    for item in raw.split(","):
        key, _, val = item.partition("=")
        if key.strip() == name and val.strip():
            return int(val)
    return DEFAULTS[name]
