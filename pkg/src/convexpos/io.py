"""JSON files for every data type, with the type detected from the keys."""
from __future__ import annotations

import json
from pathlib import Path

from convexpos.cc.chirotope import Chirotope
from convexpos.cc.wiring import WiringDiagram
from convexpos.cylinder.system import CurveSystem
from convexpos.errors import ConvexPosError
from convexpos.geometry.bodies import Arrangement
from convexpos.search.clustering import ConvexClustering


class MalformedInput(ConvexPosError, ValueError):
    pass


KINDS = {
    "diagram": WiringDiagram,
    "system": CurveSystem,
    "arrangement": Arrangement,
    "chirotope": Chirotope,
    "clustering": ConvexClustering,
}


def detect_kind(data) -> str:
    if not isinstance(data, dict):
        raise MalformedInput("top-level JSON value must be an object")
    if "switches" in data:
        return "diagram"
    if "events" in data:
        return "system"
    if "bodies" in data:
        return "arrangement"
    if "triples" in data:
        return "chirotope"
    if "clusters" in data:
        return "clustering"
    if "kind" in data and "labels" in data:
        return "certificate"
    raise MalformedInput(f"cannot tell the file type from keys {sorted(data)}")


def from_data(data, expect: str | None = None):
    """Parse a decoded JSON object; certificates stay plain dicts."""
    kind = detect_kind(data)
    if expect is not None and kind not in (expect if isinstance(expect, tuple) else (expect,)):
        raise MalformedInput(f"expected {expect}, got {kind}")
    if kind == "certificate":
        return data
    try:
        return KINDS[kind].from_json(data)
    except ConvexPosError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as err:
        raise MalformedInput(f"bad {kind} file: {err}") from err


def load(path, expect=None):
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as err:
        raise MalformedInput(f"cannot read {path}: {err}") from err
    return from_data(data, expect)


def dumps(obj) -> str:
    data = obj if isinstance(obj, dict) else obj.to_json()
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj))
