"""Reading and writing space descriptions.

Two concrete syntaxes are accepted. JSON::

    {"universe": ["p", "q", "r", "s"],
     "partition": [["p"], ["r"], ["q", "s"]],
     "target": ["p", "q"]}

and a line-oriented text form, which is also what ``nanotopo topology``
prints (extra lines are ignored on input)::

    universe: {p,q,r,s}
    partition: {p} {r} {q,s}
    target: {p,q}
"""

from __future__ import annotations

import json
import re
import sys

from .core_sets import EMPTY_SYMBOL, Universe, format_subset, make_universe
from .errors import SpaceFileError
from .rough_nano import NanoSpace, build_nano_space, make_partition

_KEYS = ("universe", "partition", "target")
_SET_RE = re.compile(r"\{([^{}]*)\}|" + EMPTY_SYMBOL)


def parse_names(text: str) -> list[str]:
    """``{a,b}``, ``a,b``, ``φ`` or empty text -> list of names."""
    t = text.strip()
    if t in ("", EMPTY_SYMBOL):
        return []
    if t.startswith("{") and t.endswith("}"):
        t = t[1:-1]
    return [name.strip() for name in t.split(",") if name.strip()]


def _sets_in(value: str) -> list[list[str]]:
    return [parse_names(m.group(1) or "") for m in _SET_RE.finditer(value)]


def _parse_text(text: str) -> dict:
    found = {}
    for line in text.splitlines():
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            continue
        found[key] = value
    missing = [k for k in _KEYS if k not in found]
    if missing:
        raise SpaceFileError("missing keys: " + ", ".join(missing))
    universe = _sets_in(found["universe"])
    target = _sets_in(found["target"])
    if len(universe) != 1 or len(target) != 1:
        raise SpaceFileError("universe and target must each be a single set")
    return {"universe": universe[0], "partition": _sets_in(found["partition"]), "target": target[0]}


def _parse_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceFileError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpaceFileError("top level must be an object")
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise SpaceFileError("missing keys: " + ", ".join(missing))
    universe, partition, target = data["universe"], data["partition"], data["target"]
    ok = (
        isinstance(universe, list)
        and all(isinstance(x, str) for x in universe)
        and isinstance(target, list)
        and all(isinstance(x, str) for x in target)
        and isinstance(partition, list)
        and all(isinstance(b, list) and all(isinstance(x, str) for x in b) for b in partition)
    )
    if not ok:
        raise SpaceFileError("universe/target must be string arrays, partition an array of string arrays")
    return {"universe": universe, "partition": partition, "target": target}


def space_from_dict(data: dict) -> NanoSpace:
    u = make_universe(data["universe"])
    p = make_partition(u, data["partition"])
    return build_nano_space(u, p, u.subset(data["target"]))


def parse_space(text: str) -> NanoSpace:
    """Build a space from either syntax (JSON when the text starts with ``{``)."""
    stripped = text.lstrip()
    data = _parse_json(stripped) if stripped.startswith("{") else _parse_text(stripped)
    return space_from_dict(data)


def load_space(path: str) -> NanoSpace:
    if path == "-":
        return parse_space(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_space(fh.read())
    except OSError as exc:
        raise SpaceFileError(f"cannot read {path}: {exc.strerror}") from None


def dump_space_json(space: NanoSpace) -> str:
    return json.dumps(space.describe(), ensure_ascii=False)


def dump_space_text(space: NanoSpace) -> str:
    u: Universe = space.universe
    return "\n".join(
        [
            f"universe: {u}",
            "partition: " + " ".join(format_subset(b) for b in space.partition.subsets),
            f"target: {format_subset(space.target)}",
        ]
    )
