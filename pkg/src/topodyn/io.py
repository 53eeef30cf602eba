"""System documents and atlas rows.

A system document is a JSON object::

    {"points": ["a", "b", "c"],
     "opens": [["a", "b"]],
     "map": {"a": "c", "b": "c", "c": "c"}}

The empty set and the whole space may be left out of ``opens``.  Point
order in ``points`` fixes the internal indices and every printed order.
"""
from __future__ import annotations

import csv
import io
import json
import string
from typing import Any, Iterable, Sequence

from .deciders import PROPERTY_NAMES, PropertyProfile
from .dynamics import DynSystem, SelfMap
from .topology import FiniteTopology, members, validate_topology


class DocumentError(ValueError):
    """Malformed system document (bad JSON, unknown names, partial map)."""


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"p{i}" for i in range(n))


def names_of(sys_or_top, mask: int) -> list[str]:
    t = sys_or_top.topology if isinstance(sys_or_top, DynSystem) else sys_or_top
    names = t.point_names or default_names(t.n)
    return [names[x] for x in members(mask)]


def format_set(names: Sequence[str]) -> str:
    return "{" + ",".join(names) + "}"


def parse_document(doc: Any) -> DynSystem:
    if not isinstance(doc, dict):
        raise DocumentError("system document must be a JSON object")
    for key in ("points", "opens", "map"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    points = doc["points"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise DocumentError("'points' must be a list of strings")
    if len(set(points)) != len(points):
        raise DocumentError("point names must be distinct")
    index = {p: i for i, p in enumerate(points)}

    def lookup(name: Any) -> int:
        if name not in index:
            raise DocumentError(f"unknown point {name!r}")
        return index[name]

    family = []
    if not isinstance(doc["opens"], list):
        raise DocumentError("'opens' must be a list of lists of point names")
    for u in doc["opens"]:
        if not isinstance(u, list):
            raise DocumentError("'opens' must be a list of lists of point names")
        m = 0
        for name in u:
            m |= 1 << lookup(name)
        family.append(m)
    mp = doc["map"]
    if not isinstance(mp, dict):
        raise DocumentError("'map' must be an object from point names to point names")
    for name in mp:
        lookup(name)
    missing = [p for p in points if p not in mp]
    if missing:
        raise DocumentError(f"map is undefined at {missing}")
    image = tuple(lookup(mp[p]) for p in points)
    topology = validate_topology(len(points), family, points)
    return DynSystem(topology, SelfMap(image))


def loads_system(text: str) -> DynSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return parse_document(doc)


def load_system(path) -> DynSystem:
    with open(path, encoding="utf-8") as fh:
        return loads_system(fh.read())


def to_document(sys: DynSystem) -> dict:
    t = sys.topology
    names = t.point_names or default_names(t.n)
    return {
        "points": list(names),
        "opens": [names_of(sys, u) for u in t.opens if u not in (0, t.full)],
        "map": {names[x]: names[y] for x, y in enumerate(sys.map.image)},
    }


def dumps_system(sys: DynSystem, indent: int | None = None) -> str:
    return json.dumps(to_document(sys), indent=indent)


def with_names(sys: DynSystem, names: Sequence[str] | None = None) -> DynSystem:
    t = sys.topology
    names = tuple(names) if names is not None else default_names(t.n)
    return DynSystem(FiniteTopology(t.n, t.opens, names), sys.map)


# --- profiles -----------------------------------------------------------------

def witness_document(sys: DynSystem, profile: PropertyProfile) -> dict:
    """Witnesses rendered with point names; see README for the meaning of each."""
    names = sys.topology.point_names or default_names(sys.n)

    def as_set(m):
        return names_of(sys, m)

    w = profile.witness
    out: dict[str, Any] = {}
    for key in ("hypercyclic", "hypertransitive", "surjective"):
        out[key] = None if w.get(key) is None else names[w[key]]
    for key in ("top_transitive", "mixing"):
        pair = w.get(key)
        out[key] = None if pair is None else [as_set(pair[0]), as_set(pair[1])]
    for key in ("strongly_top_transitive", "supermixing", "hypermixing",
                "has_closed_invariant_subset", "continuous", "open_map"):
        out[key] = None if w.get(key) is None else as_set(w[key])
    out["strongly_transitive_finite"] = w.get("strongly_transitive_finite")
    pair = w.get("injective")
    out["injective"] = None if pair is None else [names[pair[0]], names[pair[1]]]
    return out


def profile_document(sys: DynSystem, profile: PropertyProfile) -> dict:
    return {
        "system": to_document(sys),
        "properties": profile.verdicts(),
        "witness": witness_document(sys, profile),
    }


def profile_text(sys: DynSystem, profile: PropertyProfile) -> str:
    wit = witness_document(sys, profile)
    width = max(map(len, PROPERTY_NAMES))
    lines = []
    for name in PROPERTY_NAMES:
        verdict = "yes" if getattr(profile, name) else "no"
        extra = "" if wit[name] is None else f"  witness: {json.dumps(wit[name])}"
        lines.append(f"{name:<{width}}  {verdict}{extra}")
    return "\n".join(lines)


def profile_csv(sys: DynSystem, profile: PropertyProfile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["property", "value"])
    for name in PROPERTY_NAMES:
        w.writerow([name, int(getattr(profile, name))])
    return buf.getvalue()


# --- atlas rows ---------------------------------------------------------------

ATLAS_HEADER = ("index", "n", "points", "opens", "map", "canonical_key", "class_size") + PROPERTY_NAMES


def encode_opens(sys: DynSystem) -> str:
    return ";".join(format_set(names_of(sys, u)) for u in sys.topology.opens)


def encode_map(sys: DynSystem) -> str:
    names = sys.topology.point_names or default_names(sys.n)
    return ";".join(f"{names[x]}->{names[y]}" for x, y in enumerate(sys.map.image))


def atlas_row(index: int, sys: DynSystem, profile: PropertyProfile, key: str,
              class_size: int = 1) -> dict:
    names = sys.topology.point_names or default_names(sys.n)
    row = {
        "index": index,
        "n": sys.n,
        "points": ",".join(names),
        "opens": encode_opens(sys),
        "map": encode_map(sys),
        "canonical_key": key,
        "class_size": class_size,
    }
    for name in PROPERTY_NAMES:
        row[name] = int(getattr(profile, name))
    return row


def write_atlas_csv(rows: Iterable[dict], fh) -> None:
    w = csv.DictWriter(fh, fieldnames=ATLAS_HEADER, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)


def write_atlas_jsonl(rows: Iterable[dict], fh) -> None:
    for row in rows:
        fh.write(json.dumps(row) + "\n")


def read_atlas_csv(fh) -> list[dict]:
    out = []
    for row in csv.DictReader(fh):
        for key in ("index", "n", "class_size") + PROPERTY_NAMES:
            row[key] = int(row[key])
        out.append(row)
    return out


def read_atlas_jsonl(fh) -> list[dict]:
    return [json.loads(line) for line in fh if line.strip()]
