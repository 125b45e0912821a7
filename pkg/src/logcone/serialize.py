"""JSON serialization for graphs, contexts, witnesses and eta tuples.

Every format carries a "schema": "logcone/1" marker.  Rationals are stored
as strings "p/q" so no float ever enters an exact computation; complex eta
entries are numbers, "p/q" strings, or [re, im] pairs.  Schema violations
are reported with JSON-pointer paths.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

import jsonschema

from .cone import ObstructionInput
from .graph import (
    DecoratedDualGraph,
    EdgeData,
    GeometryContext,
    LegData,
    StructuralError,
    VertexData,
)
from .tropical import TropicalWitness

SCHEMA_TAG = "logcone/1"


class FormatError(ValueError):
    """Input file does not match the expected JSON shape."""


def _schema(name: str) -> dict:
    text = resources.files("logcone.schemas").joinpath(name).read_text()
    return json.loads(text)


_GRAPH_SCHEMA = _schema("graph.schema.json")
_CONTEXT_SCHEMA = _schema("context.schema.json")


def _check(instance, schema):
    errors = sorted(
        jsonschema.Draft202012Validator(schema).iter_errors(instance),
        key=lambda e: list(e.absolute_path),
    )
    if errors:
        lines = []
        for e in errors:
            pointer = "/" + "/".join(str(p) for p in e.absolute_path)
            lines.append(f"{pointer}: {e.message}")
        raise FormatError("; ".join(lines))


def _contact_tuple(mapping: dict, divisors) -> tuple[int, ...]:
    unknown = set(mapping) - set(divisors)
    if unknown:
        raise FormatError(f"contact map uses unknown divisor labels {sorted(unknown)}")
    return tuple(int(mapping.get(d, 0)) for d in divisors)


def _contact_map(vec, divisors) -> dict:
    return {d: int(x) for d, x in zip(divisors, vec) if x != 0}


def graph_from_dict(data: dict) -> DecoratedDualGraph:
    _check(data, _GRAPH_SCHEMA)
    divisors = tuple(data["divisors"])
    vertices = tuple(
        VertexData(v["id"], v["genus"], v["degree"], frozenset(v["depth"]))
        for v in data["vertices"]
    )
    edges = []
    for e in data["edges"]:
        rev = e.get("contact_rev")
        edges.append(
            EdgeData(
                e["id"],
                e["from"],
                e["to"],
                frozenset(e["depth"]),
                _contact_tuple(e["contact"], divisors),
                None if rev is None else _contact_tuple(rev, divisors),
            )
        )
    legs = tuple(
        LegData(l["id"], l["at"], l["index"], _contact_tuple(l["contact"], divisors))
        for l in data["legs"]
    )
    return DecoratedDualGraph(divisors, vertices, tuple(edges), legs)


def graph_to_dict(graph: DecoratedDualGraph) -> dict:
    out = {
        "schema": SCHEMA_TAG,
        "divisors": list(graph.divisors),
        "vertices": [
            {
                "id": v.id,
                "genus": v.genus,
                "degree": v.degree,
                "depth": sorted(v.depth, key=graph.divisors.index),
            }
            for v in graph.vertices
        ],
        "edges": [],
        "legs": [
            {
                "id": l.id,
                "at": l.at,
                "index": l.index,
                "contact": _contact_map(l.contact, graph.divisors),
            }
            for l in graph.legs
        ],
    }
    for e in graph.edges:
        entry = {
            "id": e.id,
            "from": e.v1,
            "to": e.v2,
            "depth": sorted(e.depth, key=graph.divisors.index),
            "contact": _contact_map(e.contact, graph.divisors),
        }
        if e.contact_rev is not None:
            entry["contact_rev"] = _contact_map(e.contact_rev, graph.divisors)
        out["edges"].append(entry)
    return out


def context_from_dict(data: dict) -> GeometryContext:
    _check(data, _CONTEXT_SCHEMA)
    return GeometryContext(
        dim_x=data["dim"],
        divisors=tuple(data["divisors"]),
        c1_pairing={k: int(v) for k, v in data["c1"].items()},
        divisor_pairing={
            tag: {lab: int(v) for lab, v in row.items()}
            for tag, row in data["pairing"].items()
        },
    )


def context_to_dict(ctx: GeometryContext) -> dict:
    return {
        "schema": SCHEMA_TAG,
        "dim": ctx.dim_x,
        "divisors": list(ctx.divisors),
        "c1": dict(ctx.c1_pairing),
        "pairing": {tag: dict(row) for tag, row in ctx.divisor_pairing.items()},
    }


def rational_from_str(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"rational values must be integers or 'p/q' strings, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}: {exc}") from exc


def rational_to_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def witness_from_dict(data: dict) -> TropicalWitness:
    if not isinstance(data, dict) or data.get("schema") != SCHEMA_TAG:
        raise FormatError('witness file must be an object with "schema": "logcone/1"')
    s = {}
    for vid, row in data.get("s", {}).items():
        for label, value in row.items():
            s[(vid, label)] = rational_from_str(value)
    lam = {eid: rational_from_str(value) for eid, value in data.get("lambda", {}).items()}
    return TropicalWitness(s, lam)


def witness_to_dict(witness: TropicalWitness) -> dict:
    s: dict[str, dict[str, str]] = {}
    for (vid, label), value in sorted(witness.s.items()):
        s.setdefault(vid, {})[label] = rational_to_str(value)
    return {
        "schema": SCHEMA_TAG,
        "s": s,
        "lambda": {eid: rational_to_str(v) for eid, v in sorted(witness.lam.items())},
    }


def _complex_from_json(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, str):
        return complex(Fraction(value))
    if isinstance(value, list) and len(value) == 2:
        return complex(value[0], value[1])
    raise FormatError(f"eta entries must be numbers, 'p/q' strings, or [re, im] pairs, got {value!r}")


def eta_from_dict(data: dict) -> ObstructionInput:
    if not isinstance(data, dict) or data.get("schema") != SCHEMA_TAG:
        raise FormatError('eta file must be an object with "schema": "logcone/1"')
    if "eta" not in data or not isinstance(data["eta"], dict):
        raise FormatError('eta file must carry an "eta" object keyed by edge id')
    eta = {}
    for eid, row in data["eta"].items():
        if not isinstance(row, dict):
            raise FormatError(f"eta entry for edge {eid!r} must be a label->value object")
        for label, value in row.items():
            eta[(eid, label)] = _complex_from_json(value)
    return ObstructionInput(eta)


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON: {exc}") from exc


def load_graph(path) -> DecoratedDualGraph:
    return graph_from_dict(load_json(path))


def load_context(path) -> GeometryContext:
    return context_from_dict(load_json(path))


def load_witness(path) -> TropicalWitness:
    return witness_from_dict(load_json(path))


def load_eta(path) -> ObstructionInput:
    return eta_from_dict(load_json(path))


def dump_json(data: dict) -> str:
    """Canonical serialization: sorted keys, fixed separators, newline end."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
