"""Embedded example corpus: small graphs with frozen expected results.

Each entry ships a graph file, usually a context file, and sometimes a
tropical witness, all in the package data directory.  The "expected"
block inside each graph file is consumed by the acceptance suite and by
humans diffing reports; the library itself never reads it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .graph import DecoratedDualGraph, GeometryContext
from .serialize import context_from_dict, graph_from_dict, witness_from_dict
from .tropical import TropicalWitness


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    notes: str
    expected: dict
    graph: DecoratedDualGraph
    context: GeometryContext | None
    witness: TropicalWitness | None


def _data_dir():
    return resources.files("logcone.data")


def corpus_list() -> list[str]:
    names = []
    for item in _data_dir().iterdir():
        if item.name.endswith(".json") and not item.name.endswith((".ctx.json", ".witness.json")):
            names.append(item.name[: -len(".json")])
    return sorted(names)


def corpus_load(name: str) -> CorpusEntry:
    base = _data_dir()
    path = base.joinpath(f"{name}.json")
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise KeyError(f"no corpus entry named {name!r}") from None
    graph = graph_from_dict(data)
    expected = data.get("expected", {})

    context = None
    ctx_path = base.joinpath(f"{name}.ctx.json")
    try:
        context = context_from_dict(json.loads(ctx_path.read_text()))
    except FileNotFoundError:
        pass

    witness = None
    wfile = expected.get("witness_file")
    if wfile:
        witness = witness_from_dict(json.loads(base.joinpath(wfile).read_text()))

    return CorpusEntry(
        name=name,
        notes=data.get("notes", ""),
        expected=expected,
        graph=graph,
        context=context,
        witness=witness,
    )
