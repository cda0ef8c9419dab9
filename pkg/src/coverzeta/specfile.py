"""JSON cover-specification files and the bundled worked examples.

A spec file holds an odd prime, labeled vertices, and one record per
undirected edge carrying the voltage in the from->to direction.  Files
round-trip losslessly through ``load``/``dump``.
"""

from __future__ import annotations

import json
from importlib import resources

from .serre import SerreGraph
from .voltage import VoltageSpec

BUNDLED = ("example1", "example2", "example3", "example4")


class SpecFileError(ValueError):
    """Malformed or inconsistent cover-specification input."""


def spec_from_dict(doc: dict) -> VoltageSpec:
    try:
        p = int(doc["p"])
        vertices = list(doc["vertices"])
        edges = list(doc["edges"])
    except (KeyError, TypeError) as exc:
        raise SpecFileError(f"missing or malformed field: {exc}") from exc
    if len(set(vertices)) != len(vertices):
        raise SpecFileError("vertex labels must be unique")
    index = {label: i for i, label in enumerate(vertices)}
    pairs = []
    voltages = []
    for rec in edges:
        try:
            u, v, a = rec["from"], rec["to"], int(rec["voltage"])
        except (KeyError, TypeError) as exc:
            raise SpecFileError(f"bad edge record {rec!r}") from exc
        if u not in index or v not in index:
            raise SpecFileError(f"edge endpoint not among vertices: {rec!r}")
        pairs.append((index[u], index[v]))
        voltages.append(a)
    base = SerreGraph(len(vertices), pairs, labels=vertices)
    try:
        return VoltageSpec(base, p, tuple(voltages))
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc


def spec_to_dict(spec: VoltageSpec) -> dict:
    base = spec.base
    return {
        "p": spec.p,
        "vertices": [base.label_of(v) for v in base.vertices],
        "edges": [
            {
                "from": base.label_of(u),
                "to": base.label_of(v),
                "voltage": spec.voltages[k],
            }
            for k, (u, v) in enumerate(base.edge_pairs)
        ],
    }


def load_spec(path_or_name: str) -> VoltageSpec:
    """Load a spec from a filesystem path, or by bundled example name."""
    text = None
    try:
        with open(path_or_name, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError:
        name = path_or_name.removesuffix(".json")
        if name in BUNDLED:
            text = resources.files("coverzeta").joinpath(f"data/{name}.json").read_text()
    if text is None:
        raise SpecFileError(f"cannot read {path_or_name}: no such file or bundled example")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {path_or_name}: {exc}") from exc
    return spec_from_dict(doc)


def dump_spec(spec: VoltageSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(spec_to_dict(spec), fh, indent=2)
        fh.write("\n")


def bundled_spec(name: str) -> VoltageSpec:
    if name not in BUNDLED:
        raise SpecFileError(f"unknown bundled example {name!r}")
    return load_spec(name)


def base_from_dict(doc: dict) -> tuple[SerreGraph, int | None]:
    """Parse a voltage-free base description (for census runs)."""
    try:
        vertices = list(doc["vertices"])
        edges = list(doc["edges"])
    except (KeyError, TypeError) as exc:
        raise SpecFileError(f"missing or malformed field: {exc}") from exc
    p = int(doc["p"]) if "p" in doc else None
    index = {label: i for i, label in enumerate(vertices)}
    if len(index) != len(vertices):
        raise SpecFileError("vertex labels must be unique")
    pairs = []
    for rec in edges:
        u, v = rec["from"], rec["to"]
        if u not in index or v not in index:
            raise SpecFileError(f"edge endpoint not among vertices: {rec!r}")
        pairs.append((index[u], index[v]))
    return SerreGraph(len(vertices), pairs, labels=vertices), p


def load_base(path: str) -> tuple[SerreGraph, int | None]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {path}: {exc}") from exc
    return base_from_dict(doc)
