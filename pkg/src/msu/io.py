"""File formats: JSON readers for spaces, graphs, triangles, and families."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Union

from .errors import InputFormatError
from .families import SpaceFamily
from .graphs import WeightedGraph, build_graph
from .rays import Triangle
from .scalars import DEFAULT_TOL, format_number, parse_number
from .spaces import FiniteMetricSpace, validate_space


def read_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc


def load_space(obj: object, tol: float = DEFAULT_TOL) -> FiniteMetricSpace:
    """Build a validated space from {"labels": optional, "matrix": required}."""
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InputFormatError('expected an object with a "matrix" field')
    matrix = obj["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InputFormatError('"matrix" must be a list of rows')
    rows = [[parse_number(v) for v in row] for row in matrix]
    labels = obj.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
    ):
        raise InputFormatError('"labels" must be a list of strings')
    return validate_space(rows, labels, tol=tol)


def space_payload(space: FiniteMetricSpace) -> dict:
    return {
        "labels": list(space.labels),
        "matrix": [list(row) for row in space.matrix],
    }


def load_graph(obj: object, tol: float = DEFAULT_TOL) -> WeightedGraph:
    """Build a graph from {"vertices": [...], "edges": [[u, v, w] ...]}."""
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise InputFormatError('expected an object with "vertices" and "edges"')
    vertices = obj["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputFormatError('"vertices" must be a list of strings')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise InputFormatError('"edges" must be a list')
    triples = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 3:
            raise InputFormatError(f"edge {e!r} must be [u, v, weight]")
        triples.append((e[0], e[1], parse_number(e[2])))
    return build_graph(vertices, triples, tol=tol)


TriangleOrSpace = Union[Triangle, FiniteMetricSpace]


def load_triangle(obj: object, tol: float = DEFAULT_TOL) -> TriangleOrSpace:
    """Accept {"sides": [a,b,c]} or a 3-point metric-space object."""
    if isinstance(obj, dict) and "sides" in obj:
        sides = obj["sides"]
        if not isinstance(sides, list) or len(sides) != 3:
            raise InputFormatError('"sides" must be a list of three numbers')
        a, b, c = (float(parse_number(v)) for v in sides)
        return Triangle(a, b, c)
    return load_space(obj, tol=tol)


def load_family(paths: list[str], tol: float = DEFAULT_TOL) -> SpaceFamily:
    """Family from a directory, a JSON-array file, or several space files."""
    if len(paths) == 1 and os.path.isdir(paths[0]):
        names = sorted(
            os.path.join(paths[0], f)
            for f in os.listdir(paths[0])
            if f.endswith(".json")
        )
        if not names:
            raise InputFormatError(f"no .json files in {paths[0]}")
        return SpaceFamily(tuple(load_space(read_json(p), tol) for p in names))
    if len(paths) == 1:
        obj = read_json(paths[0])
        if isinstance(obj, list):
            return SpaceFamily(tuple(load_space(item, tol) for item in obj))
        return SpaceFamily((load_space(obj, tol),))
    return SpaceFamily(tuple(load_space(read_json(p), tol) for p in paths))


def to_jsonable(value: object) -> object:
    """Recursively rewrite payload values into JSON-safe types.

    Exact rationals become "p/q" strings so they round-trip losslessly.
    """
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dump_report(payload: object, pretty: bool = False) -> str:
    data = to_jsonable(payload)
    if pretty:
        return json.dumps(data, sort_keys=True, indent=2)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))
