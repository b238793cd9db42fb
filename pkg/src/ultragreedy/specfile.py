"""Input file formats.

Triple spec (JSON, UTF-8), discriminated by "type":

    {"type": "explicit",
     "points": ["a", "b"],
     "weights": {"a": "1/2", "b": "0"},
     "distances": [["a", "b", "-1"]]}

    {"type": "padic", "p": 2, "h": 0, "elements": [0, 1, 2, 3, 4],
     "weights": {"0": "1"}}          # weights optional, default 0

Every numeric value is an exact rational string or a JSON integer; float
literals are rejected with the offending field named.  Loading always runs
the full ultrametric validation.

Monotone family file:

    {"depth": 2, "tables": [[["-1", "0"], ["0", "0"]],
                            [["-1", "-1"], ["0", "0"]]]}

with each table sorted by distance value and non-decreasing.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .padic import padic_spec_from_json, padic_triple
from .perimeter import MonotoneFamily
from .rational import parse_rational
from .triple import UltraTriple, build_triple


def _load_json(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_triple_obj(obj, where: str = "spec") -> UltraTriple:
    """Parse an already-decoded triple spec object into a validated triple."""
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    kind = obj.get("type")
    if kind == "padic":
        return padic_triple(padic_spec_from_json(obj, where))
    if kind != "explicit":
        raise InputError(f"{where}.type: expected \"explicit\" or \"padic\", got {kind!r}")

    points = obj.get("points")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise InputError(f"{where}.points: expected an array of strings")
    raw_weights = obj.get("weights")
    if not isinstance(raw_weights, dict):
        raise InputError(f"{where}.weights: expected an object")
    weights = {p: parse_rational(v, f"{where}.weights[{p!r}]") for p, v in raw_weights.items()}
    raw_distances = obj.get("distances")
    if not isinstance(raw_distances, list):
        raise InputError(f"{where}.distances: expected an array")
    entries = []
    for i, entry in enumerate(raw_distances):
        field = f"{where}.distances[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3
                and isinstance(entry[0], str) and isinstance(entry[1], str)):
            raise InputError(f"{field}: expected [pointA, pointB, value]")
        entries.append((entry[0], entry[1], parse_rational(entry[2], field)))
    return build_triple(points, weights, entries)


def load_triple(path) -> UltraTriple:
    """Load and validate a triple spec file (either format)."""
    return parse_triple_obj(_load_json(path), where=str(path))


def parse_family_obj(obj, where: str = "family") -> MonotoneFamily:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    depth = obj.get("depth")
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 1:
        raise InputError(f"{where}.depth: expected a positive integer, got {depth!r}")
    raw_tables = obj.get("tables")
    if not isinstance(raw_tables, list) or len(raw_tables) != depth:
        raise InputError(f"{where}.tables: expected an array of {depth} tables")
    tables = []
    for j, raw in enumerate(raw_tables, start=1):
        field = f"{where}.tables[{j - 1}]"
        if not isinstance(raw, list) or not raw:
            raise InputError(f"{field}: expected a non-empty array of [distance, value] pairs")
        table = {}
        last_key = None
        for pair in raw:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InputError(f"{field}: expected [distance, value] pairs")
            key = parse_rational(pair[0], f"{field} distance")
            if last_key is not None and key <= last_key:
                raise InputError(f"{field}: distances must be strictly increasing")
            last_key = key
            table[key] = parse_rational(pair[1], f"{field} value")
        tables.append(table)
    try:
        return MonotoneFamily(tables)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def load_family(path) -> MonotoneFamily:
    """Load a monotone family file, rejecting unsorted or decreasing tables."""
    return parse_family_obj(_load_json(path), where=str(path))
