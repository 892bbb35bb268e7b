"""JSON documents for digraphs, placements and arc assignments, plus ASCII boards.

Formats (1-based labels on disk):

    digraph     {"n": 5, "arcs": [[1, 5], [2, 3], ...]}
    placement   {"n": 4, "queens": [[1, 2], [2, 4], ...], "modular": false}
    assignment  {"arcs": [{"arc": [1, 5], "index": 0}, ...]}

`modular` is optional and records which problem a placement solves.  The
assignment's `index` points into the list of family files, in order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from .digraph import DigraphError, LabeledDigraph
from .labeling import Placement
from .product import FamilyAssignment, ProductError


class DocumentError(ValueError):
    """A document is malformed; the message names the line or field path."""


@dataclass(frozen=True)
class PlacementDocument:
    placement: Placement
    modular: Optional[bool] = None


def _parse_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _read(path: Union[str, Path]):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    return _parse_json(text, str(path))


def _int(value, path: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{path}: expected an integer, got {json.dumps(value)}")
    if minimum is not None and value < minimum:
        raise DocumentError(f"{path}: must be at least {minimum}, got {value}")
    return value


def _pairs(obj: dict, key: str, n: int, what: str) -> list[tuple[int, int]]:
    if key not in obj:
        raise DocumentError(f"{key}: missing field")
    items = obj[key]
    if not isinstance(items, list):
        raise DocumentError(f"{key}: expected a list of [{what}] pairs")
    pairs, seen = [], set()
    for k, item in enumerate(items):
        path = f"{key}[{k}]"
        if not isinstance(item, list) or len(item) != 2:
            raise DocumentError(f"{path}: expected a 2-element list, got {json.dumps(item)}")
        pair = (_int(item[0], f"{path}[0]"), _int(item[1], f"{path}[1]"))
        for idx, x in enumerate(pair):
            if not 1 <= x <= n:
                raise DocumentError(f"{path}[{idx}]: {x} is outside [1,{n}]")
        if pair in seen:
            raise DocumentError(f"{path}: duplicate entry {list(pair)}")
        seen.add(pair)
        pairs.append(pair)
    return pairs


def _check_keys(obj, allowed: set[str]):
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise DocumentError(f"{unknown[0]}: unknown field")


def parse_digraph(obj) -> LabeledDigraph:
    _check_keys(obj, {"n", "arcs"})
    if "n" not in obj:
        raise DocumentError("n: missing field")
    n = _int(obj["n"], "n", minimum=1)
    try:
        return LabeledDigraph(n, tuple(_pairs(obj, "arcs", n, "u, v")))
    except DigraphError as exc:
        raise DocumentError(f"arcs: {exc}") from None


def parse_placement(obj) -> PlacementDocument:
    _check_keys(obj, {"n", "queens", "modular"})
    if "n" not in obj:
        raise DocumentError("n: missing field")
    n = _int(obj["n"], "n", minimum=1)
    modular = obj.get("modular")
    if modular is not None and not isinstance(modular, bool):
        raise DocumentError(f"modular: expected true or false, got {json.dumps(modular)}")
    return PlacementDocument(Placement(n, tuple(_pairs(obj, "queens", n, "row, column"))), modular)


def load_digraph(source: Union[str, Path]) -> LabeledDigraph:
    return parse_digraph(_read(source))


def load_placement(source: Union[str, Path]) -> PlacementDocument:
    return parse_placement(_read(source))


def loads_digraph(text: str) -> LabeledDigraph:
    return parse_digraph(_parse_json(text, "<string>"))


def loads_placement(text: str) -> PlacementDocument:
    return parse_placement(_parse_json(text, "<string>"))


def load_any(source: Union[str, Path]) -> Union[LabeledDigraph, PlacementDocument]:
    """Load a digraph or a placement document, told apart by its fields."""
    obj = _read(source)
    if isinstance(obj, dict) and "queens" in obj:
        return parse_placement(obj)
    return parse_digraph(obj)


def load_assignment(source: Union[str, Path], D: LabeledDigraph, gamma: Sequence[LabeledDigraph]) -> FamilyAssignment:
    obj = _read(source)
    _check_keys(obj, {"arcs"})
    entries = obj.get("arcs")
    if not isinstance(entries, list):
        raise DocumentError("arcs: expected a list of {\"arc\": [u, v], \"index\": i} objects")
    assign = {}
    for k, entry in enumerate(entries):
        path = f"arcs[{k}]"
        if not isinstance(entry, dict) or set(entry) != {"arc", "index"}:
            raise DocumentError(f"{path}: expected an object with fields \"arc\" and \"index\"")
        arc = entry["arc"]
        if not isinstance(arc, list) or len(arc) != 2:
            raise DocumentError(f"{path}.arc: expected a 2-element list")
        arc = (_int(arc[0], f"{path}.arc[0]"), _int(arc[1], f"{path}.arc[1]"))
        if arc in assign:
            raise DocumentError(f"{path}.arc: arc {list(arc)} assigned twice")
        assign[arc] = _int(entry["index"], f"{path}.index", minimum=0)
    try:
        fa = FamilyAssignment(tuple(gamma), assign)
        fa.validate_for(D)
    except ProductError as exc:
        raise DocumentError(f"arcs: {exc}") from None
    return fa


def _pair_list(pairs) -> str:
    return "[" + ", ".join(f"[{a}, {b}]" for a, b in pairs) + "]"


def dump_digraph(D: LabeledDigraph) -> str:
    return f'{{\n  "n": {D.n},\n  "arcs": {_pair_list(D.arcs)}\n}}\n'


def dump_placement(P: Placement, modular: Optional[bool] = None) -> str:
    lines = [f'  "n": {P.n}', f'  "queens": {_pair_list(P.queens)}']
    if modular is not None:
        lines.append(f'  "modular": {json.dumps(modular)}')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump_assignment(fa: FamilyAssignment) -> str:
    rows = [f'    {{"arc": [{u}, {v}], "index": {idx}}}' for (u, v), idx in sorted(fa.assign.items())]
    return '{\n  "arcs": [\n' + ",\n".join(rows) + "\n  ]\n}\n"


def save_digraph(D: LabeledDigraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_digraph(D))


def save_placement(P: Placement, path: Union[str, Path], modular: Optional[bool] = None) -> None:
    Path(path).write_text(dump_placement(P, modular))


def render_ascii(P: Placement) -> str:
    """Row 1 at the top, 'Q' for a queen and '.' for an empty cell."""
    occupied = set(P.queens)
    return "\n".join(
        "".join("Q" if (r, c) in occupied else "." for c in range(1, P.n + 1))
        for r in range(1, P.n + 1)
    )
