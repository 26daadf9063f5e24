"""JSON document formats for quivers and subset families, plus the compact
per-vertex digit shorthand ("2;23;12" for dims up to 9).
"""

from __future__ import annotations

import json
import os
from typing import Sequence

from .core import Quiver, check_dimension_vector, check_family
from .errors import DomainError, ParseError


def _load_json(text: str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid {what} document: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError(f"{what} document must be a JSON object")
    return doc


def parse_quiver_document(text: str) -> tuple[Quiver, dict[str, int] | None]:
    """Parse {"vertices": [...], "arrows": [{"from":..,"to":..}, ...],
    "dims": {...}?} into a quiver and an optional dimension vector."""
    doc = _load_json(text, "quiver")
    if "vertices" not in doc or "arrows" not in doc:
        raise ParseError("quiver document needs 'vertices' and 'arrows' fields")
    vertices = [str(v) for v in doc["vertices"]]
    arrows = []
    for i, arrow in enumerate(doc["arrows"]):
        if not isinstance(arrow, dict) or "from" not in arrow or "to" not in arrow:
            raise ParseError(f"arrow #{i} must be an object with 'from' and 'to'")
        arrows.append((str(arrow["from"]), str(arrow["to"])))
    try:
        q = Quiver(vertices, arrows)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    dims = None
    if doc.get("dims") is not None:
        try:
            dims = check_dimension_vector(q, {str(k): v for k, v in doc["dims"].items()}, "dims")
        except (DomainError, AttributeError) as exc:
            raise ParseError(f"invalid 'dims' field: {exc}") from None
    return q, dims


def quiver_document(q: Quiver, dims: dict[str, int] | None = None) -> dict:
    doc: dict = {
        "vertices": list(q.vertices),
        "arrows": [{"from": s, "to": t} for s, t in q.arrows],
    }
    if dims is not None:
        doc["dims"] = {v: dims[v] for v in q.vertices}
    return doc


def parse_family_document(text: str, q: Quiver) -> tuple[dict, dict | None]:
    """Parse {"J": {vertex: [ints]}, "K": {...}?} against a quiver."""
    doc = _load_json(text, "family")
    if "J" not in doc:
        raise ParseError("family document needs a 'J' field")

    def fam(field):
        raw = doc[field]
        if not isinstance(raw, dict):
            raise ParseError(f"'{field}' must map vertices to integer lists")
        try:
            return check_family(q, {str(k): v for k, v in raw.items()}, field)
        except DomainError as exc:
            raise ParseError(str(exc)) from None

    j = fam("J")
    k = fam("K") if doc.get("K") is not None else None
    if k is not None:
        for v in q.vertices:
            if not set(k[v]) <= set(j[v]):
                raise ParseError(f"K[{v!r}] is not contained in J[{v!r}]")
    return j, k


def family_document(j: dict, k: dict | None = None) -> dict:
    doc: dict = {"J": {v: list(j[v]) for v in j}}
    if k is not None:
        doc["K"] = {v: list(k[v]) for v in k}
    return doc


def parse_shorthand(text: str, vertices: Sequence[str]) -> dict[str, tuple[int, ...]]:
    """Per-vertex digit strings separated by semicolons: "2;23;12" means
    {2}, {2,3}, {1,2}.  An empty component is the empty set.  Only usable
    while every element is a single digit.
    """
    parts = text.split(";")
    if len(parts) != len(vertices):
        raise ParseError(f"shorthand has {len(parts)} components, quiver has {len(vertices)} vertices")
    fam = {}
    for v, part in zip(vertices, parts):
        part = part.strip()
        if part and not part.isdigit():
            raise ParseError(f"shorthand component {part!r} is not a digit string")
        elems = tuple(sorted(int(c) for c in part))
        if len(set(elems)) != len(elems) or any(e == 0 for e in elems):
            raise ParseError(f"shorthand component {part!r} must list distinct nonzero digits")
        fam[v] = elems
    return fam


def family_shorthand(fam: dict, vertices: Sequence[str]) -> str:
    parts = []
    for v in vertices:
        if any(e > 9 for e in fam[v]):
            raise DomainError("shorthand only covers elements up to 9")
        parts.append("".join(str(e) for e in sorted(fam[v])))
    return ";".join(parts)


def read_family_argument(arg: str, q: Quiver, dims: dict[str, int] | None):
    """A family CLI argument is either a path to a JSON family document or an
    inline K shorthand (then J is the standard ambient from the dims)."""
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return parse_family_document(fh.read(), q)
    if ";" in arg or arg.strip().isdigit() or arg.strip() == "":
        if dims is None:
            raise ParseError("inline family shorthand needs dims on the quiver document or --dims")
        j = {v: tuple(range(1, dims[v] + 1)) for v in q.vertices}
        k = parse_shorthand(arg, q.vertices)
        for v in q.vertices:
            if not set(k[v]) <= set(j[v]):
                raise ParseError(f"shorthand K[{v!r}] = {k[v]} is not inside 1..{dims[v]}")
        return j, k
    raise ParseError(f"family argument {arg!r} is neither an existing file nor a shorthand")
