"""Reading and writing posets and polynomials.

Poset files are JSON in one of two shapes::

    {"facets": [[1, 2], [1, 3], [2, 3]]}
    {"elements": ["0", "a", "b"], "ranks": {"0": 0, "a": 1, "b": 1},
     "covers": [["0", "a"], ["0", "b"]]}

The first builds the face poset of a pure complex; the second describes any
graded poset through its cover relations.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .poset import GradedPoset, face_poset

__all__ = ["PosetFormatError", "parse_poset", "load_poset", "poset_to_json", "poly_list"]


class PosetFormatError(ValueError):
    """Malformed poset file.  ``location`` is ``line:col`` or a JSON path."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _vertex(v: Any, where: str):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise PosetFormatError(f"vertex must be an integer or string, got {v!r}", where)
    return v


def _from_facets(facets: Any) -> GradedPoset:
    if not isinstance(facets, list):
        raise PosetFormatError("'facets' must be a list", "$.facets")
    if not facets:
        raise PosetFormatError("facet list is empty", "$.facets")
    clean = []
    for i, f in enumerate(facets):
        where = f"$.facets[{i}]"
        if not isinstance(f, list):
            raise PosetFormatError("facet must be a list of vertices", where)
        verts = [_vertex(v, f"{where}[{j}]") for j, v in enumerate(f)]
        if len(set(verts)) != len(verts):
            raise PosetFormatError("facet repeats a vertex", where)
        if len({type(v) for v in verts}) > 1:
            raise PosetFormatError("facet mixes integer and string vertices", where)
        clean.append(verts)
    try:
        return face_poset(clean)
    except ValueError as exc:
        raise PosetFormatError(str(exc), "$.facets") from None


def _from_covers(doc: dict) -> GradedPoset:
    for key in ("elements", "ranks", "covers"):
        if key not in doc:
            raise PosetFormatError(f"missing key {key!r}", "$")
    elements, ranks, covers = doc["elements"], doc["ranks"], doc["covers"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise PosetFormatError("'elements' must be a list of strings", "$.elements")
    if not isinstance(ranks, dict):
        raise PosetFormatError("'ranks' must map element ids to integers", "$.ranks")
    for e in elements:
        r = ranks.get(e)
        if isinstance(r, bool) or not isinstance(r, int):
            raise PosetFormatError(f"element {e!r} needs an integer rank", f"$.ranks.{e}")
    extra = set(ranks) - set(elements)
    if extra:
        raise PosetFormatError(f"ranks given for unknown elements {sorted(extra)}", "$.ranks")
    if not isinstance(covers, list):
        raise PosetFormatError("'covers' must be a list of pairs", "$.covers")
    pairs = []
    for i, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise PosetFormatError("cover must be a pair of element ids", f"$.covers[{i}]")
        pairs.append((c[0], c[1]))
    return GradedPoset(tuple(elements), {e: ranks[e] for e in elements}, frozenset(pairs))


def parse_poset(text: str) -> GradedPoset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetFormatError(exc.msg, f"{exc.lineno}:{exc.colno}") from None
    if not isinstance(doc, dict):
        raise PosetFormatError("top level must be a JSON object", "$")
    if "facets" in doc:
        return _from_facets(doc["facets"])
    return _from_covers(doc)


def load_poset(path: str | Path) -> GradedPoset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise PosetFormatError(f"not UTF-8 ({exc.reason})", str(path)) from None
    return parse_poset(text)


def poset_to_json(poset: GradedPoset) -> str:
    doc = {
        "elements": list(poset.elements),
        "ranks": {e: poset.rank[e] for e in poset.elements},
        "covers": sorted([a, b] for a, b in poset.covers),
    }
    return json.dumps(doc, sort_keys=True)


def poly_list(poly) -> list[int]:
    return list(poly.coeffs)
