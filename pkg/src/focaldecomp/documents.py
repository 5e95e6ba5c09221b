"""JSON document formats shared by every CLI command.

Mass document::

    {"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.5}, ...]}

Weight documents replace ``masses`` with ``weights`` (entries ``{"set", "weight"}``,
only sets whose weight differs from 1) and add ``"mode"``. Table documents use
the same layout with the field name ``q`` or ``b`` for both the list and the
per-entry value.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .core import Frame, MassFunction, Subset, canonical_order, validate_mass
from .errors import MalformedDocument


def _frame(doc: Mapping[str, Any]) -> Frame:
    labels = doc.get("frame") if isinstance(doc, Mapping) else None
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise MalformedDocument("'frame' must be an array of label strings")
    return Frame(tuple(labels))


def _entries(doc: Mapping[str, Any], list_field: str, value_field: str, frame: Frame):
    rows = doc.get(list_field)
    if not isinstance(rows, list):
        raise MalformedDocument(f"'{list_field}' must be an array")
    out = []
    for row in rows:
        try:
            labels, value = row["set"], row[value_field]
        except (KeyError, TypeError):
            raise MalformedDocument(f"entries need 'set' and '{value_field}'") from None
        if not isinstance(labels, list) or not isinstance(value, (int, float)):
            raise MalformedDocument(f"bad entry {row!r}")
        out.append((frame.subset(labels), float(value)))
    return out


def _rows(frame: Frame, values: Mapping[Subset, float], value_field: str) -> list[dict]:
    return [{"set": frame.labels_of(a), value_field: values[a]} for a in canonical_order(values)]


def mass_from_document(doc: Mapping[str, Any]) -> MassFunction:
    frame = _frame(doc)
    return validate_mass(frame, _entries(doc, "masses", "mass", frame))


def mass_to_document(m: MassFunction, metadata: Mapping[str, Any] | None = None) -> dict:
    doc: dict[str, Any] = {"frame": list(m.frame.labels)}
    if metadata:
        doc["metadata"] = dict(metadata)
    doc["masses"] = _rows(m.frame, dict(m.items()), "mass")
    return doc


def weights_to_document(w, extra: Mapping[str, Any] | None = None) -> dict:
    values = {a: v for a, v in w.items() if v != 1.0}
    doc: dict[str, Any] = {"frame": list(w.frame.labels), "mode": w.mode}
    if extra:
        doc.update(extra)
    doc["weights"] = _rows(w.frame, values, "weight")
    return doc


def weights_from_document(doc: Mapping[str, Any]):
    from .decomposition import WeightFunction

    frame = _frame(doc)
    mode = doc.get("mode", "conjunctive")
    if mode not in ("conjunctive", "disjunctive"):
        raise MalformedDocument(f"unknown weight mode {mode!r}")
    entries = _entries(doc, "weights", "weight", frame)
    if len({a for a, _ in entries}) != len(entries):
        raise MalformedDocument("duplicate set in weight document")
    if any(v <= 0.0 for _, v in entries):
        raise MalformedDocument("weights must be strictly positive")
    return WeightFunction(frame, mode, dict(entries))


def table_to_document(table, kind: str) -> dict:
    return {"frame": list(table.frame.labels), kind: _rows(table.frame, dict(table.items()), kind)}


def table_from_document(doc: Mapping[str, Any]):
    from .transforms import CommonalityTable, ImplicabilityTable

    kind = "q" if "q" in doc else "b" if "b" in doc else None
    if kind is None:
        raise MalformedDocument("table document needs a 'q' or 'b' field")
    frame = _frame(doc)
    values = dict(_entries(doc, kind, kind, frame))
    cls = CommonalityTable if kind == "q" else ImplicabilityTable
    return cls(frame, values)


def load_json(path) -> Any:
    try:
        if path in (None, "-"):
            import sys

            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "dumps",
    "load_json",
    "mass_from_document",
    "mass_to_document",
    "table_from_document",
    "table_to_document",
    "weights_from_document",
    "weights_to_document",
]
