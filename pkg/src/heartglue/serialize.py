"""JSON documents for perversities, upper sets, Ext tables, objects and manifests.

Every file carries a header {"format": "heartglue", "version": "1", "kind": ...}.
Integers are plain JSON numbers and the infinities are the strings
"+inf" / "-inf".  Output is written with sorted keys so that identical
inputs give byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .model import BigradedObject, QuiverObject
from .perversity import MINUS_INF, PLUS_INF, Perversity
from .sequences import INF, NEG_INF, QuasiPeriodic, Tail, ext_from_json, ext_to_json, is_finite
from .slicing import BaricTable, HeartTable
from .upperset import UpperSet2D
from .zposet import DomainError

FORMAT = "heartglue"
VERSION = "1"
KINDS = ("perversity", "upperset", "ext-table", "objects", "manifest")


class FormatError(DomainError):
    """Malformed input document; the message names the offending field."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _plain(x):
    """Tuples to lists, infinities to strings, recursively."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if x is INF or x is NEG_INF:
        return ext_to_json(x)
    return x


def document(kind: str, payload: dict) -> dict:
    if kind not in KINDS:
        raise ValueError(kind)
    out = {"format": FORMAT, "version": VERSION, "kind": kind}
    out.update(_plain(payload))
    return out


def check_header(doc: Any, kind: str | None = None) -> dict:
    if not isinstance(doc, dict):
        raise FormatError("document: expected a JSON object")
    if doc.get("format") != FORMAT:
        raise FormatError(f"format: expected {FORMAT!r}, got {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise FormatError(f"version: unsupported version {doc.get('version')!r} (expected {VERSION!r})")
    if kind is not None and doc.get("kind") != kind:
        raise FormatError(f"kind: expected {kind!r}, got {doc.get('kind')!r}")
    return doc


def load(path: str | Path, kind: str | None = None) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return check_header(doc, kind)


def _field(doc: dict, name: str, ctx: str):
    if name not in doc:
        raise FormatError(f"{ctx}.{name}: missing")
    return doc[name]


def _int(v, ctx: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{ctx}: expected an integer, got {v!r}")
    return v


def _ext(v, ctx: str):
    try:
        return ext_from_json(v)
    except ValueError as exc:
        raise FormatError(f"{ctx}: {exc}") from None


def _tail_to_json(t: Tail) -> dict:
    return {"T": t.period, "S": t.step}


def _tail_from_json(d, ctx: str) -> Tail:
    if not isinstance(d, dict):
        raise FormatError(f"{ctx}: expected an object with T and S")
    T = _int(_field(d, "T", ctx), f"{ctx}.T")
    S = _int(_field(d, "S", ctx), f"{ctx}.S")
    if T < 1:
        raise FormatError(f"{ctx}.T: period must be >= 1")
    return Tail(T, S)


# -- perversities -------------------------------------------------------------


def perversity_payload(p: Perversity) -> dict:
    if p.infinite:
        return {"infinite": "+inf" if p.infinite > 0 else "-inf"}
    c = p.seq.canonical
    return {
        "anchor": c.start,
        "values": list(c.values),
        "left_tail": _tail_to_json(c.left),
        "right_tail": _tail_to_json(c.right),
    }


def perversity_from_payload(d: dict, ctx: str = "perversity") -> Perversity:
    if "infinite" in d:
        v = d["infinite"]
        if v == "+inf":
            return PLUS_INF
        if v == "-inf":
            return MINUS_INF
        raise FormatError(f"{ctx}.infinite: expected '+inf' or '-inf', got {v!r}")
    anchor = _int(_field(d, "anchor", ctx), f"{ctx}.anchor")
    values = _field(d, "values", ctx)
    if not isinstance(values, list) or not values:
        raise FormatError(f"{ctx}.values: expected a nonempty list of integers")
    values = [_int(v, f"{ctx}.values[{i}]") for i, v in enumerate(values)]
    left = _tail_from_json(d.get("left_tail", {"T": 1, "S": 0}), f"{ctx}.left_tail")
    right = _tail_from_json(d.get("right_tail", {"T": 1, "S": 0}), f"{ctx}.right_tail")
    try:
        return Perversity(anchor, tuple(values), left, right)
    except (DomainError, ValueError) as exc:
        raise FormatError(f"{ctx}: {exc}") from None


# -- upper sets ---------------------------------------------------------------


def upperset_payload(u: UpperSet2D) -> dict:
    c = u.boundary

    def side(t: Tail, v):
        return ext_to_json(v) if not is_finite(v) else _tail_to_json(t)

    return {
        "left": side(c.left, c(c.start)),
        "breakpoints": [[n, ext_to_json(c(n))] for n in range(c.start, c.end + 1)],
        "right": side(c.right, c(c.end)),
    }


def upperset_from_payload(d: dict, ctx: str = "upperset") -> UpperSet2D:
    bps = _field(d, "breakpoints", ctx)
    if not isinstance(bps, list) or not bps:
        raise FormatError(f"{ctx}.breakpoints: expected a nonempty list of [n, b] pairs")
    ns, vals = [], []
    for i, bp in enumerate(bps):
        if not isinstance(bp, list) or len(bp) != 2:
            raise FormatError(f"{ctx}.breakpoints[{i}]: expected [n, b]")
        ns.append(_int(bp[0], f"{ctx}.breakpoints[{i}][0]"))
        vals.append(_ext(bp[1], f"{ctx}.breakpoints[{i}][1]"))
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise FormatError(f"{ctx}.breakpoints: positions must be consecutive integers")

    def side(v, name: str, edge) -> Tail:
        if isinstance(v, str):
            if _ext(v, f"{ctx}.{name}") != edge:
                raise FormatError(f"{ctx}.{name}: {v} does not match the boundary value {ext_to_json(edge)} at the edge")
            return Tail(1, 0)
        return _tail_from_json(v, f"{ctx}.{name}")

    left = side(_field(d, "left", ctx), "left", vals[0])
    right = side(_field(d, "right", ctx), "right", vals[-1])
    try:
        return UpperSet2D(QuasiPeriodic(ns[0], tuple(vals), left, right))
    except (DomainError, ValueError) as exc:
        raise FormatError(f"{ctx}: {exc}") from None


# -- tables -------------------------------------------------------------------


def _default_flag(v, ctx: str) -> bool:
    if v in ("vanish", "vanishes", True):
        return True
    if v in ("nonzero", "nonvanish", False):
        return False
    raise FormatError(f"{ctx}: expected 'vanish' or 'nonzero', got {v!r}")


def table_from_payload(d: dict, ctx: str = "ext-table"):
    labels = _field(d, "labels", ctx)
    if not isinstance(labels, list) or not labels:
        raise FormatError(f"{ctx}.labels: expected a nonempty list of integers")
    labels = [_int(v, f"{ctx}.labels[{i}]") for i, v in enumerate(labels)]
    default = _default_flag(_field(d, "default", ctx), f"{ctx}.default")
    entries = {}
    for i, e in enumerate(d.get("entries", [])):
        if not isinstance(e, list) or len(e) != 4:
            raise FormatError(f"{ctx}.entries[{i}]: expected [phi, psi, n, 'vanish'|'nonzero']")
        key = tuple(_int(v, f"{ctx}.entries[{i}]") for v in e[:3])
        entries[key] = _default_flag(e[3], f"{ctx}.entries[{i}][3]")
    space = d.get("label_space", "heart")
    try:
        if space == "heart":
            return HeartTable(labels, default, entries)
        if space == "baric":
            return BaricTable(labels, default, entries)
    except DomainError as exc:
        raise FormatError(f"{ctx}: {exc}") from None
    raise FormatError(f"{ctx}.label_space: expected 'heart' or 'baric', got {space!r}")


def table_payload(t) -> dict:
    return {
        "label_space": "baric" if isinstance(t, BaricTable) else "heart",
        "labels": list(t.labels),
        "default": "vanish" if t.default_vanishes else "nonzero",
        "entries": [[*k, "vanish" if v else "nonzero"] for k, v in sorted(t.entries.items())],
    }


# -- objects ------------------------------------------------------------------


def bigraded_from_json(v, ctx: str = "object") -> BigradedObject:
    if not isinstance(v, list):
        raise FormatError(f"{ctx}: expected a list of [degree, weight, multiplicity]")
    out = []
    for i, e in enumerate(v):
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise FormatError(f"{ctx}[{i}]: expected [degree, weight] or [degree, weight, multiplicity]")
        vals = [_int(x, f"{ctx}[{i}]") for x in e]
        if len(vals) == 2:
            vals.append(1)
        if vals[2] < 1:
            raise FormatError(f"{ctx}[{i}]: multiplicity must be positive")
        out.append(tuple(vals))
    return BigradedObject(tuple(out))


def bigraded_to_json(x: BigradedObject) -> list:
    return [list(e) for e in x.entries]


def quiver_object_from_json(v, n_vertices: int, ctx: str = "object") -> QuiverObject:
    if not isinstance(v, list):
        raise FormatError(f"{ctx}: expected a list of [[a, b], shift, multiplicity]")
    out = []
    for i, e in enumerate(v):
        if not isinstance(e, list) or len(e) != 3 or not isinstance(e[0], list) or len(e[0]) != 2:
            raise FormatError(f"{ctx}[{i}]: expected [[a, b], shift, multiplicity]")
        a, b = (_int(x, f"{ctx}[{i}][0]") for x in e[0])
        if not 1 <= a <= b <= n_vertices:
            raise FormatError(f"{ctx}[{i}]: interval [{a},{b}] outside A_{n_vertices}")
        out.append(((a, b), _int(e[1], f"{ctx}[{i}][1]"), _int(e[2], f"{ctx}[{i}][2]")))
    try:
        return QuiverObject(n_vertices, tuple(out))
    except DomainError as exc:
        raise FormatError(f"{ctx}: {exc}") from None
