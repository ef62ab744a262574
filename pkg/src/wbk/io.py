"""JSON structure files and canonical serialization.

One object per file, dispatched on "kind": group, semilattice, skew_brace,
dual_weak_brace, strong_semilattice, solution.  Hom keys are "alpha>beta"
with decimal indices.  serialize(load(x)) is the canonical form of x.
"""

from __future__ import annotations

import json

from .braces import DualWeakBrace, SkewBrace, validate_dual_weak_brace, validate_skew_brace
from .catalog import catalog_get
from .compose import StrongSemilatticeSpec, validate_spec
from .errors import ParseError
from .solutions import SolutionTable
from .tables import (
    FiniteGroupTable,
    SemilatticeTable,
    validate_group,
    validate_semilattice,
)


def to_obj(x) -> dict:
    if isinstance(x, FiniteGroupTable):
        return {"kind": "group", "order": x.order, "op": [list(r) for r in x.op]}
    if isinstance(x, SemilatticeTable):
        return {"kind": "semilattice", "size": x.size, "meet": [list(r) for r in x.meet]}
    if isinstance(x, SkewBrace):
        return {
            "kind": "skew_brace",
            "order": x.order,
            "add": [list(r) for r in x.add.op],
            "mul": [list(r) for r in x.mul.op],
        }
    if isinstance(x, DualWeakBrace):
        return {
            "kind": "dual_weak_brace",
            "order": x.order,
            "add": [list(r) for r in x.add.op],
            "mul": [list(r) for r in x.mul.op],
        }
    if isinstance(x, StrongSemilatticeSpec):
        return {
            "kind": "strong_semilattice",
            "semilattice": to_obj(x.y),
            "braces": {str(i): to_obj(b) for i, b in enumerate(x.braces)},
            "homs": {
                f"{a}>{b}": list(f) for (a, b), f in sorted(x.homs.items())
            },
        }
    if isinstance(x, SolutionTable):
        return {
            "kind": "solution",
            "order": x.order,
            "map": [[list(p) for p in row] for row in x.pairs],
        }
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(x) -> str:
    return json.dumps(to_obj(x), indent=2) + "\n"


def _need(obj: dict, key: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}")
    return obj[key]


def from_obj(obj) -> object:
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object")
    kind = _need(obj, "kind")
    if kind == "group":
        return validate_group(_need(obj, "op"))
    if kind == "semilattice":
        return validate_semilattice(_need(obj, "meet"))
    if kind == "skew_brace":
        return validate_skew_brace(_need(obj, "add"), _need(obj, "mul"))
    if kind == "dual_weak_brace":
        return validate_dual_weak_brace(_need(obj, "add"), _need(obj, "mul"))
    if kind == "strong_semilattice":
        y = validate_semilattice(_need(_need(obj, "semilattice"), "meet"))
        braces_obj = _need(obj, "braces")
        braces = []
        for i in range(y.size):
            b = braces_obj.get(str(i))
            if b is None:
                raise ParseError(f"missing brace for semilattice element {i}")
            braces.append((_need(b, "add"), _need(b, "mul")))
        homs = {}
        for key, f in _need(obj, "homs").items():
            try:
                a, b = key.split(">")
                pair = (int(a), int(b))
            except ValueError:
                raise ParseError(f"bad hom key {key!r}") from None
            homs[pair] = tuple(f)
        return validate_spec(y, braces, homs)
    if kind == "solution":
        order = _need(obj, "order")
        table = _need(obj, "map")
        if not isinstance(order, int) or len(table) != order:
            raise ParseError("solution table does not match its declared order")
        pairs = []
        for row in table:
            if len(row) != order:
                raise ParseError("solution table is not square")
            out = []
            for p in row:
                if len(p) != 2 or not all(isinstance(v, int) and 0 <= v < order for v in p):
                    raise ParseError("solution entries must be pairs of indices")
                out.append((p[0], p[1]))
            pairs.append(tuple(out))
        return SolutionTable(order, tuple(pairs))
    raise ParseError(f"unknown kind {kind!r}")


def load(source: str) -> object:
    """Read a structure from a file path or from "catalog:<name>"."""
    if source.startswith("catalog:"):
        return catalog_get(source[len("catalog:"):])
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise ParseError(str(err)) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, f"byte {err.pos} (line {err.lineno}, column {err.colno})") from None
    return from_obj(obj)
