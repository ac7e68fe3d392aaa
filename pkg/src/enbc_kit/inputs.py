"""JSON arrangement files and the bundled catalog."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .complexes import OrderSpec
from .errors import BadEntry, InputError, MalformedJson
from .fields import ScalarField, field_from_json
from .matroid import Matroid, RepMatrix, matroid_from_matrix

CATALOG = ("u22", "u23", "u24", "u34", "k4", "k4_reversed")


@dataclass
class ArrangementInput:
    name: str
    field: ScalarField
    matrix: RepMatrix
    order: OrderSpec | None = None

    def matroid(self) -> Matroid:
        return matroid_from_matrix(self.matrix)

    def order_or_natural(self) -> OrderSpec:
        return self.order if self.order is not None else OrderSpec.natural(self.matrix.ncols)


def parse_input(data: bytes | str, default_name: str = "arrangement") -> ArrangementInput:
    """Validate an arrangement JSON document.

    Loops and parallel columns are rejected here, so a successful parse
    always yields a simple matroid.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJson("input is not UTF-8: %s" % exc) from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJson(str(exc)) from None
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise MalformedJson("expected an object with a \"matrix\" key")
    field = field_from_json(obj.get("field", "Q"))
    rows = obj["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise BadEntry("matrix must be a list of rows")
    for r in rows:
        for v in r:
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise BadEntry("matrix entries must be strings or integers, got %r" % (v,))
    matrix = RepMatrix.from_rows([[str(v) for v in r] for r in rows], field)
    order = None
    if obj.get("order") is not None:
        perm = obj["order"]
        if not isinstance(perm, list) or not all(isinstance(i, int) for i in perm):
            raise BadEntry("order must be a list of integers")
        if len(perm) != matrix.ncols:
            raise InputError("order has %d entries, matrix has %d columns" % (len(perm), matrix.ncols))
        order = OrderSpec(tuple(perm))
    name = obj.get("name", default_name)
    # surface loop / parallel errors at parse time
    matroid_from_matrix(matrix)
    return ArrangementInput(str(name), field, matrix, order)


def bundled_path(name: str):
    stem = name[:-5] if name.endswith(".json") else name
    res = resources.files("enbc_kit") / "data" / (stem + ".json")
    return res if res.is_file() else None


def load_input(path: str) -> ArrangementInput:
    """Read a file path, falling back to a bundled catalog entry by name."""
    p = Path(path)
    if p.is_file():
        return parse_input(p.read_bytes(), default_name=p.stem)
    res = bundled_path(p.name)
    if res is None:
        raise InputError("no such file or bundled arrangement: %s" % path)
    return parse_input(res.read_bytes(), default_name=p.stem)


def catalog() -> list[ArrangementInput]:
    return [load_input(name) for name in CATALOG]
