"""Input validation and serialization for the documented file formats.

Formats (all JSON unless noted):
  complex     {"top_simplices": [[0,1,2], ...]}
  signal      {"dim": n, "values": [...]}
  filter      {"dim": n, "alpha0": x, "down": [...], "up": [...]}
  weights     {"0": [...], "1": [...]}  (dimension -> positive diagonal)
  sheaf       {"stalks": {"[0]": 3, ...}, "restrictions":
                 [{"face": [0], "coface": [0,1], "matrix": [[...]]}, ...]}
  assignment  {"dim": n, "blocks": [[...], ...]}  (canonical simplex order)
  matrix CSV  header row of column labels, first column of row labels,
              vertex labels joined by "-"

Unknown fields are rejected everywhere.
"""

from __future__ import annotations

import io as _io
import json
import csv
from typing import Any

import numpy as np

from .chains import Cochain, SparseMatrix
from .complex import Simplex, SimplicialComplex, build_complex
from .errors import FormatError, HodgekitError
from .filters import FilterSpec
from .hodge import InnerProductWeights
from .sheaf import Assignment, Sheaf


def _require_keys(obj: dict, required: set[str], what: str, optional: set[str] = frozenset()) -> None:
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    missing = required - obj.keys()
    if missing:
        raise FormatError(f"{what} is missing fields: {sorted(missing)}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise FormatError(f"{what} has unknown fields: {sorted(unknown)}")


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise FormatError(f"{what} must be a list of integers")
    return value


def _float_list(value: Any, what: str) -> list[float]:
    if not isinstance(value, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        raise FormatError(f"{what} must be a list of numbers")
    return [float(v) for v in value]


def parse_complex(obj: Any) -> SimplicialComplex:
    _require_keys(obj, {"top_simplices"}, "complex file")
    tops = obj["top_simplices"]
    if not isinstance(tops, list) or not tops:
        raise FormatError('"top_simplices" must be a non-empty list')
    for i, entry in enumerate(tops):
        _int_list(entry, f"top_simplices[{i}]")
    try:
        return build_complex(tops)
    except HodgekitError as exc:
        raise FormatError(f"invalid complex: {exc}") from exc


def complex_to_obj(top_simplices: list[list[int]]) -> dict:
    return {"top_simplices": top_simplices}


def parse_signal(obj: Any) -> Cochain:
    _require_keys(obj, {"dim", "values"}, "signal file")
    if not isinstance(obj["dim"], int) or obj["dim"] < 0:
        raise FormatError('"dim" must be a non-negative integer')
    values = _float_list(obj["values"], '"values"')
    return Cochain(obj["dim"], np.array(values))


def signal_to_obj(x: Cochain) -> dict:
    return {"dim": x.dimension, "values": [float(v) for v in x.values]}


def parse_filter(obj: Any) -> FilterSpec:
    _require_keys(obj, {"dim", "alpha0", "down", "up"}, "filter file")
    if not isinstance(obj["dim"], int) or obj["dim"] < 0:
        raise FormatError('"dim" must be a non-negative integer')
    if not isinstance(obj["alpha0"], (int, float)) or isinstance(obj["alpha0"], bool):
        raise FormatError('"alpha0" must be a number')
    down = _float_list(obj["down"], '"down"')
    up = _float_list(obj["up"], '"up"')
    try:
        return FilterSpec(obj["dim"], float(obj["alpha0"]), tuple(down), tuple(up))
    except ValueError as exc:
        raise FormatError(f"invalid filter: {exc}") from exc


def parse_weights(obj: Any) -> InnerProductWeights:
    if not isinstance(obj, dict):
        raise FormatError("weights file must be a JSON object")
    table = {}
    for key, values in obj.items():
        try:
            dim = int(key)
        except (TypeError, ValueError):
            raise FormatError(f"weights key {key!r} is not a dimension") from None
        vec = _float_list(values, f"weights[{key}]")
        if any(v <= 0 for v in vec):
            raise FormatError(f"weights[{key}] must be strictly positive")
        table[dim] = vec
    return InnerProductWeights(table)


def _parse_simplex_key(key: str) -> Simplex:
    try:
        vertices = json.loads(key)
    except json.JSONDecodeError:
        raise FormatError(f"stalk key {key!r} is not a JSON vertex list") from None
    _int_list(vertices, f"stalk key {key!r}")
    try:
        return Simplex(tuple(vertices))
    except HodgekitError as exc:
        raise FormatError(f"stalk key {key!r}: {exc}") from exc


def parse_sheaf(obj: Any, c: SimplicialComplex) -> Sheaf:
    _require_keys(obj, {"stalks", "restrictions"}, "sheaf file")
    if not isinstance(obj["stalks"], dict):
        raise FormatError('"stalks" must be an object')
    stalks = {}
    for key, dim in obj["stalks"].items():
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise FormatError(f"stalk dimension for {key!r} must be a non-negative integer")
        stalks[_parse_simplex_key(key)] = dim
    if not isinstance(obj["restrictions"], list):
        raise FormatError('"restrictions" must be a list')
    maps = {}
    for i, entry in enumerate(obj["restrictions"]):
        _require_keys(entry, {"face", "coface", "matrix"}, f"restrictions[{i}]")
        face = Simplex(tuple(_int_list(entry["face"], f"restrictions[{i}].face")))
        coface = Simplex(tuple(_int_list(entry["coface"], f"restrictions[{i}].coface")))
        matrix = entry["matrix"]
        if not isinstance(matrix, list):
            raise FormatError(f"restrictions[{i}].matrix must be a list of rows")
        rows = [_float_list(row, f"restrictions[{i}].matrix row") for row in matrix]
        maps[(face, coface)] = np.array(rows, dtype=np.float64) if rows else np.zeros((0, 0))
    try:
        return Sheaf(c, stalks, maps)
    except HodgekitError:
        raise
    except ValueError as exc:
        raise FormatError(f"invalid sheaf: {exc}") from exc


def parse_assignment(obj: Any, sh: Sheaf) -> Assignment:
    _require_keys(obj, {"dim", "blocks"}, "assignment file")
    n = obj["dim"]
    if not isinstance(n, int) or n < 0:
        raise FormatError('"dim" must be a non-negative integer')
    if not isinstance(obj["blocks"], list):
        raise FormatError('"blocks" must be a list')
    simplices = sh.complex.simplices(n)
    if len(obj["blocks"]) != len(simplices):
        raise FormatError(
            f"expected {len(simplices)} blocks for dimension {n}, "
            f"got {len(obj['blocks'])}"
        )
    stacked: list[float] = []
    for s, block in zip(simplices, obj["blocks"]):
        vec = _float_list(block, f"block for {s}")
        if len(vec) != sh.stalk_dim(s):
            raise FormatError(
                f"block for {s} has length {len(vec)}, stalk is {sh.stalk_dim(s)}"
            )
        stacked.extend(vec)
    return Assignment(n, np.array(stacked))


def assignment_to_obj(x: Assignment, sh: Sheaf) -> dict:
    offsets = sh.offsets(x.dimension)
    blocks = [
        [float(v) for v in x.values[offsets[i] : offsets[i + 1]]]
        for i in range(len(offsets) - 1)
    ]
    return {"dim": x.dimension, "blocks": blocks}


def simplex_label(s: Simplex) -> str:
    return "-".join(str(v) for v in s.vertices)


def matrix_to_csv(
    m: SparseMatrix, row_labels: list[str], col_labels: list[str]
) -> str:
    """Dense CSV dump: column labels on the header row, row labels first."""
    if len(row_labels) != m.rows or len(col_labels) != m.cols:
        raise FormatError("label counts do not match the matrix shape")
    dense = m.toarray()
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([""] + list(col_labels))
    for label, row in zip(row_labels, dense):
        writer.writerow([label] + [repr(float(v)) for v in row])
    return buffer.getvalue()


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
