"""Algebra file format: a JSON document carrying the full 4-tuple.

    {
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "bracket": [[["0", ...], ...], ...],   # bracket[i][j][k] = e_k coeff of [e_i, e_j]
      "alpha": [["1", ...], ...],            # column convention: alpha(e_j) = sum_i alpha[i][j] e_i
      "beta": [...]
    }

Rationals are strings matching -?[0-9]+(/[1-9][0-9]*)?, never floats.
Ordinary Lie algebras are the alpha = beta = identity special case, so one
format serves both. save() emits a canonical layout (reduced rationals,
fixed key order, one grid row per line) and save o load is the identity on
canonical files.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import BiHomAlgebra, StructureTensor
from .errors import DimensionMismatch, ParseError
from .exactlin import MatrixQ

RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?$")


def parse_rational(text, where: str) -> Fraction:
    if not isinstance(text, str) or not RATIONAL_RE.match(text):
        raise ParseError(f"{where}: {text!r} is not a rational of the form p or p/q")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return str(q)


def _require_list(value, length, where: str):
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list")
    if length is not None and len(value) != length:
        raise DimensionMismatch(f"{where}: expected {length} entries, found {len(value)}")
    return value


def _parse_matrix(value, dim: int, where: str) -> MatrixQ:
    rows = _require_list(value, dim, where)
    parsed = []
    for i, row in enumerate(rows):
        row = _require_list(row, dim, f"{where}[{i}]")
        parsed.append([parse_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return MatrixQ(parsed)


def algebra_from_dict(doc) -> BiHomAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    expected_keys = {"dim", "basis", "bracket", "alpha", "beta"}
    missing = expected_keys - doc.keys()
    extra = doc.keys() - expected_keys
    if missing:
        raise ParseError(f"missing fields: {', '.join(sorted(missing))}")
    if extra:
        raise ParseError(f"unexpected fields: {', '.join(sorted(extra))}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim: expected a positive integer")
    basis = _require_list(doc["basis"], dim, "basis")
    for i, name in enumerate(basis):
        if not isinstance(name, str):
            raise ParseError(f"basis[{i}]: expected a string label")
    planes = _require_list(doc["bracket"], dim, "bracket")
    grid = []
    for i, plane in enumerate(planes):
        plane = _require_list(plane, dim, f"bracket[{i}]")
        rows = []
        for j, row in enumerate(plane):
            row = _require_list(row, dim, f"bracket[{i}][{j}]")
            rows.append([parse_rational(x, f"bracket[{i}][{j}][{k}]")
                         for k, x in enumerate(row)])
        grid.append(rows)
    return BiHomAlgebra(
        dim=dim,
        tensor=StructureTensor(grid),
        alpha=_parse_matrix(doc["alpha"], dim, "alpha"),
        beta=_parse_matrix(doc["beta"], dim, "beta"),
        basis_names=tuple(basis),
    )


def _matrix_rows(m: MatrixQ) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.entries]


def algebra_to_dict(a: BiHomAlgebra) -> dict:
    return {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "bracket": [[[format_rational(x) for x in a.tensor.bracket_basis(i, j)]
                     for j in range(a.dim)] for i in range(a.dim)],
        "alpha": _matrix_rows(a.alpha),
        "beta": _matrix_rows(a.beta),
    }


def dumps_algebra(a: BiHomAlgebra) -> str:
    """Canonical text form: fixed key order, one grid row per line."""
    doc = algebra_to_dict(a)
    lines = ["{"]
    lines.append(f'  "dim": {doc["dim"]},')
    lines.append(f'  "basis": {json.dumps(doc["basis"])},')
    lines.append('  "bracket": [')
    for i, plane in enumerate(doc["bracket"]):
        lines.append("    [")
        for j, row in enumerate(plane):
            comma = "," if j + 1 < len(plane) else ""
            lines.append(f"      {json.dumps(row)}{comma}")
        comma = "," if i + 1 < len(doc["bracket"]) else ""
        lines.append(f"    ]{comma}")
    lines.append("  ],")
    for key in ("alpha", "beta"):
        lines.append(f'  "{key}": [')
        for i, row in enumerate(doc[key]):
            comma = "," if i + 1 < len(doc[key]) else ""
            lines.append(f"    {json.dumps(row)}{comma}")
        close = "," if key == "alpha" else ""
        lines.append(f"  ]{close}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_algebra(text: str) -> BiHomAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from exc
    return algebra_from_dict(doc)


def load(path) -> BiHomAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_algebra(text)


def save(a: BiHomAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_algebra(a))


def load_matrix(path) -> MatrixQ:
    """A bare matrix file: a JSON grid of rational strings."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from exc
    rows = _require_list(doc, None, "matrix")
    if not rows:
        raise ParseError("matrix: expected at least one row")
    width = None
    parsed = []
    for i, row in enumerate(rows):
        row = _require_list(row, width, f"matrix[{i}]")
        width = len(row)
        parsed.append([parse_rational(x, f"matrix[{i}][{j}]") for j, x in enumerate(row)])
    return MatrixQ(parsed)
