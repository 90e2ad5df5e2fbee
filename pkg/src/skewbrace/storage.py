"""JSON serialization for groups, braces and solutions.

Schemas (identity / labels are index 0 everywhere):
  group:    {"order": n, "table": [[...]]}
  brace:    {"order": n, "add": [[...]], "mul": [[...]]}   (optional "labels")
  solution: {"size": n, "lambda": [[...]], "rho": [[...]]}

The lambda table of a brace is never serialized; it is recomputed on load.
"""

from __future__ import annotations

import json

from .braces import SkewBrace, build_brace
from .errors import SchemaError
from .groups import FiniteGroup, build_group
from .ybe import SetSolution, build_solution


def _require_matrix(doc: dict, field: str, size_field: str) -> list[list[int]]:
    if field not in doc:
        raise SchemaError(field)
    rows = doc[field]
    if not isinstance(rows, list) or not rows:
        raise SchemaError(field, "expected a non-empty list of rows")
    n = doc.get(size_field)
    if not isinstance(n, int):
        raise SchemaError(size_field, "expected an integer")
    if len(rows) != n:
        raise SchemaError(field, f"expected {n} rows, found {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(field, f"row {i} is not a list of length {n}")
        try:
            out.append([int(v) for v in row])
        except (TypeError, ValueError):
            raise SchemaError(field, f"row {i} has a non-integer entry")
    return out


def load_group(path: str) -> FiniteGroup:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise SchemaError("document", "expected a JSON object")
    return build_group(_require_matrix(doc, "table", "order"))


def save_group(G: FiniteGroup, path: str) -> None:
    with open(path, "w") as fh:
        json.dump({"order": G.order, "table": [list(r) for r in G.table]}, fh)
        fh.write("\n")


def load_brace(path: str) -> SkewBrace:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise SchemaError("document", "expected a JSON object")
    add = _require_matrix(doc, "add", "order")
    mul = _require_matrix(doc, "mul", "order")
    return build_brace(add, mul)


def save_brace(B: SkewBrace, path: str, labels: list[str] | None = None) -> None:
    doc = {
        "order": B.order,
        "add": [list(r) for r in B.add.table],
        "mul": [list(r) for r in B.mul.table],
    }
    if labels is not None:
        doc["labels"] = list(labels)
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_solution(path: str) -> SetSolution:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise SchemaError("document", "expected a JSON object")
    lam = _require_matrix(doc, "lambda", "size")
    rho = _require_matrix(doc, "rho", "size")
    return build_solution(lam, rho)


def save_solution(S: SetSolution, path: str) -> None:
    doc = {
        "size": S.size,
        "lambda": [list(r) for r in S.lambda_perms],
        "rho": [list(r) for r in S.rho_perms],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def sniff_kind(path: str) -> str:
    """Classify an artifact file by its keys: group, brace or solution."""
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise SchemaError("document", "expected a JSON object")
    if "add" in doc and "mul" in doc:
        return "brace"
    if "table" in doc:
        return "group"
    if "lambda" in doc and "rho" in doc:
        return "solution"
    raise SchemaError("document", "unrecognized artifact: no known key set")
