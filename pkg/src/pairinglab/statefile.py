"""JSON state files: explicit [re, im] entry pairs, diffable and
bit-exact on round trip.

Schema: {"dims": [d_A, d_B] or [d], "matrix": [[[re, im], ...], ...],
"label": optional string}.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .linalg import BipartiteState, DensityMatrix


def _entry(value, row: int, col: int) -> complex:
    loc = f"matrix[{row}][{col}]"
    if not (isinstance(value, list) and len(value) == 2):
        raise ParseError(f"{loc}: expected a [re, im] pair", loc)
    re, im = value
    if not all(isinstance(x, (int, float)) for x in (re, im)):
        raise ParseError(f"{loc}: entries must be numbers", loc)
    return complex(re, im)


def parse_state(doc: dict) -> DensityMatrix | BipartiteState:
    """Build a validated state from a decoded state-file document."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    dims = doc.get("dims")
    if not (isinstance(dims, list) and len(dims) in (1, 2)
            and all(isinstance(x, int) and x > 0 for x in dims)):
        raise ParseError("dims: expected [d] or [d_A, d_B] of positive integers", "dims")
    rows = doc.get("matrix")
    if not isinstance(rows, list) or not rows:
        raise ParseError("matrix: expected a nonempty nested array", "matrix")
    d = int(np.prod(dims))
    if len(rows) != d:
        raise ParseError(f"matrix: expected {d} rows, got {len(rows)}", "matrix")
    m = np.zeros((d, d), dtype=complex)
    for i, row in enumerate(rows):
        if not (isinstance(row, list) and len(row) == d):
            raise ParseError(f"matrix[{i}]: expected {d} entries", f"matrix[{i}]")
        for j, val in enumerate(row):
            m[i, j] = _entry(val, i, j)
    rho = DensityMatrix(m, 1e-8)
    if len(dims) == 2:
        return BipartiteState(rho, dims[0], dims[1])
    return rho


def load_state(path) -> DensityMatrix | BipartiteState:
    """Read and validate a state file.

    Raises ParseError on malformed content and ValidationError when the
    matrix is not a density matrix.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_state(doc)


def state_document(state: DensityMatrix | BipartiteState, label: str | None = None) -> dict:
    if isinstance(state, BipartiteState):
        dims, m = [state.d_A, state.d_B], state.mat
    else:
        dims, m = [state.dim], state.mat
    doc = {
        "dims": dims,
        "matrix": [[[z.real, z.imag] for z in row] for row in m],
    }
    if label is not None:
        doc["label"] = label
    return doc


def save_state(path, state, label: str | None = None) -> None:
    """Write a state file; float serialization is shortest round-trip
    (<= 17 significant digits), so read-back is bit-exact."""
    Path(path).write_text(json.dumps(state_document(state, label), indent=1) + "\n")
