"""Canonical JSON encoding and decoding of tilings."""

from __future__ import annotations

import json

from .errors import InvalidTiling, LozengeError, SchemaError
from .lattice import canonicalize, quotient_index
from .tiling import LETTERS, Tiling, validate


def encode_tiling(tiling: Tiling) -> str:
    """Serialize a tiling with assignment keys in canonical coset order."""
    m = tiling.matrix
    payload = {
        "matrix": [[m.a1, m.b1], [m.a2, m.b2]],
        "assignment": {
            f"{x1},{x2}": letter
            for (x1, x2), letter in zip(tiling.quotient.reps, tiling.letters)
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def decode_tiling(text: str) -> Tiling:
    """Parse a tiling file, checking schema, key set and compatibility."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or set(payload) != {"matrix", "assignment"}:
        raise SchemaError("expected exactly the keys 'matrix' and 'assignment'")
    raw = payload["matrix"]
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in raw)
    ):
        raise SchemaError("'matrix' must be a 2x2 integer array")
    try:
        matrix = canonicalize(raw)
    except (LozengeError, ValueError) as exc:
        raise SchemaError(f"bad matrix: {exc}") from exc
    assignment = payload["assignment"]
    if not isinstance(assignment, dict):
        raise SchemaError("'assignment' must be an object")
    q = quotient_index(matrix)
    expected = [f"{x1},{x2}" for (x1, x2) in q.reps]
    if set(assignment) != set(expected):
        missing = sorted(set(expected) - set(assignment))
        extra = sorted(set(assignment) - set(expected))
        raise SchemaError(f"wrong coset keys: missing {missing}, extra {extra}")
    letters = []
    for key in expected:
        letter = assignment[key]
        if letter not in LETTERS:
            raise SchemaError(f"bad letter {letter!r} at {key}")
        letters.append(letter)
    tiling = Tiling(q, tuple(letters))
    if not validate(tiling):
        raise InvalidTiling("assignment violates compatibility")
    return tiling
