# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Union

from jsonschema import Draft202012Validator

from wizardmatroid.utils.errors.errors import DocumentReadError, SchemaError
from wizardmatroid.utils.settings import SCHEMA_DIR
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix
from wizardmatroid.wizard_scalars.context import make_context

Source = Union[str, bytes, Path, Mapping]


@dataclass(frozen=True)
class MatrixDocument:
    """A parsed matrix together with the metadata of its document."""

    matrix: Union[ModuleMatrix, QMatrix]
    index_base: int = 1
    name: str = None


def load_json(source: Source) -> Any:
    """
    Reads a JSON value from a path, raw bytes, JSON text or an already parsed mapping.

    Args:
        source: File path, UTF-8 bytes, JSON text or a mapping.

    Returns:
        The decoded JSON value.

    Raises:
        DocumentReadError: If the file is missing or the content is not valid UTF-8 JSON.
    """
    if isinstance(source, Mapping):
        return source
    if isinstance(source, bytes):
        raw = source
    elif isinstance(source, str) and source.lstrip().startswith(("{", "[")):
        raw = source.encode()
    else:
        path = Path(source)
        if not path.is_file():
            raise DocumentReadError(f"File not found: {path}")
        raw = path.read_bytes()
    try:
        return json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as e:
        raise DocumentReadError(f"Error decoding JSON content: {e}")
    except json.JSONDecodeError as e:
        raise DocumentReadError(f"Invalid JSON format: {e}")


@lru_cache(maxsize=None)
def _validator(schema_name: str) -> Draft202012Validator:
    schema = json.loads((SCHEMA_DIR / f"{schema_name}.schema.json").read_text(encoding="utf-8"))
    return Draft202012Validator(schema)


def validate_document(doc: Any, schema_name: str) -> None:
    """Raises SchemaError for the first violation (in document order) of a shipped schema."""
    errors = sorted(_validator(schema_name).iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        first = errors[0]
        path = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise SchemaError(path, first.message)


def read_matrix_document(source: Source) -> MatrixDocument:
    """
    Parses and validates a MatrixDocument.

    Args:
        source: Anything :func:`load_json` accepts.

    Returns:
        MatrixDocument: The matrix (ModuleMatrix for ``"domain": "ring"``,
        QMatrix for ``"domain": "fraction"``) with its index base and name.

    Raises:
        DocumentReadError: Unreadable input.
        SchemaError: Structural violations, wrong shapes, malformed entries.
        InvariantViolationError: Non-prime p, reducible modulus, Hurwitz parity.
    """
    doc = load_json(source)
    validate_document(doc, "matrix_document")
    ctx = make_context(doc["ring"], "ring")
    n, d = doc["rows"], doc["cols"]
    entries = doc["entries"]
    if len(entries) != n:
        raise SchemaError("entries", f"expected {n} rows, got {len(entries)}")
    fraction = doc.get("domain", "ring") == "fraction"
    parse = ctx.parse_q_element if fraction else ctx.parse_element
    rows = []
    for i, row in enumerate(entries):
        if len(row) != d:
            raise SchemaError(f"entries/{i}", f"expected {d} entries, got {len(row)}")
        rows.append(tuple(parse(raw, f"entries/{i}/{j}") for j, raw in enumerate(row)))
    cls = QMatrix if fraction else ModuleMatrix
    matrix = cls(ctx, tuple(rows), d, doc.get("orientation", "right"))
    return MatrixDocument(matrix, doc.get("index_base", 1), doc.get("name"))


def parse_matrix_document(source: Source) -> Union[ModuleMatrix, QMatrix]:
    return read_matrix_document(source).matrix


def serialize_matrix(A: Union[ModuleMatrix, QMatrix], index_base: int = 1, name: str = None) -> dict:
    """MatrixDocument for ``A``; :func:`parse_matrix_document` reads it back unchanged."""
    ctx = A.ctx
    fraction = isinstance(A, QMatrix)
    dump = ctx.dump_q_element if fraction else ctx.dump_element
    doc = {
        "ring": ctx.descriptor(),
        "rows": A.nrows,
        "cols": A.ncols,
        "orientation": A.orientation,
        "domain": "fraction" if fraction else "ring",
        "index_base": index_base,
        "entries": [[dump(x) for x in row] for row in A.entries],
    }
    if name is not None:
        doc["name"] = name
    return doc


def dumps_canonical(value: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, UTF-8 kept."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False)
