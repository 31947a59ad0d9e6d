"""Flat-file serialization of algebras (the CLI's document format).

A document is a single JSON object with a format_version, the dense
structure tensor in row-major triple order, the unit, the involution matrix
as a list of rows, labels, and a provenance record (tower parameters or
presentation name). Serialization is canonical: sorted keys, fixed
separators, trailing newline, so save(load(p)) is byte-identical and
documents diff cleanly. Loading validates the algebra and refuses anything
structurally broken.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import FiniteAlgebra, ensure_valid

FORMAT_VERSION = 1


def algebra_to_document(algebra: FiniteAlgebra, provenance: dict | None = None) -> dict:
    d = algebra.rank
    return {
        "format_version": FORMAT_VERSION,
        "modulus": algebra.modulus,
        "rank": d,
        "labels": list(algebra.labels),
        "structure": [int(v) for v in algebra.structure.reshape(d * d * d)],
        "unit": [int(v) for v in algebra.unit],
        "involution": [[int(v) for v in row] for row in algebra.involution],
        "provenance": provenance or {"kind": "unspecified", "name": algebra.name},
    }


def document_to_algebra(doc: dict) -> FiniteAlgebra:
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {version!r}")
    n = doc["modulus"]
    d = doc["rank"]
    structure = np.array(doc["structure"], dtype=np.int64)
    if structure.shape != (d * d * d,):
        raise ValueError(
            f"structure tensor has {structure.size} entries, expected {d**3}"
        )
    prov = doc.get("provenance", {})
    name = prov.get("name") or _provenance_name(prov)
    algebra = FiniteAlgebra(
        n,
        structure.reshape(d, d, d),
        doc["unit"],
        doc["involution"],
        labels=doc.get("labels"),
        name=name,
    )
    return ensure_valid(algebra)


def _provenance_name(prov: dict) -> str:
    kind = prov.get("kind", "unspecified")
    if kind == "tower":
        params = ",".join(str(p) for p in prov.get("params", []))
        return f"tower(Z{prov.get('base')};{params})"
    return kind


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def save_algebra(path, algebra: FiniteAlgebra, provenance: dict | None = None) -> Path:
    path = Path(path)
    path.write_text(dumps_document(algebra_to_document(algebra, provenance)))
    return path


def load_algebra(path) -> FiniteAlgebra:
    doc = json.loads(Path(path).read_text())
    return document_to_algebra(doc)
