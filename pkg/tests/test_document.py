import json

import numpy as np
import pytest

from cdrings.document import (
    algebra_to_document,
    document_to_algebra,
    dumps_document,
    load_algebra,
    save_algebra,
)
from cdrings.doubling import tower
from cdrings.errors import InvalidAlgebra
from cdrings.presentations import quaternion_algebra


def test_roundtrip_preserves_algebra(tmp_path):
    alg = tower(4, 1, 1, 1)
    path = tmp_path / "oct.json"
    save_algebra(path, alg, {"kind": "tower", "base": 4, "params": [1, 1, 1]})
    loaded = load_algebra(path)
    assert loaded == alg
    assert loaded.labels == alg.labels


def test_roundtrip_is_byte_identical(tmp_path):
    alg = quaternion_algebra(6, 1, 5)
    path = tmp_path / "quat.json"
    save_algebra(path, alg, {"kind": "quaternion", "n": 6, "a": 1, "b": 5})
    first = path.read_bytes()
    loaded = load_algebra(path)
    doc = json.loads(first)
    again = dumps_document(algebra_to_document(loaded, doc["provenance"]))
    assert again.encode() == first


def test_roundtrip_preserves_analysis_results(tmp_path):
    from cdrings.analysis import center, essentiality_data

    alg = tower(4, 1, 1)
    path = tmp_path / "q.json"
    save_algebra(path, alg)
    loaded = load_algebra(path)
    assert center(loaded).Z == center(alg).Z
    assert essentiality_data(loaded).I == essentiality_data(alg).I


def test_load_rejects_wrong_version():
    alg = tower(4, 1)
    doc = algebra_to_document(alg)
    doc["format_version"] = 99
    with pytest.raises(ValueError):
        document_to_algebra(doc)


def test_load_rejects_invalid_algebra():
    alg = tower(4, 1)
    doc = algebra_to_document(alg)
    doc["involution"] = [[2, 0], [0, 2]]  # does not square to identity
    with pytest.raises(InvalidAlgebra):
        document_to_algebra(doc)


def test_load_rejects_bad_tensor_size():
    alg = tower(4, 1)
    doc = algebra_to_document(alg)
    doc["structure"] = doc["structure"][:-1]
    with pytest.raises(ValueError):
        document_to_algebra(doc)


def test_structure_is_row_major_triple_index():
    alg = quaternion_algebra(4, 1, 1)
    doc = algebra_to_document(alg)
    flat = np.array(doc["structure"]).reshape(4, 4, 4)
    assert np.array_equal(flat, np.asarray(alg.structure))
    # i * j = k sits at [1][2][3]
    assert flat[1][2][3] == 1
