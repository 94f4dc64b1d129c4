import json
import math
import os

import pytest

import adqec


def data_path(name):
    return os.path.join(os.environ["ADQEC_DATA_DIR"], name)


def test_conflict_predicate():
    assert adqec.conflicts("0011", "0101", "literal")
    assert not adqec.conflicts("0011", "1100", "literal")
    assert adqec.conflicts("1111", "0111", "strict")
    assert not adqec.conflicts("1111", "0111", "literal")


def test_hamming_bound():
    assert adqec.quantum_hamming_bound(5, 1, 1, 3)
    assert not adqec.quantum_hamming_bound(4, 1, 1, 3)


def test_search_n4():
    result = adqec.search(4, "strict", "greedy-lex")
    assert result.k == 2
    assert set(result.code.words) == {"0000", "0011", "1100", "1111"}


def test_bundled_code_valid():
    with open(data_path("code_8_12.json")) as f:
        code = adqec.CodeSet.from_json(f.read())
    report = adqec.validate_code_set(code)
    assert report.valid
    assert report.k == 12


def test_bare_fidelity_closed_form():
    expected = ((math.sqrt(1.2) + math.sqrt(0.8)) / 2) ** 3
    assert adqec.bare_fidelity(3, 0.2) == pytest.approx(expected, abs=1e-12)


def test_code_fidelity_and_recovery():
    code = adqec.CodeSet(4, "strict", ["0000", "0011", "1100", "1111"])
    assert adqec.code_fidelity(code, 0.0) == pytest.approx(1.0, abs=1e-10)
    report = adqec.verify_recovery(code, 0.1)
    assert report.ok
    assert adqec.max_first_order_residual(code) < 1e-6
