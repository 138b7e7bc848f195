"""Acceptance gate: every criterion at its stated tolerance, one line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines, or ``schurwalk check-all`` for the same table from the CLI.
"""

from __future__ import annotations

from schurwalk import acceptance


def _run(criterion):
    result = criterion(seed=0)
    status = "PASS" if result.passed else "FAIL"
    print(f"criterion {result.number:02d} {status} {result.name}: {result.detail}")
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"


def test_criterion_01_norm_two_law():
    _run(acceptance.criterion_1)


def test_criterion_02_dephasing_oracle():
    _run(acceptance.criterion_2)


def test_criterion_03_main_theorem():
    _run(acceptance.criterion_3)


def test_criterion_04_matrix_tree_vs_enumeration():
    _run(acceptance.criterion_4)


def test_criterion_05_path_closed_form():
    _run(acceptance.criterion_5)


def test_criterion_06_flat_band():
    _run(acceptance.criterion_6)


def test_criterion_07_classification_trichotomy():
    _run(acceptance.criterion_7)


def test_criterion_08_entropy_laws():
    _run(acceptance.criterion_8)


def test_criterion_09_pure_state_path_counts():
    _run(acceptance.criterion_9)


def test_criterion_10_uniform_optimality():
    _run(acceptance.criterion_10)


def test_criterion_11_bridge_factorization():
    _run(acceptance.criterion_11)


def test_criterion_12_spectral_floor():
    _run(acceptance.criterion_12)


def test_criterion_13_deterministic_output():
    _run(acceptance.criterion_13)
