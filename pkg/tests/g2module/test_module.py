"""
Tests for the 15-dimensional module and its Chevalley generators.
"""

import json

import numpy as np
import pytest

from g2module.basis import BASIS, DIM, BasisVector
from g2module.chevalley import (
    NILPOTENCY_DEGREE,
    Generator,
    apply_chevalley,
    dump_matrices_json,
    generator_matrix,
)
from g2module.module_vector import ModuleVector
from g2module.verify import module_suite, verify_representation
from g2module.weights import INDICES, SIMPLE_ROOTS, Weight, cartan_entry, coroot_pairing, weight_of
from utils.errors import StructuralError

B = BasisVector


def test_basis_size_and_partners():
    """Fifteen vectors; i and bar i are partners, the zero weights have none."""
    assert DIM == 15
    assert B.B3.partner is B.BAR3
    assert B.BAR6.partner is B.B6
    assert B.EMPTY.partner is None
    assert B.ZERO1.partner is None


def test_parse_rejects_unknown_tag():
    """Unknown tags raise StructuralError."""
    assert BasisVector.parse("2b") is B.BAR2
    with pytest.raises(StructuralError):
        BasisVector.parse("7")


def test_weights():
    """Weights of the unbarred vectors, bars negated, zero weights vanish."""
    assert weight_of(B.B1).as_tuple() == (-2, 1, 0)
    assert weight_of(B.B6).as_tuple() == (-1, 2, -3)
    assert weight_of(B.BAR2) == -weight_of(B.B2)
    assert weight_of(B.ZERO2) == Weight()
    total = Weight()
    for b in BASIS:
        total = total + weight_of(b)
    assert total == Weight()


def test_cartan_entries_and_roots():
    """Cartan matrix rows and simple roots as its columns."""
    assert cartan_entry(2, 1) == -3
    assert cartan_entry(1, 2) == -1
    assert cartan_entry(0, 2) == 0
    assert SIMPLE_ROOTS[1].as_tuple() == (-1, 2, -3)


def test_nilpotency_degrees():
    """f_i and e_i vanish at the power one above the nilpotency degree, not before."""
    for i in INDICES:
        k = NILPOTENCY_DEGREE[i]
        for gen in Generator:
            m = generator_matrix(gen, i)
            assert np.any(np.linalg.matrix_power(m, k))
            assert not np.any(np.linalg.matrix_power(m, k + 1))


def test_commutators_on_weight_vectors():
    """[e_i, f_i] acts on each basis vector by the coroot pairing."""
    for i in INDICES:
        e = generator_matrix("e", i)
        f = generator_matrix("f", i)
        bracket = e @ f - f @ e
        for b in BASIS:
            column = bracket[:, b.index]
            expected = np.zeros(DIM, dtype=np.int64)
            expected[b.index] = coroot_pairing(i, weight_of(b))
            assert np.array_equal(column, expected)


def test_apply_chevalley_shifts_weight():
    """f_1 [1] = [2] and the weight drops by the simple root."""
    assert apply_chevalley("f", 1, B.B1) == [(B.B2, 1)]
    assert weight_of(B.B2) == weight_of(B.B1) - SIMPLE_ROOTS[1]
    assert apply_chevalley("e", 1, B.B1) == []


def test_module_vector_linear_action():
    """Generators act linearly on coefficient vectors."""
    v = ModuleVector.basis(B.B1).scale(3)
    moved = v.apply_generator("f", 1)
    assert moved == ModuleVector.basis(B.B2).scale(3)
    assert (v - v).is_zero()


def test_matrices_are_read_only():
    """Cached generator matrices cannot be mutated."""
    m = generator_matrix(Generator.E, 0)
    with pytest.raises(ValueError):
        m[0, 0] = 1


def test_dump_matrices_json():
    """The dump lists the basis order and all six generators."""
    data = json.loads(dump_matrices_json())
    assert data["basis"][0] == "1"
    assert sorted(data["matrices"]) == ["e0", "e1", "e2", "f0", "f1", "f2"]
    assert len(data["matrices"]["f2"]) == 15


def test_representation_report_passes():
    """All representation checks pass exactly."""
    report = verify_representation()
    assert report.passed
    assert report.mode.value == "exact"
    assert module_suite().passed
