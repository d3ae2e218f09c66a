"""Tests for the state-vector check of the error-correction conditions."""

import numpy as np
import pytest

from hybridcodes.core.exceptions import CapacityError, PreconditionError
from hybridcodes.models.symplectic import PauliVector
from hybridcodes.services.constructions import qudit_to_classical
from hybridcodes.services.dense_verifier import (
    apply_pauli,
    code_basis,
    dense_verify,
    low_weight_errors,
    translation_product,
)


class TestPauliAction:
    def test_x_flips_the_qubit(self):
        state = np.array([[1.0, 0.0]], dtype=np.complex128)
        out = apply_pauli(PauliVector.from_string("X"), state)
        assert np.allclose(out, [[0.0, 1.0]])

    def test_z_sign(self):
        state = np.array([[0.0, 1.0]], dtype=np.complex128)
        out = apply_pauli(PauliVector.from_string("Z"), state)
        assert np.allclose(out, [[0.0, -1.0]])

    def test_y_is_hermitian(self):
        y = PauliVector.from_string("Y")
        matrix = apply_pauli(y, np.eye(2, dtype=np.complex128)).T
        assert np.allclose(matrix, matrix.conj().T)
        assert np.allclose(matrix @ matrix, np.eye(2))

    def test_qubit_one_is_lowest_bit(self):
        state = np.zeros((1, 4), dtype=np.complex128)
        state[0, 0] = 1
        out = apply_pauli(PauliVector.from_string("XI"), state)
        assert out[0, 1] == 1


class TestCodeBasis:
    def test_dimension(self, five_qubit_code, code_7):
        assert code_basis(five_qubit_code, 1e-9).shape == (2, 32)
        assert code_basis(code_7, 1e-9).shape == (2, 128)

    def test_basis_is_stabilized(self, five_qubit_code):
        basis = code_basis(five_qubit_code, 1e-9)
        for s in five_qubit_code.stabilizer:
            assert np.allclose(apply_pauli(s, basis), basis)


class TestDenseVerify:
    """Correction conditions on explicit state vectors."""

    def test_low_weight_errors(self):
        errors = low_weight_errors(3, 1)
        assert len(errors) == 10
        assert errors[0].is_identity()

    def test_translation_product(self, code_7):
        assert str(translation_product(code_7, 1)) == "IIIIXYY"
        assert translation_product(code_7, 0).is_identity()

    def test_five_qubit_code_corrects_one_error(self, five_qubit_code):
        assert dense_verify(five_qubit_code).ok

    def test_five_qubit_code_fails_for_two_errors(self, five_qubit_code):
        report = dense_verify(five_qubit_code, max_error_weight=2)
        assert not report.ok
        assert report.violations

    def test_seven_qubit_hybrid_code(self, code_7):
        report = dense_verify(code_7)
        assert report.ok
        assert len(report.errors) == 22

    def test_alpha_depends_on_translated_code(self, code_7):
        # Z1 X7 lies in the stabilizer and anticommutes with the translation
        report = dense_verify(code_7)
        assert report.hybrid_signatures()

    def test_purely_classical_code(self, five_qubit_code):
        assert dense_verify(qudit_to_classical(five_qubit_code)).ok

    def test_explicit_error_list(self, five_qubit_code):
        errors = [PauliVector.identity(5), PauliVector.from_string("XXIII")]
        assert dense_verify(five_qubit_code, errors=errors).ok

    def test_qubit_cap(self, code_7):
        with pytest.raises(CapacityError):
            dense_verify(code_7, max_qubits=5)

    def test_error_weight_must_be_positive(self, five_qubit_code):
        with pytest.raises(PreconditionError):
            dense_verify(five_qubit_code, max_error_weight=0)
