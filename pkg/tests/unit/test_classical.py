"""Tests for binary linear codes."""

import pytest

from hybridcodes.core.exceptions import CapacityError, DimensionError
from hybridcodes.models.classical import ClassicalCode


class TestClassicalCode:
    """Generator matrices over GF(2)."""

    def test_repetition(self, repetition_3):
        assert repetition_3.dimension == 1
        assert repetition_3.minimum_distance() == 3
        assert list(repetition_3.row_strings()) == ["111"]

    def test_single_parity_check(self):
        code = ClassicalCode.single_parity_check(4)
        assert list(code.row_strings()) == ["1001", "0101", "0011"]
        assert code.rank == 3
        assert code.minimum_distance() == 2

    def test_zero_code_distance_is_n_plus_one(self):
        assert ClassicalCode(5).minimum_distance() == 6

    def test_rank_ignores_dependent_rows(self):
        code = ClassicalCode.from_strings(["110", "011", "101"])
        assert code.dimension == 3
        assert code.rank == 2

    def test_from_strings_bit_order(self):
        assert ClassicalCode.from_strings(["100"]).rows == (1,)

    def test_row_longer_than_n(self):
        with pytest.raises(DimensionError):
            ClassicalCode(2, (0b100,))

    def test_distance_cap(self):
        with pytest.raises(CapacityError):
            ClassicalCode.single_parity_check(6).minimum_distance(cap=3)

    def test_to_text(self):
        assert ClassicalCode.repetition(3).to_text() == "length 3\n111\n"
