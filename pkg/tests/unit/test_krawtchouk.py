"""Tests for the enumerator transform matrices."""

import pytest

from hybridcodes.services.krawtchouk import apply_matrix, krawtchouk_matrix, shadow_matrix


class TestKrawtchouk:
    def test_one_qubit(self):
        assert krawtchouk_matrix(1) == ((1, 1), (3, -1))

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_involution_up_to_scale(self, n):
        k = krawtchouk_matrix(n)
        for i in range(n + 1):
            column = tuple(1 if j == i else 0 for j in range(n + 1))
            image = apply_matrix(k, apply_matrix(k, column))
            assert image == tuple(4**n if j == i else 0 for j in range(n + 1))

    def test_trivial_code_maps_to_full_space(self):
        n = 3
        zero_code = (1,) + (0,) * n
        assert apply_matrix(krawtchouk_matrix(n), zero_code) == (1, 9, 27, 27)

    def test_shadow_first_column_matches_krawtchouk(self):
        assert [row[0] for row in shadow_matrix(4)] == [row[0] for row in krawtchouk_matrix(4)]

    def test_shadow_of_bell_state(self):
        # {XX, ZZ} has enumerator 1 + 3y^2 and is its own shadow
        assert apply_matrix(shadow_matrix(2), (1, 0, 3)) == (4, 0, 12)
