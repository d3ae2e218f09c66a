"""Tests for enumerators, transforms, distances and impurity."""

import pytest

from hybridcodes.core.exceptions import InconsistencyError, UnsupportedAlphabetError
from hybridcodes.models.catalog import catalog, catalog_names
from hybridcodes.models.hybrid_code import HybridCode, validate
from hybridcodes.models.symplectic import rref
from hybridcodes.services.analysis import (
    WeightEnumerator,
    code_enumerators,
    hybrid_distance_full,
    hybrid_distance_witness,
    impurity_check,
    macwilliams,
    min_weight_outside,
    shadow,
    sweep_witness,
    translated_code_distance,
    union_code_distance,
    verify_distance_sweep,
    weight_enumerator,
)
from tests.conftest import paulis

W_C0_7 = (1, 0, 1, 2, 7, 24, 23, 6)
W_C0_STAR_7 = (1, 0, 1, 20, 43, 72, 83, 36)
W_C_STAR_7 = (1, 0, 1, 36, 91, 152, 163, 68)

# (C0, C0*, C*) of the 9- and 10-qubit catalog codes
GOLDEN = {
    "9_2_2_3": (
        (1, 0, 2, 0, 8, 4, 22, 56, 31, 4),
        (1, 0, 2, 38, 84, 222, 494, 562, 443, 202),
        (1, 0, 2, 86, 324, 926, 1934, 2466, 1835, 618),
    ),
    "10_3_2_3": (
        (1, 0, 3, 0, 6, 0, 10, 0, 105, 0, 3),
        (1, 0, 3, 80, 186, 432, 1430, 1584, 2325, 1488, 663),
        (1, 0, 3, 128, 522, 1824, 5030, 7872, 9477, 6048, 1863),
    ),
}


class TestWeightEnumerator:
    def test_full_space(self):
        assert WeightEnumerator.full_space(2).coeffs == (1, 6, 9)
        assert WeightEnumerator.full_space(3).size == 64

    def test_length_must_match(self):
        with pytest.raises(ValueError):
            WeightEnumerator(3, (1, 0, 0))

    def test_to_json_uses_strings(self):
        assert WeightEnumerator(1, (1, 3)).to_json() == ["1", "3"]


class TestEnumerators:
    """Exact enumerators of the 7-qubit catalog code."""

    def test_stabilizer_enumerator(self, derived_7):
        assert weight_enumerator(derived_7.c0).coeffs == W_C0_7

    def test_code_enumerators(self, derived_7):
        enums = code_enumerators(derived_7)
        assert enums.c0.coeffs == W_C0_7
        assert enums.c0_star.coeffs == W_C0_STAR_7
        assert enums.c_star.coeffs == W_C_STAR_7
        assert enums.c.size == 32
        assert enums.nested()

    def test_macwilliams_matches_direct_enumeration(self, derived_7):
        direct = weight_enumerator(derived_7.c_star)
        assert direct.coeffs == W_C_STAR_7
        back = macwilliams(direct, derived_7.c_star.size)
        assert back == weight_enumerator(derived_7.c)

    def test_ten_qubit_stabilizer_enumerator(self):
        derived = validate(catalog("10_3_2_3"))
        assert weight_enumerator(derived.c0).coeffs == (1, 0, 3, 0, 6, 0, 10, 0, 105, 0, 3)

    @pytest.mark.parametrize("name", sorted(GOLDEN))
    def test_golden_enumerators(self, name):
        enums = code_enumerators(validate(catalog(name)))
        assert (enums.c0.coeffs, enums.c0_star.coeffs, enums.c_star.coeffs) == GOLDEN[name]

    @pytest.mark.parametrize("name", catalog_names())
    def test_enumerator_sums(self, name):
        h = catalog(name)
        enums = code_enumerators(validate(h))
        assert enums.c0.size == 2 ** (h.n - h.k)
        assert enums.c0_star.size == 2 ** (h.n + h.k)
        assert enums.c_star.size == 2 ** (h.n + h.k + h.m)

    def test_macwilliams_of_zero_code(self):
        zero = WeightEnumerator(4, (1, 0, 0, 0, 0))
        assert macwilliams(zero, 1) == WeightEnumerator.full_space(4)

    def test_macwilliams_rejects_wrong_size(self):
        with pytest.raises(InconsistencyError, match="not an integer"):
            macwilliams(WeightEnumerator(7, W_C0_7), 3)

    def test_macwilliams_rejects_other_alphabets(self):
        with pytest.raises(UnsupportedAlphabetError):
            macwilliams(WeightEnumerator(7, W_C0_7), 64, q=4)

    def test_shadow_is_nonnegative(self, derived_7, five_qubit_code):
        for derived in (derived_7, validate(five_qubit_code)):
            w = weight_enumerator(derived.c0)
            assert all(c >= 0 for c in shadow(w, derived.c0.size))


class TestDistances:
    """Hybrid, union and translated code distances."""

    @pytest.mark.parametrize(
        "name, d",
        [
            ("7_1_1_3", 3),
            ("9_2_2_3", 3),
            ("10_3_2_3", 3),
            ("11_1_2_4", 4),
            ("11_4_2_3", 3),
        ],
    )
    def test_catalog_distances(self, name, d):
        assert hybrid_distance_full(validate(catalog(name))) == d

    def test_thirteen_qubit_code(self):
        assert hybrid_distance_full(validate(catalog("13_1_4_4"))) == 3

    def test_witness_lies_in_c_star_outside_c0(self, derived_7):
        d, witness = hybrid_distance_witness(derived_7)
        assert d == 3
        assert witness.weight() == 3
        assert witness in derived_7.c_star
        assert witness not in derived_7.c0

    def test_union_and_translated_distances(self, derived_7):
        # ZIIIIIX is a stabilizer element that the translation flips
        assert union_code_distance(derived_7) == 2
        assert translated_code_distance(derived_7) == 3

    def test_stabilizer_state_distance(self):
        h = HybridCode(n=2, stabilizer=tuple(paulis("XX", "ZZ")))
        assert hybrid_distance_full(validate(h)) == 2

    def test_min_weight_outside_equal_codes(self, derived_7):
        assert min_weight_outside(derived_7.c0, derived_7.c0) == (8, None)

    def test_min_weight_outside_subcode(self):
        inner = rref(paulis("ZZI"))
        outer = rref(paulis("ZZI", "IZZ"))
        weight, word = min_weight_outside(inner, outer)
        assert weight == 2
        assert word not in inner


class TestSweep:
    """Low-weight sweeps agree with full enumeration."""

    def test_sweep_confirms_distance(self, derived_7):
        assert verify_distance_sweep(derived_7, 3)
        assert not verify_distance_sweep(derived_7, 4)

    def test_sweep_witness_weight(self, derived_7):
        witness = sweep_witness(derived_7, 4)
        assert witness.weight() == 3
        assert witness in derived_7.c_star
        assert witness not in derived_7.c0

    def test_trivial_target(self, derived_7):
        assert sweep_witness(derived_7, 1) is None

    def test_random_codes_agree(self, random_code_factory):
        for n, rank, m in [(5, 3, 1), (6, 4, 2), (7, 5, 1), (6, 3, 1)]:
            derived = validate(random_code_factory(n, rank, m))
            d = hybrid_distance_full(derived)
            assert verify_distance_sweep(derived, d)
            assert not verify_distance_sweep(derived, d + 1)


class TestImpurity:
    def test_seven_qubit_code_is_impure(self, derived_7):
        assert tuple(impurity_check(derived_7)) == (3, 2, True)

    def test_five_qubit_code_is_pure(self, five_qubit_code):
        report = impurity_check(validate(five_qubit_code))
        assert report.d_code == 3
        assert report.d_naive == 3
        assert not report.impure
