"""Tests for span enumeration and low-weight sweeps."""

import itertools
from math import comb

import numpy as np
import pytest

from hybridcodes.core.exceptions import CapacityError
from hybridcodes.models.symplectic import PauliVector, enumerate_span, rref
from hybridcodes.services.enumeration import (
    SpanEnumerator,
    check_sweep_cap,
    first_hybrid_violation,
    iter_weight_batches,
    low_weight_syndromes,
    popcount64,
    run_ordered,
    sweep_size,
    syndrome_bits,
    syndrome_table,
)
from tests.conftest import STABILIZER_7, paulis


class TestPopcount:
    def test_matches_python(self):
        values = np.array([0, 1, 3, 2**63, 2**64 - 1, 0xF0F0], dtype=np.uint64)
        assert popcount64(values).tolist() == [bin(int(v)).count("1") for v in values]


class TestRunOrdered:
    @pytest.mark.parametrize("threads", [1, 4])
    def test_results_in_index_order(self, threads):
        assert run_ordered(lambda i: i * i, 10, threads) == [i * i for i in range(10)]


class TestSpanEnumerator:
    """Block-wise histograms agree with direct enumeration."""

    @pytest.mark.parametrize("block_rank", [0, 2, 16])
    def test_histogram_matches_enumerate_span(self, code_7, block_rank):
        code = rref(code_7.stabilizer)
        enumerator = SpanEnumerator(7, code.generators, block_rank=block_rank)
        expected = [0] * 8
        for v in enumerate_span(code):
            expected[v.weight()] += 1
        assert enumerator.histogram() == expected

    def test_histogram_independent_of_threads(self, code_7):
        gens = list(code_7.stabilizer)
        single = SpanEnumerator(7, gens, block_rank=2, threads=1).histogram()
        multi = SpanEnumerator(7, gens, block_rank=2, threads=3).histogram()
        assert single == multi

    def test_skip_excludes_low_indices(self):
        gens = paulis("ZZI", "IZZ", "XXX")
        enumerator = SpanEnumerator(3, gens, block_rank=1)
        # elements with the XXX component: XXX, YYX, XYY, YXY
        assert enumerator.histogram(skip=2) == [0, 0, 0, 4]
        assert enumerator.min_weight(skip=2)[0] == 3

    def test_min_weight_lowest_index_on_ties(self):
        gens = paulis("ZZI", "IZZ")
        weight, index = SpanEnumerator(3, gens).min_weight(skip=0)
        assert weight == 2
        assert index == 1

    def test_min_weight_empty_selection(self):
        enumerator = SpanEnumerator(2, paulis("XX"))
        assert enumerator.min_weight(skip=1) == (3, -1)

    def test_element(self):
        enumerator = SpanEnumerator(3, paulis("ZZI", "IZZ"))
        assert str(enumerator.element(3)) == "ZIZ"

    def test_rank_cap(self):
        with pytest.raises(CapacityError):
            SpanEnumerator(3, paulis("ZZI", "IZZ"), cap=1)


class TestSyndromes:
    """Syndrome tables and bit-packed syndromes."""

    def test_table_matches_direct_computation(self):
        checks = paulis(*STABILIZER_7)
        table = syndrome_table(7, checks)
        for qubit in range(7):
            for c, pauli in enumerate("XZY"):
                single = PauliVector.single(7, qubit, pauli)
                assert int(table[qubit, c, 0]) == syndrome_bits(single, checks)

    def test_syndrome_bits(self):
        checks = paulis("ZZI", "IZZ")
        assert syndrome_bits(PauliVector.from_string("XII"), checks) == 0b01
        assert syndrome_bits(PauliVector.from_string("IXI"), checks) == 0b11
        assert syndrome_bits(PauliVector.from_string("ZZZ"), checks) == 0

    def test_table_spans_multiple_words(self):
        checks = [PauliVector.single(70, j, "Z") for j in range(70)]
        table = syndrome_table(70, checks)
        assert table.shape == (70, 3, 2)
        assert int(table[65, 0, 1]) == 1 << 1

    def test_low_weight_syndromes_of_repetition_checks(self):
        # bit-flip code: every single X has a distinct nonzero syndrome, Z has none
        checks = paulis("ZZI", "IZZ")
        assert low_weight_syndromes(3, checks, 1) == {0, 0b01, 0b11, 0b10}
        assert low_weight_syndromes(3, checks, 0) == set()


class TestWeightBatches:
    """Lexicographic low-weight candidate order."""

    def test_batches_cover_every_support(self):
        n = 6
        for w in range(1, 4):
            supports = []
            for batch in iter_weight_batches(n, w, w, batch_size=50):
                assert batch.weight == w
                supports.extend(tuple(int(p) for p in row) for row in batch.combos)
            assert supports == list(itertools.combinations(range(n), w))
            assert len(supports) == comb(n, w)

    def test_candidate_order(self):
        batch = next(iter_weight_batches(3, 2, 2))
        assert len(batch) == 3 * 9
        assert str(batch.vector(3, 0)) == "XXI"
        assert str(batch.vector(3, 1)) == "XZI"
        assert str(batch.vector(3, 9)) == "XIX"

    def test_sweep_size_and_cap(self):
        assert sweep_size(3, 1) == 9
        assert sweep_size(3, 2) == 9 + 27
        assert check_sweep_cap(3, 2) == 36
        with pytest.raises(CapacityError):
            check_sweep_cap(3, 2, cap=10)


class TestFirstHybridViolation:
    """Lightest Pauli in C* outside C0."""

    def test_finds_lightest_logical(self, five_qubit_code):
        stabilizer = list(five_qubit_code.stabilizer)
        logicals = five_qubit_code.logical_rows
        witness = first_hybrid_violation(5, stabilizer, logicals, 3)
        assert witness is not None
        assert witness.weight() == 3

    def test_no_violation_below_distance(self, five_qubit_code):
        stabilizer = list(five_qubit_code.stabilizer)
        logicals = five_qubit_code.logical_rows
        assert first_hybrid_violation(5, stabilizer, logicals, 2) is None

    def test_independent_of_threads_and_batch(self, five_qubit_code):
        stabilizer = list(five_qubit_code.stabilizer)
        logicals = five_qubit_code.logical_rows
        one = first_hybrid_violation(5, stabilizer, logicals, 3, threads=1)
        many = first_hybrid_violation(5, stabilizer, logicals, 3, threads=4)
        assert one == many
