"""Tests for the built-in code catalog."""

import pytest

from hybridcodes.core.exceptions import CatalogLookupError
from hybridcodes.models.catalog import catalog, catalog_entry, catalog_names
from hybridcodes.models.hybrid_code import validate
from hybridcodes.models.symplectic import PauliVector


class TestCatalog:
    """Every transcribed code must be a valid hybrid code."""

    def test_names(self):
        assert catalog_names() == [
            "7_1_1_3",
            "9_2_2_3",
            "10_3_2_3",
            "11_1_2_4",
            "11_4_2_3",
            "13_1_4_4",
        ]

    @pytest.mark.parametrize("name", catalog_names())
    def test_entries_validate(self, name):
        entry = catalog_entry(name)
        h = catalog(name)
        assert (h.n, h.k, h.m) == (entry.n, entry.k, entry.m)
        assert h.claimed_d == entry.claimed_d
        validate(h)

    @pytest.mark.parametrize("name", catalog_names())
    def test_label_matches_name(self, name):
        n, k, m, d = name.split("_")
        assert catalog(name).label() == f"[[{n},{k}:{m},{d}]]"

    def test_unknown_name(self):
        with pytest.raises(CatalogLookupError) as info:
            catalog("5_1_0_3")
        assert "7_1_1_3" in str(info.value)
        assert isinstance(info.value, KeyError)


# Per-row weights of each printed matrix: stabilizer, normalizer extension, translations.
PRINTED_WEIGHTS = {
    "7_1_1_3": ((5, 2, 3, 4, 3, 4), (4, 3), (3,)),
    "9_2_2_3": ((7, 2, 5, 2, 4, 4, 4), (4, 3, 3, 3), (3, 3)),
    "10_3_2_3": ((8, 2, 8, 2, 2, 4, 4), (3, 3, 4, 3, 4, 3), (4, 3)),
    "11_1_2_4": ((6, 2, 2, 4, 2, 7, 2, 4, 4, 4), (4, 4), (4, 4)),
    "11_4_2_3": ((9, 2, 2, 6, 6, 6, 6), (3, 4, 3, 3, 4, 4, 3, 3), (4, 4)),
    "13_1_4_4": ((6, 2, 2, 4, 2, 7, 2, 4, 4, 4, 1, 1), (4, 4), (6, 4, 6, 4)),
}


class TestTranscription:
    """Row counts and row weights guard the transcribed matrices against typos."""

    def test_every_entry_has_weights(self):
        assert sorted(PRINTED_WEIGHTS) == sorted(catalog_names())

    @pytest.mark.parametrize("name", catalog_names())
    def test_row_weights(self, name):
        entry = catalog_entry(name)
        stabilizer, normalizer, translations = PRINTED_WEIGHTS[name]
        sections = (
            (entry.stabilizer, stabilizer),
            (entry.normalizer, normalizer),
            (entry.translations, translations),
        )
        for rows, weights in sections:
            assert len(rows) == len(weights)
            assert tuple(PauliVector.from_string(r).weight() for r in rows) == weights
            assert all(len(r) == entry.n for r in rows)

    @pytest.mark.parametrize("name", catalog_names())
    def test_translations_lie_outside_normalizer(self, name):
        h = catalog(name)
        derived = validate(h)
        for t in h.translations:
            assert t in derived.c_star
            assert t not in derived.c0_star
