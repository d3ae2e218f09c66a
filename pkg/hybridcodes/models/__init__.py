"""Domain models: Pauli vectors, additive codes, hybrid codes and file formats."""

from .catalog import CATALOG, CatalogEntry, catalog, catalog_entry, catalog_names
from .classical import ClassicalCode
from .codefile import (
    SeedCode,
    load_classical,
    load_code,
    load_pauli_rows,
    load_seeds,
    parse,
    parse_classical,
    parse_pauli_rows,
    parse_seeds,
    save_code,
    serialize,
    serialize_seeds,
)
from .hybrid_code import CodeParameters, DerivedCodes, HybridCode, validate
from .symplectic import (
    AdditiveCode,
    PauliVector,
    contains,
    coset_basis,
    enumerate_span,
    rref,
    symplectic_dual,
    symplectic_gram_schmidt,
    symplectic_product,
    weight,
)

__all__ = [
    "PauliVector",
    "AdditiveCode",
    "symplectic_product",
    "weight",
    "rref",
    "symplectic_dual",
    "contains",
    "coset_basis",
    "enumerate_span",
    "symplectic_gram_schmidt",
    "HybridCode",
    "CodeParameters",
    "DerivedCodes",
    "validate",
    "ClassicalCode",
    "SeedCode",
    "parse",
    "serialize",
    "load_code",
    "save_code",
    "parse_classical",
    "load_classical",
    "parse_pauli_rows",
    "load_pauli_rows",
    "parse_seeds",
    "load_seeds",
    "serialize_seeds",
    "CATALOG",
    "CatalogEntry",
    "catalog",
    "catalog_entry",
    "catalog_names",
]
