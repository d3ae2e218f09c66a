"""Pytest configuration and fixtures."""

import os
from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest
import structlog

from hybridcodes.core.exceptions import InvalidCodeError
from hybridcodes.models.catalog import catalog
from hybridcodes.models.classical import ClassicalCode
from hybridcodes.models.codefile import SeedCode
from hybridcodes.models.hybrid_code import HybridCode, validate
from hybridcodes.models.symplectic import PauliVector, rref, symplectic_product
from hybridcodes.services.constructions import build_from_code_pair

FIXTURES = Path(__file__).parent / "fixtures"

# Stabilizer of the 7_1_1_3 catalog code
STABILIZER_7 = ("XIIZYYZ", "ZIIIIIX", "IXIXZII", "IZIZIXX", "IIXXIZI", "IIZZXIX")


def paulis(*rows: str) -> List[PauliVector]:
    return [PauliVector.from_string(r) for r in rows]


def extended_tests_enabled() -> bool:
    return os.environ.get("HYBRIDCODES_EXTENDED_TESTS") == "1"


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop logger configuration bound to a captured stream."""
    yield
    structlog.reset_defaults()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def code_7():
    """The [[7,1:1,3]] catalog code."""
    return catalog("7_1_1_3")


@pytest.fixture
def derived_7(code_7):
    return validate(code_7)


@pytest.fixture
def five_qubit_code():
    """The perfect [[5,1,3]] code."""
    stabilizer = paulis("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
    logicals = ((PauliVector.from_string("XXXXX"), PauliVector.from_string("ZZZZZ")),)
    return HybridCode(n=5, stabilizer=tuple(stabilizer), logicals=logicals, claimed_d=3)


@pytest.fixture
def eight_qubit_code():
    """A [[8,3,3]] stabilizer code."""
    rows = paulis("XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY")
    return build_from_code_pair(rref(rows, 8), [], claimed_d=3)


@pytest.fixture
def repetition_3():
    return ClassicalCode.repetition(3)


@pytest.fixture
def seed_2():
    """The [[2,0]] Bell state seed."""
    return SeedCode(n=2, generators=tuple(paulis("XX", "ZZ")), source_id="bell")


@pytest.fixture
def seed_7():
    """Stabilizer of the 7-qubit catalog code completed by one of its logical operators."""
    gens = tuple(paulis("IIIZXXI", *STABILIZER_7))
    return SeedCode(n=7, generators=gens, source_id="seed7")


def random_pauli(rng: np.random.Generator, n: int) -> PauliVector:
    x = int(rng.integers(0, 1 << n))
    z = int(rng.integers(0, 1 << n))
    return PauliVector(n, x, z)


def random_self_orthogonal(rng: np.random.Generator, n: int, rank: int) -> List[PauliVector]:
    """Greedy random commuting, independent generators."""
    gens: List[PauliVector] = []
    attempts = 0
    while len(gens) < rank and attempts < 10_000:
        attempts += 1
        v = random_pauli(rng, n)
        if v.is_identity() or any(symplectic_product(v, g) for g in gens):
            continue
        if rref(gens + [v], n).rank == len(gens) + 1:
            gens.append(v)
    return gens


def random_hybrid_code(rng: np.random.Generator, n: int, rank: int, m: int) -> HybridCode:
    """Random valid code with ``rank`` stabilizer generators and up to ``m`` translations."""
    stabilizer = random_self_orthogonal(rng, n, rank)
    c0 = rref(stabilizer, n)
    extra: List[PauliVector] = []
    for _ in range(200):
        if len(extra) == m:
            break
        v = random_pauli(rng, n)
        try:
            h = build_from_code_pair(c0, extra + [v])
            validate(h)
        except (InvalidCodeError, ValueError):
            continue
        extra.append(v)
    return build_from_code_pair(c0, extra)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def random_code_factory(rng) -> Callable[..., HybridCode]:
    def make(n: int, rank: int, m: int = 0) -> HybridCode:
        return random_hybrid_code(rng, n, rank, m)

    return make
