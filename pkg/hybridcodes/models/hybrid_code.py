"""Hybrid stabilizer codes [[n, k:m, d]] and their four nested additive codes."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import structlog

from ..core.exceptions import InvalidCodeError, require_qubits
from .symplectic import (
    AdditiveCode,
    PauliVector,
    contains,
    coset_basis,
    rref,
    symplectic_dual,
    symplectic_gram_schmidt,
    symplectic_product,
)

logger = structlog.get_logger(__name__)

LogicalPair = Tuple[PauliVector, PauliVector]


@dataclass(frozen=True)
class CodeParameters:
    """Parameters [[n, k:m, d]]_q."""

    n: int
    k: int
    m: int
    d: int
    q: int = 2

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 0 or self.m < 0:
            raise InvalidCodeError(f"invalid parameters {self}")
        if self.k + self.m > self.n:
            raise InvalidCodeError(f"k + m exceeds n in {self}")
        if not 1 <= self.d <= self.n:
            raise InvalidCodeError(f"distance out of range in {self}")

    def __str__(self) -> str:
        return f"[[{self.n},{self.k}:{self.m},{self.d}]]_{self.q}"


@dataclass(frozen=True)
class HybridCode:
    """Stabilizer generators, logical pairs and translation generators.

    The stabilizer spans C0, stabilizer plus logicals span the normalizer code
    C0*, and adding the translations spans C*. The 2^m translated codes are the
    cosets of C0* inside C*.
    """

    n: int
    stabilizer: Tuple[PauliVector, ...]
    logicals: Tuple[LogicalPair, ...] = ()
    translations: Tuple[PauliVector, ...] = ()
    q: int = 2
    claimed_d: Optional[int] = field(default=None, compare=False)

    @property
    def k(self) -> int:
        return len(self.logicals)

    @property
    def m(self) -> int:
        return len(self.translations)

    @property
    def logical_rows(self) -> List[PauliVector]:
        return [op for pair in self.logicals for op in pair]

    def parameters(self, d: int) -> CodeParameters:
        return CodeParameters(self.n, self.k, self.m, d, self.q)

    def with_claimed_d(self, d: Optional[int]) -> "HybridCode":
        return replace(self, claimed_d=d)

    def label(self) -> str:
        d = "?" if self.claimed_d is None else str(self.claimed_d)
        return f"[[{self.n},{self.k}:{self.m},{d}]]"

    @classmethod
    def from_rows(
        cls,
        n: int,
        stabilizer: Sequence[PauliVector],
        normalizer_rows: Sequence[PauliVector] = (),
        translations: Sequence[PauliVector] = (),
        q: int = 2,
        claimed_d: Optional[int] = None,
    ) -> "HybridCode":
        """Build a code whose 2k normalizer rows need not be in pair order."""
        pairs, leftover = symplectic_gram_schmidt(normalizer_rows)
        if leftover:
            raise InvalidCodeError(
                f"normalizer rows do not split into anticommuting pairs, {leftover[0]} is unpaired",
                section="logicals",
            )
        return cls(
            n=n,
            stabilizer=tuple(stabilizer),
            logicals=tuple(pairs),
            translations=tuple(translations),
            q=q,
            claimed_d=claimed_d,
        )


@dataclass(frozen=True)
class DerivedCodes:
    """The chain C <= C0 <= C0* <= C* of a hybrid code."""

    n: int
    c: AdditiveCode
    c0: AdditiveCode
    c0_star: AdditiveCode
    c_star: AdditiveCode

    @property
    def ranks(self) -> Tuple[int, int, int, int]:
        return (self.c.rank, self.c0.rank, self.c0_star.rank, self.c_star.rank)

    def split_basis(self) -> Tuple[List[PauliVector], List[PauliVector]]:
        """Basis of C0 followed by vectors completing it to a basis of C*."""
        return list(self.c0.generators), coset_basis(self.c0, self.c_star.generators)


def _check_lengths(h: HybridCode) -> None:
    sections = (
        ("stabilizer", list(h.stabilizer)),
        ("logicals", h.logical_rows),
        ("translations", list(h.translations)),
    )
    for section, rows in sections:
        for i, row in enumerate(rows):
            if row.n != h.n:
                raise InvalidCodeError(
                    f"row has length {row.n}, expected {h.n}", section=section, index=i
                )


def _check_independent(
    base: Sequence[PauliVector], rows: Sequence[PauliVector], n: int, section: str
) -> AdditiveCode:
    current = rref(base, n)
    for i, row in enumerate(rows):
        if contains(current, row):
            raise InvalidCodeError("dependent row", section=section, index=i)
        current = rref(list(current.generators) + [row], n)
    return current


def validate(h: HybridCode) -> DerivedCodes:
    """Check every code invariant and build the four nested codes."""
    require_qubits(h.q)
    _check_lengths(h)
    n, k, m = h.n, h.k, h.m
    if len(h.stabilizer) != n - k:
        raise InvalidCodeError(
            f"expected {n - k} stabilizer rows for k={k}, got {len(h.stabilizer)}",
            section="stabilizer",
        )
    if k + m > n:
        raise InvalidCodeError(f"k + m = {k + m} exceeds n = {n}")

    stab = list(h.stabilizer)
    for i in range(len(stab)):
        for j in range(i + 1, len(stab)):
            if symplectic_product(stab[i], stab[j]):
                raise InvalidCodeError(
                    f"stabilizer rows {i} and {j} anticommute", section="stabilizer", index=j
                )
    c0 = _check_independent([], stab, n, "stabilizer")

    rows = h.logical_rows
    for i, row in enumerate(rows):
        for j, s in enumerate(stab):
            if symplectic_product(row, s):
                raise InvalidCodeError(
                    f"logical anticommutes with stabilizer row {j}", section="logicals", index=i
                )
    for a in range(k):
        for b in range(k):
            for ia in range(2):
                for ib in range(2):
                    expected = 1 if (a == b and ia != ib) else 0
                    if symplectic_product(h.logicals[a][ia], h.logicals[b][ib]) != expected:
                        raise InvalidCodeError(
                            f"logical pairs {a} and {b} break the pair structure",
                            section="logicals",
                            index=2 * max(a, b) + ib,
                        )
    c0_star = _check_independent(c0.generators, rows, n, "logicals")

    c_star = _check_independent(c0_star.generators, list(h.translations), n, "translations")
    c = symplectic_dual(c_star)

    derived = DerivedCodes(n=n, c=c, c0=c0, c0_star=c0_star, c_star=c_star)
    expected_ranks = (n - k - m, n - k, n + k, n + k + m)
    if derived.ranks != expected_ranks:
        raise InvalidCodeError(f"rank chain {derived.ranks} != {expected_ranks}")
    if not (c <= c0 and c0 <= c0_star and c0_star <= c_star):
        raise InvalidCodeError("nested chain C <= C0 <= C0* <= C* is broken")
    logger.debug("Code validated", n=n, k=k, m=m, ranks=derived.ranks)
    return derived
