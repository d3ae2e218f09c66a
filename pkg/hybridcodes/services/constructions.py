"""Constructions of hybrid codes from quantum, classical and nested codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import structlog

from ..core.exceptions import (
    DegenerateTranslationError,
    FactorizationError,
    InvalidCodeError,
    PreconditionError,
)
from ..models.classical import ClassicalCode
from ..models.hybrid_code import CodeParameters, HybridCode, validate
from ..models.symplectic import (
    AdditiveCode,
    PauliVector,
    contains,
    coset_basis,
    is_self_orthogonal,
    rref,
    symplectic_dual,
    symplectic_gram_schmidt,
)

logger = structlog.get_logger(__name__)


def _log2_exact(value: int, what: str) -> int:
    if value < 1 or value & (value - 1):
        raise FactorizationError(f"{what} {value} is not a power of 2")
    return value.bit_length() - 1


def from_quantum_code(params: Tuple[int, int, int], split: Tuple[int, int]) -> CodeParameters:
    """Parameters of the hybrid code obtained by factoring a dimension-K*M code as K x M.

    ``params`` is (n, dimension, d) and ``split`` is (K, M).
    """
    n, dimension, d = params
    big_k, big_m = split
    if big_k * big_m != dimension:
        raise FactorizationError(f"split {big_k} x {big_m} does not factor dimension {dimension}")
    k = _log2_exact(big_k, "quantum dimension")
    m = _log2_exact(big_m, "number of classical messages")
    return CodeParameters(n=n, k=k, m=m, d=d)


def qudit_to_classical(h: HybridCode) -> HybridCode:
    """Trade the last logical qubit for one classical bit: [[n,k:m,d]] -> [[n,k-1:m+1,d]]."""
    if h.k < 1:
        raise PreconditionError("code has no logical qubit to convert")
    x_bar, z_bar = h.logicals[-1]
    return HybridCode(
        n=h.n,
        stabilizer=h.stabilizer + (z_bar,),
        logicals=h.logicals[:-1],
        translations=h.translations + (x_bar,),
        q=h.q,
        claimed_d=h.claimed_d,
    )


def convert_all_to_classical(h: HybridCode) -> HybridCode:
    """Apply ``qudit_to_classical`` until no logical qubit is left."""
    while h.k:
        h = qudit_to_classical(h)
    return h


def realize_split(h: HybridCode, m: int) -> HybridCode:
    """Turn m of the logical qubits of ``h`` into classical bits."""
    if not 0 <= m <= h.k:
        raise FactorizationError(f"cannot move {m} of {h.k} logical qubits to classical bits")
    for _ in range(m):
        h = qudit_to_classical(h)
    return h


def _pad_code(h: HybridCode, count: int) -> Tuple[Tuple[PauliVector, ...], ...]:
    stabilizer = tuple(s.pad(count) for s in h.stabilizer) + tuple(
        PauliVector.single(h.n + count, h.n + j, "Z") for j in range(count)
    )
    logicals = tuple((x.pad(count), z.pad(count)) for x, z in h.logicals)
    translations = tuple(t.pad(count) for t in h.translations)
    return stabilizer, logicals, translations


def append_zero_qubits(h: HybridCode, count: int) -> HybridCode:
    """Append ``count`` qubits prepared in |0>, each stabilized by its own Z."""
    if count < 0:
        raise PreconditionError(f"cannot append {count} qubits")
    if count == 0:
        return h
    stabilizer, logicals, translations = _pad_code(h, count)
    return HybridCode(
        n=h.n + count,
        stabilizer=stabilizer,
        logicals=logicals,
        translations=translations,
        q=h.q,
        claimed_d=h.claimed_d,
    )


def juxtapose(q: HybridCode, classical: ClassicalCode) -> HybridCode:
    """Quantum code on the first block, classical code as X-type translations on the second."""
    if q.m:
        raise PreconditionError("juxtapose expects a code without classical bits")
    n2 = classical.n
    stabilizer, logicals, _ = _pad_code(q, n2)
    translations = tuple(PauliVector.identity(q.n).pad(n2, x=row) for row in classical.rows)
    h = HybridCode(
        n=q.n + n2,
        stabilizer=stabilizer,
        logicals=logicals,
        translations=translations,
        q=q.q,
    )
    validate(h)
    return h


def _independent_translations(
    normalizer: AdditiveCode, extra: Sequence[PauliVector], section: str = "translations"
) -> None:
    current = normalizer
    for i, t in enumerate(extra):
        if contains(current, t):
            raise DegenerateTranslationError(
                f"{section} row {i} ({t}) lies in the normalizer code or the span of earlier rows"
            )
        current = rref(list(current.generators) + [t], normalizer.n)


def build_from_code_pair(
    c0: AdditiveCode, extra: Sequence[PauliVector], claimed_d: Optional[int] = None
) -> HybridCode:
    """Hybrid code with stabilizer ``c0`` and translation generators ``extra``."""
    if not is_self_orthogonal(c0.generators):
        raise PreconditionError("stabilizer code is not self-orthogonal")
    normalizer = symplectic_dual(c0)
    pairs, leftover = symplectic_gram_schmidt(coset_basis(c0, normalizer.generators))
    if leftover:
        raise InvalidCodeError("normalizer does not split into logical pairs", section="logicals")
    _independent_translations(normalizer, extra)
    h = HybridCode(
        n=c0.n,
        stabilizer=c0.generators,
        logicals=tuple(pairs),
        translations=tuple(extra),
        claimed_d=claimed_d,
    )
    logger.debug("Code assembled from stabilizer and translations", n=h.n, k=h.k, m=h.m)
    return h


@dataclass(frozen=True)
class ConstructionXInput:
    """Nested codes C1 inside C2 on n qubits plus a classical code [n3, k2 - k1, d3].

    ``g12`` extends the normalizer of ``inner`` to the normalizer of the outer
    code; row i is glued to classical row i.
    """

    inner: HybridCode
    g12: Tuple[PauliVector, ...]
    classical: ClassicalCode
    claimed: Optional[Tuple[int, int, int]] = None

    def check(self) -> None:
        if self.inner.m:
            raise InvalidCodeError("inner code must not carry classical bits", section="inner")
        derived = validate(self.inner)
        if len(self.g12) != self.classical.dimension:
            raise InvalidCodeError(
                f"{len(self.g12)} extension rows but the classical code has "
                f"{self.classical.dimension} generators",
                section="classical",
            )
        if self.classical.rank != self.classical.dimension:
            raise InvalidCodeError("classical generators are dependent", section="classical")
        for i, g in enumerate(self.g12):
            if g.n != self.inner.n:
                raise InvalidCodeError(
                    f"row has length {g.n}, expected {self.inner.n}", section="g12", index=i
                )
        try:
            _independent_translations(derived.c0_star, self.g12, section="g12")
        except DegenerateTranslationError as e:
            raise InvalidCodeError(str(e), section="g12") from None
        if self.inner.n + self.classical.n > 64:
            raise InvalidCodeError("construction exceeds 64 qubits")

    @classmethod
    def from_nested(
        cls,
        inner: HybridCode,
        outer: HybridCode,
        classical: ClassicalCode,
        claimed: Optional[Tuple[int, int, int]] = None,
    ) -> "ConstructionXInput":
        """Derive the extension rows from an outer code whose code space contains the inner one."""
        if inner.n != outer.n:
            raise InvalidCodeError(f"nested codes differ in length: {inner.n} != {outer.n}")
        if inner.m or outer.m:
            raise InvalidCodeError("nested codes must not carry classical bits")
        inner_codes = validate(inner)
        outer_codes = validate(outer)
        if not (outer_codes.c0 <= inner_codes.c0 and inner_codes.c0_star <= outer_codes.c0_star):
            raise InvalidCodeError("inner code is not contained in the outer code", section="g12")
        g12 = coset_basis(inner_codes.c0_star, outer_codes.c0_star.generators)
        return cls(inner=inner, g12=tuple(g12), classical=classical, claimed=claimed)


def construction_x(inp: ConstructionXInput) -> HybridCode:
    """[[n + n3, k1 : k2 - k1, d]] with d >= min(d1, d2 + d3)."""
    inp.check()
    n3 = inp.classical.n
    stabilizer, logicals, _ = _pad_code(inp.inner, n3)
    translations = tuple(g.pad(n3, x=row) for g, row in zip(inp.g12, inp.classical.rows))
    claimed_d = None
    if inp.claimed is not None:
        d1, d2, d3 = inp.claimed
        claimed_d = min(d1, d2 + d3)
    h = HybridCode(
        n=inp.inner.n + n3,
        stabilizer=stabilizer,
        logicals=logicals,
        translations=translations,
        q=inp.inner.q,
        claimed_d=claimed_d,
    )
    validate(h)
    logger.info("Construction X applied", n=h.n, k=h.k, m=h.m, claimed_d=claimed_d)
    return h
