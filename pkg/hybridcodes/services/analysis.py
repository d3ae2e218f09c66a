"""Certification of hybrid codes: enumerators, transforms, distances and impurity."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, NamedTuple, Optional, Sequence, Tuple

import structlog

from ..core.exceptions import InconsistencyError, require_qubits
from ..models.hybrid_code import DerivedCodes
from ..models.symplectic import AdditiveCode, PauliVector, coset_basis
from .enumeration import SpanEnumerator, first_hybrid_violation
from .krawtchouk import apply_matrix, krawtchouk_matrix, shadow_matrix

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact weight distribution A_0..A_n."""

    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, w: int) -> int:
        return self.coeffs[w]

    def to_json(self) -> List[str]:
        """Coefficients as decimal strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def full_space(cls, n: int) -> "WeightEnumerator":
        return cls(n, tuple(comb(n, w) * 3**w for w in range(n + 1)))


def weight_enumerator(
    c: AdditiveCode, cap: Optional[int] = None, threads: Optional[int] = None
) -> WeightEnumerator:
    """Weight distribution of ``c`` by full span enumeration."""
    enumerator = SpanEnumerator(c.n, c.generators, cap=cap, threads=threads)
    logger.debug("Enumerating span", n=c.n, rank=c.rank, blocks=enumerator.num_blocks)
    return WeightEnumerator(c.n, tuple(enumerator.histogram()))


def _divide(values: Sequence[int], source_size: int, what: str) -> Tuple[int, ...]:
    if source_size <= 0:
        raise InconsistencyError(f"{what}: source size must be positive, got {source_size}")
    out = []
    for w, v in enumerate(values):
        quotient, remainder = divmod(v, source_size)
        if remainder:
            raise InconsistencyError(
                f"{what}: coefficient {w} is {v}/{source_size}, not an integer"
            )
        out.append(quotient)
    return tuple(out)


def macwilliams(w: WeightEnumerator, source_size: int, q: int = 2) -> WeightEnumerator:
    """Enumerator of the symplectic dual: W(X + 3Y, X - Y) / source_size."""
    require_qubits(q)
    raw = apply_matrix(krawtchouk_matrix(w.n), w.coeffs)
    return WeightEnumerator(w.n, _divide(raw, source_size, "MacWilliams transform"))


def shadow(w: WeightEnumerator, source_size: int, q: int = 2) -> Tuple[int, ...]:
    """Shadow coefficients W(X + 3Y, Y - X) / source_size; may be negative."""
    require_qubits(q)
    raw = apply_matrix(shadow_matrix(w.n), w.coeffs)
    return _divide(raw, source_size, "shadow transform")


def min_weight_outside(
    inner: AdditiveCode,
    outer: AdditiveCode,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
) -> Tuple[int, Optional[PauliVector]]:
    """Lightest element of ``outer`` not in ``inner`` (inner must be a subcode).

    Returns (n + 1, None) when the two codes coincide.
    """
    extension = coset_basis(inner, outer.generators)
    if not extension:
        return inner.n + 1, None
    generators = list(inner.generators) + extension
    enumerator = SpanEnumerator(inner.n, generators, cap=cap, threads=threads)
    weight, index = enumerator.min_weight(skip=inner.rank)
    return weight, enumerator.element(index)


def min_nonzero_weight(
    c: AdditiveCode, cap: Optional[int] = None, threads: Optional[int] = None
) -> Tuple[int, Optional[PauliVector]]:
    if c.rank == 0:
        return c.n + 1, None
    enumerator = SpanEnumerator(c.n, c.generators, cap=cap, threads=threads)
    weight, index = enumerator.min_weight(skip=0)
    return weight, enumerator.element(index)


def hybrid_distance_witness(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> Tuple[int, Optional[PauliVector]]:
    """Minimum weight over C* minus C0 with a word attaining it."""
    weight, word = min_weight_outside(derived.c0, derived.c_star, cap=cap, threads=threads)
    if word is None:
        # no logical qubits and no classical bits: distance of the stabilizer state
        weight, word = min_nonzero_weight(derived.c0, cap=cap, threads=threads)
    logger.debug("Hybrid distance computed", n=derived.n, d=weight, witness=str(word))
    return weight, word


def hybrid_distance_full(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> int:
    return hybrid_distance_witness(derived, cap=cap, threads=threads)[0]


def union_code_distance(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> int:
    """Distance of the stabilizer code spanned by all translated codes: min wgt C* minus C."""
    weight, word = min_weight_outside(derived.c, derived.c_star, cap=cap, threads=threads)
    if word is None:
        weight, _ = min_nonzero_weight(derived.c, cap=cap, threads=threads)
    return weight


def translated_code_distance(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> int:
    """Distance of each translated code on its own: min wgt C0* minus C0."""
    weight, word = min_weight_outside(derived.c0, derived.c0_star, cap=cap, threads=threads)
    if word is None:
        weight, _ = min_nonzero_weight(derived.c0, cap=cap, threads=threads)
    return weight


def sweep_witness(
    derived: DerivedCodes,
    target_d: int,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
) -> Optional[PauliVector]:
    """Lightest v with weight below ``target_d`` in C* but not in C0, or None."""
    if target_d <= 1:
        return None
    # v is in C* iff it commutes with C; then v is in C0 iff it also commutes with C0*/C
    coset_checks = coset_basis(derived.c, derived.c0_star.generators)
    return first_hybrid_violation(
        derived.n,
        derived.c.generators,
        coset_checks,
        target_d - 1,
        threads=threads,
        cap=cap,
    )


def verify_distance_sweep(
    derived: DerivedCodes,
    target_d: int,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
) -> bool:
    """True iff the hybrid distance is at least ``target_d``."""
    witness = sweep_witness(derived, target_d, cap=cap, threads=threads)
    if witness is not None:
        logger.info("Distance sweep found a witness", target_d=target_d, witness=str(witness))
    return witness is None


class ImpurityReport(NamedTuple):
    d_code: int
    d_naive: int
    impure: bool


def impurity_check(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> ImpurityReport:
    """Compare min wgt of C0* minus C0 with min nonzero wgt of C0*."""
    d_code = translated_code_distance(derived, cap=cap, threads=threads)
    d_naive, _ = min_nonzero_weight(derived.c0_star, cap=cap, threads=threads)
    return ImpurityReport(d_code=d_code, d_naive=d_naive, impure=d_naive < d_code)


@dataclass(frozen=True)
class CodeEnumerators:
    """The four enumerators of a hybrid code: C0, C0*, C and C*."""

    c0: WeightEnumerator
    c0_star: WeightEnumerator
    c: WeightEnumerator
    c_star: WeightEnumerator

    def nested(self) -> bool:
        """Coefficient-wise C <= C0 <= C0* <= C*."""
        return all(
            b <= a <= a_star <= b_star
            for b, a, a_star, b_star in zip(
                self.c.coeffs, self.c0.coeffs, self.c0_star.coeffs, self.c_star.coeffs
            )
        )


def code_enumerators(
    derived: DerivedCodes, cap: Optional[int] = None, threads: Optional[int] = None
) -> CodeEnumerators:
    """Enumerate C0 and C directly and obtain their duals by MacWilliams."""
    w_c0 = weight_enumerator(derived.c0, cap=cap, threads=threads)
    w_c = weight_enumerator(derived.c, cap=cap, threads=threads)
    return CodeEnumerators(
        c0=w_c0,
        c0_star=macwilliams(w_c0, derived.c0.size),
        c=w_c,
        c_star=macwilliams(w_c, derived.c.size),
    )
