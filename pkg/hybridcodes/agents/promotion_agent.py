"""Promotion agent: trade classical generators for logical qubits.

A product t of translation generators becomes a new logical X with a
stabilizer element s anticommuting with it as partner Z. The stabilizer
shrinks to C0 intersected with the commutant of t, while C* stays the same,
so the distance survives iff every stabilizer element anticommuting with t
has weight >= d.
"""

from typing import List, Optional, Tuple

import structlog

from ..core.exceptions import InconsistencyError
from ..models.hybrid_code import HybridCode, LogicalPair, validate
from ..models.symplectic import PauliVector, rref, symplectic_product
from ..services.analysis import min_weight_outside, verify_distance_sweep
from .base_agent import AgentResult, BaseAgent, SearchContext

logger = structlog.get_logger(__name__)


def _product(vectors: List[PauliVector], mask: int, n: int) -> PauliVector:
    t = PauliVector.identity(n)
    for i, v in enumerate(vectors):
        if mask >> i & 1:
            t = t * v
    return t


def _commute_with_logicals(t: PauliVector, logicals: Tuple[LogicalPair, ...]) -> PauliVector:
    for x_bar, z_bar in logicals:
        if symplectic_product(t, z_bar):
            t = t * x_bar
        if symplectic_product(t, x_bar):
            t = t * z_bar
    return t


def promote_once(h: HybridCode, mask: int) -> HybridCode:
    """Promote the product of the translations selected by ``mask`` to a logical pair."""
    translations = list(h.translations)
    t = _commute_with_logicals(_product(translations, mask, h.n), h.logicals)
    stabilizer = list(h.stabilizer)
    pivot = next(i for i, g in enumerate(stabilizer) if symplectic_product(g, t))
    s = stabilizer[pivot]
    reduced = [
        g * s if symplectic_product(g, t) else g for i, g in enumerate(stabilizer) if i != pivot
    ]
    dropped = mask.bit_length() - 1
    return HybridCode(
        n=h.n,
        stabilizer=tuple(reduced),
        logicals=h.logicals + ((t, s),),
        translations=tuple(v for i, v in enumerate(translations) if i != dropped),
        q=h.q,
        claimed_d=h.claimed_d,
    )


def _keeps_distance(
    h: HybridCode, candidate: HybridCode, target_d: int, cap: Optional[int]
) -> bool:
    inner = rref(candidate.stabilizer, h.n)
    outer = rref(h.stabilizer, h.n)
    weight, _ = min_weight_outside(inner, outer, cap=cap)
    return weight >= target_d


def promote_logicals(h: HybridCode, target_d: int, cap: Optional[int] = None) -> HybridCode:
    """Upgrade translation generators into logical qubit pairs while distance >= target_d.

    Subsets of translations are tried in increasing bitmask order and the
    first that works is applied; the loop restarts until none works.
    """
    current = h
    while current.m:
        for mask in range(1, 1 << current.m):
            candidate = promote_once(current, mask)
            if _keeps_distance(current, candidate, target_d, cap):
                logger.info(
                    "Translation promoted to logical qubit",
                    before=current.label(),
                    after=candidate.label(),
                    mask=mask,
                )
                current = candidate
                break
        else:
            break
    if current is not h and not verify_distance_sweep(validate(current), target_d, cap=cap):
        raise InconsistencyError(f"promotion produced {current.label()} below distance")
    return current


class PromotionAgent(BaseAgent):
    """Agent turning classical generators into logical qubits."""

    def __init__(self):
        super().__init__(
            name="promotion_agent",
            description="Pairs translation generators with stabilizer elements",
        )

    def can_handle(self, context: SearchContext) -> bool:
        return context.code is not None

    def execute(self, context: SearchContext) -> AgentResult:
        code = promote_logicals(context.code, context.config.target_d)
        return self.completed({"code": code, "promoted": code.k - context.code.k})
