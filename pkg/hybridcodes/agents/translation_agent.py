"""Translation agent: greedily add classical generators to a quantum code.

A candidate t is judged by its syndrome on the stabilizer generators. The
coset C0* + t is determined by that syndrome, so the enlarged code keeps
distance d iff the syndrome avoids the forbidden set

    G = (F + span) | span

where F holds the nonzero syndromes of Paulis with weight below d and span
holds the syndromes of the translations accepted so far. Accepting sigma
turns G into G | (G + sigma).
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np
import structlog

from ..core.exceptions import InconsistencyError, PreconditionError
from ..models.hybrid_code import HybridCode, validate
from ..models.symplectic import PauliVector
from ..services.analysis import verify_distance_sweep
from ..services.enumeration import (
    WeightBatch,
    iter_weight_batches,
    low_weight_syndromes,
    syndrome_bits,
    syndrome_table,
)
from .base_agent import AgentResult, BaseAgent, SearchContext
from .config import SearchConfig, SearchStrategy

logger = structlog.get_logger(__name__)

RANDOM_BATCH = 4096


@dataclass
class TranslationOutcome:
    """Code after the search plus the trial indices of every accepted candidate."""

    code: HybridCode
    trials: int = 0
    accepted_at: List[int] = field(default_factory=list)


class ForbiddenSyndromes:
    """Forbidden set G over the 2^(n-k) stabilizer syndromes."""

    def __init__(self, low_weight: Set[int], span: Set[int], num_checks: int):
        self.capacity = 1 << num_checks
        self.forbidden = {f ^ s for f in low_weight for s in span} | span
        self._sorted = np.array(sorted(self.forbidden), dtype=np.uint64)

    @property
    def full(self) -> bool:
        return len(self.forbidden) >= self.capacity

    def allows(self, sigma: int) -> bool:
        return sigma not in self.forbidden

    def allowed_mask(self, syndromes: np.ndarray) -> np.ndarray:
        return ~np.isin(syndromes, self._sorted, assume_unique=False)

    def accept(self, sigma: int) -> None:
        self.forbidden |= {g ^ sigma for g in self.forbidden}
        self._sorted = np.array(sorted(self.forbidden), dtype=np.uint64)


def _exhaustive_candidates(
    n: int, table: np.ndarray, target_d: int
) -> Iterator[Tuple[np.ndarray, WeightBatch]]:
    for batch in iter_weight_batches(n, target_d, n):
        yield batch.all_syndromes(table)[:, :, 0].reshape(-1), batch


def _random_vector(n: int, codes: np.ndarray) -> PauliVector:
    x = sum(1 << p for p in range(n) if codes[p] & 1)
    z = sum(1 << p for p in range(n) if codes[p] & 2)
    return PauliVector(n, x, z)


def _search_exhaustive(
    h: HybridCode, table: np.ndarray, g: ForbiddenSyndromes, max_trials: int, target_d: int
) -> Tuple[List[PauliVector], List[int], int]:
    accepted: List[PauliVector] = []
    accepted_at: List[int] = []
    trial = 0
    for syndromes, batch in _exhaustive_candidates(h.n, table, target_d):
        offset = 0
        while offset < len(syndromes):
            if trial >= max_trials or g.full:
                return accepted, accepted_at, trial
            window = syndromes[offset : offset + max_trials - trial]
            ok = g.allowed_mask(window)
            if not ok.any():
                trial += len(window)
                offset += len(window)
                continue
            pos = int(np.argmax(ok))
            g.accept(int(window[pos]))
            accepted.append(batch.vector(h.n, offset + pos))
            accepted_at.append(trial + pos)
            trial += pos + 1
            offset += pos + 1
    return accepted, accepted_at, trial


def _search_randomized(
    h: HybridCode, table: np.ndarray, g: ForbiddenSyndromes, max_trials: int, rng_seed: int
) -> Tuple[List[PauliVector], List[int], int]:
    n = h.n
    rng = np.random.default_rng(rng_seed)
    # column c of lut[p] is the syndrome of I, X, Z, Y on qubit p
    lut = np.zeros((n, 4), dtype=np.uint64)
    lut[:, 1] = table[:, 0, 0]
    lut[:, 2] = table[:, 1, 0]
    lut[:, 3] = table[:, 2, 0]
    accepted: List[PauliVector] = []
    accepted_at: List[int] = []
    trial = 0
    while trial < max_trials and not g.full:
        size = min(RANDOM_BATCH, max_trials - trial)
        codes = rng.integers(0, 4, size=(size, n), dtype=np.uint8)
        syndromes = np.bitwise_xor.reduce(lut[np.arange(n), codes], axis=1)
        for i in range(size):
            sigma = int(syndromes[i])
            if g.allows(sigma):
                g.accept(sigma)
                accepted.append(_random_vector(n, codes[i]))
                accepted_at.append(trial + i)
                if g.full:
                    return accepted, accepted_at, trial + i + 1
        trial += size
    return accepted, accepted_at, trial


def search_translations(
    h: HybridCode, cfg: SearchConfig, cap: Optional[int] = None
) -> TranslationOutcome:
    """Run the greedy search and report which trials were accepted."""
    derived = validate(h)
    if not verify_distance_sweep(derived, cfg.target_d, cap=cap):
        raise PreconditionError(f"input code has distance below {cfg.target_d}")
    if cfg.max_trials == 0:
        return TranslationOutcome(code=h)

    checks = list(h.stabilizer)
    if len(checks) > 64:
        raise PreconditionError(f"{len(checks)} stabilizer rows exceed one syndrome word")
    low = low_weight_syndromes(h.n, checks, cfg.target_d - 1, cap=cap) - {0}
    span = {0}
    for t in h.translations:
        sigma = syndrome_bits(t, checks)
        span |= {s ^ sigma for s in span}
    g = ForbiddenSyndromes(low, span, len(checks))
    table = syndrome_table(h.n, checks)
    logger.info(
        "Translation search started",
        code=h.label(),
        strategy=cfg.strategy.value,
        forbidden=len(g.forbidden),
        syndromes=g.capacity,
    )

    if cfg.strategy == SearchStrategy.EXHAUSTIVE:
        accepted, accepted_at, trials = _search_exhaustive(
            h, table, g, cfg.max_trials, cfg.target_d
        )
    else:
        accepted, accepted_at, trials = _search_randomized(
            h, table, g, cfg.max_trials, cfg.rng_seed
        )

    code = HybridCode(
        n=h.n,
        stabilizer=h.stabilizer,
        logicals=h.logicals,
        translations=h.translations + tuple(accepted),
        q=h.q,
        claimed_d=cfg.target_d,
    )
    if not verify_distance_sweep(validate(code), cfg.target_d, cap=cap):
        raise InconsistencyError(f"translation search produced {code.label()} below distance")
    logger.info("Translation search finished", code=code.label(), trials=trials)
    return TranslationOutcome(code=code, trials=trials, accepted_at=accepted_at)


def find_translations(h: HybridCode, cfg: SearchConfig) -> HybridCode:
    """Add translation generators to ``h`` while the hybrid distance stays >= cfg.target_d."""
    return search_translations(h, cfg).code


class TranslationAgent(BaseAgent):
    """Agent growing the classical part of a code."""

    def __init__(self):
        super().__init__(
            name="translation_agent",
            description="Adds translation generators that keep the target distance",
        )

    def can_handle(self, context: SearchContext) -> bool:
        return context.code is not None

    def execute(self, context: SearchContext) -> AgentResult:
        outcome = search_translations(context.code, context.config)
        trial = outcome.accepted_at[-1] if outcome.accepted_at else None
        return self.completed(
            {"code": outcome.code, "trials": outcome.trials, "trial": trial},
            ["promote_logicals"] if outcome.code.m else None,
        )
