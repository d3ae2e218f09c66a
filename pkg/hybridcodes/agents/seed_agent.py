"""Impure seed agent: turn a self-dual code into an impure [[n, k, d]] code."""

import itertools
from typing import Iterator, List, Optional, Tuple

import numpy as np
import structlog

from ..core.exceptions import PreconditionError
from ..models.codefile import SeedCode
from ..models.hybrid_code import HybridCode, validate
from ..models.symplectic import rref
from ..services.analysis import impurity_check
from ..services.constructions import build_from_code_pair
from .base_agent import AgentResult, BaseAgent, SearchContext
from .config import SearchStrategy

logger = structlog.get_logger(__name__)

Subset = Tuple[int, ...]


def demote(seed: SeedCode, subset: Subset) -> HybridCode:
    """Drop the seed generators at ``subset`` from the stabilizer; they become logicals."""
    kept = [g for i, g in enumerate(seed.generators) if i not in subset]
    return build_from_code_pair(rref(kept, seed.n), [])


def _qualifies(seed: SeedCode, subset: Subset, target_d: int) -> Optional[HybridCode]:
    h = demote(seed, subset)
    report = impurity_check(validate(h))
    if report.d_code >= target_d and report.impure:
        return h.with_claimed_d(report.d_code)
    return None


def _subsets(
    n: int, k: int, strategy: SearchStrategy, max_trials: Optional[int], rng_seed: int
) -> Iterator[Subset]:
    if strategy == SearchStrategy.EXHAUSTIVE:
        subsets: Iterator[Subset] = itertools.combinations(range(n), k)
        yield from itertools.islice(subsets, max_trials)
        return
    rng = np.random.default_rng(rng_seed)
    for _ in range(max_trials or 0):
        yield tuple(sorted(int(i) for i in rng.choice(n, size=k, replace=False)))


def impure_subsets(seed: SeedCode, k: int, target_d: int) -> List[Subset]:
    """Every demotion subset (combinations order) giving an impure code of distance >= target_d."""
    return [s for s in itertools.combinations(range(seed.n), k) if _qualifies(seed, s, target_d)]


def derive_impure_seed(
    seed: SeedCode,
    k: int,
    target_d: int,
    strategy: SearchStrategy = SearchStrategy.EXHAUSTIVE,
    max_trials: Optional[int] = None,
    rng_seed: int = 0,
) -> Optional[HybridCode]:
    """First impure [[n, k]] code with distance >= target_d obtained by demoting k generators."""
    if not 0 <= k < seed.n:
        raise PreconditionError(f"need 0 <= k < n, got k={k} for n={seed.n}")
    if k == 0:
        return HybridCode(n=seed.n, stabilizer=seed.generators)
    for trial, subset in enumerate(_subsets(seed.n, k, strategy, max_trials, rng_seed)):
        h = _qualifies(seed, subset, target_d)
        if h is not None:
            logger.info("Impure code derived", source=seed.source_id, subset=subset, trial=trial)
            return h
    return None


class ImpureSeedAgent(BaseAgent):
    """Agent deriving an impure quantum code from a self-dual seed."""

    def __init__(self):
        super().__init__(
            name="impure_seed_agent",
            description="Demotes seed generators to logical operators and keeps impure codes",
        )

    def can_handle(self, context: SearchContext) -> bool:
        return context.seed is not None

    def execute(self, context: SearchContext) -> AgentResult:
        cfg = context.config
        source = context.seed.source_id
        code = derive_impure_seed(
            context.seed,
            cfg.target_k,
            cfg.target_d,
            strategy=cfg.strategy,
            max_trials=cfg.max_trials if cfg.strategy == SearchStrategy.RANDOMIZED else None,
            rng_seed=cfg.rng_seed,
        )
        if code is None:
            return self.failed("No impure code with the target distance", {"source": source})
        return self.completed({"code": code, "source": source}, ["find_translations"])
