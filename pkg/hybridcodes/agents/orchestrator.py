"""Search campaign over a list of seed codes."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import structlog

from ..core.config import get_settings
from ..models.codefile import SeedCode, serialize
from ..models.hybrid_code import HybridCode
from ..utils.json_encoder import toolkit_jsonable
from .base_agent import AgentResult, SearchContext
from .config import SearchConfig
from .promotion_agent import PromotionAgent
from .seed_agent import ImpureSeedAgent
from .translation_agent import TranslationAgent

logger = structlog.get_logger(__name__)


@dataclass
class CampaignRecord:
    """One improvement of the best code found so far."""

    code: HybridCode
    source: str
    trial: Optional[int]
    rng_seed: int

    def to_json(self) -> Dict[str, Any]:
        return toolkit_jsonable(
            {
                "parameters": {
                    "n": self.code.n,
                    "k": self.code.k,
                    "m": self.code.m,
                    "d": self.code.claimed_d,
                },
                "code": serialize(self.code),
                "rng_seed": self.rng_seed,
                "trial": self.trial,
                "source": self.source,
            }
        )


@dataclass
class CampaignResult:
    best: Optional[HybridCode] = None
    improvements: List[CampaignRecord] = field(default_factory=list)
    results: List[AgentResult] = field(default_factory=list)


def _rank(code: HybridCode) -> Tuple[int, int]:
    return code.k + code.m, code.k


class SearchOrchestrator:
    """Runs impure seed derivation, translation search and promotion per seed."""

    def __init__(self):
        self.agents = {
            "seed": ImpureSeedAgent(),
            "translations": TranslationAgent(),
            "promotion": PromotionAgent(),
        }

    def run_seed(self, seed: SeedCode, config: SearchConfig) -> List[AgentResult]:
        """Chain the three agents on one seed; stops at the first failed stage."""
        context = SearchContext(config=config, seed=seed, metadata={"source": seed.source_id})
        results = []
        for name in ("seed", "translations", "promotion"):
            result = self.agents[name].run(context)
            results.append(result)
            if not result.ok:
                break
            context.code = result.code
            if "trial" in result.data:
                context.trial = result.data["trial"] or 0
        return results

    def run_campaign(
        self,
        seeds: Sequence[SeedCode],
        config: SearchConfig,
        log_path: Optional[Union[str, Path]] = None,
    ) -> CampaignResult:
        """Search every seed and append each improvement of the best code to the log."""
        log_path = log_path or get_settings().search_log_path
        campaign = CampaignResult()
        logger.info("Search campaign started", seeds=len(seeds), target_d=config.target_d)

        for seed in seeds:
            results = self.run_seed(seed, config)
            campaign.results.extend(results)
            if not results[-1].ok:
                continue
            code = results[-1].code
            if campaign.best is not None and _rank(code) <= _rank(campaign.best):
                continue
            trial = next(
                (r.data.get("trial") for r in results if r.agent_name == "translation_agent"),
                None,
            )
            record = CampaignRecord(
                code=code, source=seed.source_id, trial=trial, rng_seed=config.rng_seed
            )
            campaign.best = code
            campaign.improvements.append(record)
            logger.info("Best code improved", code=code.label(), source=seed.source_id)
            if log_path:
                with open(log_path, "a", encoding="utf-8") as f:
                    f.write(json.dumps(record.to_json()) + "\n")

        logger.info(
            "Search campaign finished",
            best=campaign.best.label() if campaign.best else None,
            improvements=len(campaign.improvements),
        )
        return campaign

    def get_agent_stats(self) -> Dict[str, Any]:
        return {name: agent.get_stats() for name, agent in self.agents.items()}


def run_campaign(
    seeds: Sequence[SeedCode],
    config: SearchConfig,
    log_path: Optional[Union[str, Path]] = None,
) -> CampaignResult:
    return SearchOrchestrator().run_campaign(seeds, config, log_path=log_path)
