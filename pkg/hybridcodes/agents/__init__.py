"""Search stages as agents plus the campaign orchestrator."""

from .base_agent import AgentResult, AgentStatus, BaseAgent, SearchContext
from .config import SearchConfig, SearchStrategy
from .orchestrator import CampaignRecord, CampaignResult, SearchOrchestrator, run_campaign
from .promotion_agent import PromotionAgent, promote_logicals
from .seed_agent import ImpureSeedAgent, derive_impure_seed, impure_subsets
from .translation_agent import TranslationAgent, find_translations, search_translations

__all__ = [
    "AgentResult",
    "AgentStatus",
    "BaseAgent",
    "SearchContext",
    "SearchConfig",
    "SearchStrategy",
    "ImpureSeedAgent",
    "TranslationAgent",
    "PromotionAgent",
    "SearchOrchestrator",
    "CampaignRecord",
    "CampaignResult",
    "derive_impure_seed",
    "impure_subsets",
    "find_translations",
    "search_translations",
    "promote_logicals",
    "run_campaign",
]
