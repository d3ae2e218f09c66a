"""Search configuration."""

from enum import Enum

from pydantic import BaseModel, Field


class SearchStrategy(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOMIZED = "randomized"


class SearchConfig(BaseModel):
    """Targets and budget of a search run."""

    target_d: int = Field(ge=2)
    target_k: int = Field(default=1, ge=0)
    max_trials: int = Field(default=10_000, ge=0)
    rng_seed: int = Field(default=0, ge=0, lt=2**64)
    strategy: SearchStrategy = SearchStrategy.EXHAUSTIVE
