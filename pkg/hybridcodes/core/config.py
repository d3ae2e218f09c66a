"""Core configuration for the hybrid code toolkit."""

from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Toolkit settings, read from HYBRIDCODES_* environment variables."""

    app_name: str = "hybridcodes"
    version: str = "0.1.0"

    # Full span enumeration
    enumeration_rank_cap: int = 30
    enumeration_block_rank: int = 16

    # Low-weight error sweeps
    sweep_cap: int = 10**9
    sweep_batch_size: int = 2**20

    # Dense state-vector verifier
    dense_max_qubits: int = 10
    dense_tolerance: float = 1e-9

    # Parallelism for enumeration and sweeps; results do not depend on it
    threads: int = 1

    # Integer feasibility
    lp_soft_max_n: int = 20
    bnb_restart_nodes: int = 100_000

    # Search
    search_log_path: Optional[str] = None

    # Logging
    log_level: str = "INFO"
    log_json: bool = False

    class Config:
        env_prefix = "HYBRIDCODES_"
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"


def get_settings() -> Settings:
    """Get toolkit settings."""
    return Settings()
