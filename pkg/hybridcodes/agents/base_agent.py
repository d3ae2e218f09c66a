"""Search stage lifecycle shared by the seed, translation and promotion agents."""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional

import structlog

from ..core.exceptions import HybridCodeError
from ..models.codefile import SeedCode
from ..models.hybrid_code import HybridCode
from .config import SearchConfig

logger = structlog.get_logger(__name__)


class AgentStatus(Enum):
    IDLE = "idle"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class SearchContext:
    """State handed from one search stage to the next for a single seed."""

    config: SearchConfig
    seed: Optional[SeedCode] = None
    code: Optional[HybridCode] = None
    # index of the translation trial that produced ``code``
    trial: int = 0
    metadata: Dict[str, Any] = field(default_factory=dict)


@dataclass
class AgentResult:
    """Outcome of one stage; ``data["code"]`` holds the code passed on."""

    agent_name: str
    status: AgentStatus
    data: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    execution_time: Optional[float] = None
    next_actions: List[str] = field(default_factory=list)

    @property
    def code(self) -> Optional[HybridCode]:
        return self.data.get("code")

    @property
    def ok(self) -> bool:
        return self.status == AgentStatus.COMPLETED


class BaseAgent(ABC):
    """A search stage.

    ``run`` wraps ``execute``: it checks the context, times the stage and turns
    toolkit errors into FAILED results. Programming errors propagate.
    """

    def __init__(self, name: str, description: str = ""):
        self.name = name
        self.description = description
        self.status = AgentStatus.IDLE
        self.last_execution: Optional[datetime] = None
        self.execution_count = 0
        self.success_count = 0
        self.failure_count = 0
        self.total_time = 0.0
        self.logger = logger.bind(agent=name)

    @abstractmethod
    def execute(self, context: SearchContext) -> AgentResult:
        """Run the stage on a validated context."""

    @abstractmethod
    def can_handle(self, context: SearchContext) -> bool:
        """Whether the context carries the input this stage consumes."""

    def validate_context(self, context: SearchContext) -> bool:
        return context.config is not None

    def completed(
        self, data: Dict[str, Any], next_actions: Optional[List[str]] = None
    ) -> AgentResult:
        return AgentResult(
            agent_name=self.name,
            status=AgentStatus.COMPLETED,
            data=data,
            next_actions=next_actions or [],
        )

    def failed(self, error: str, data: Optional[Dict[str, Any]] = None) -> AgentResult:
        return AgentResult(
            agent_name=self.name, status=AgentStatus.FAILED, data=data or {}, error=error
        )

    def pre_execute(self, context: SearchContext) -> None:
        self.status = AgentStatus.RUNNING
        self.last_execution = datetime.now(timezone.utc)
        self.execution_count += 1
        self.logger.info("Search stage started", trial=context.trial, **context.metadata)

    def post_execute(self, result: AgentResult) -> None:
        if result.ok:
            self.success_count += 1
        else:
            self.failure_count += 1
        self.status = result.status
        self.total_time += result.execution_time or 0.0
        self.logger.info(
            "Search stage finished",
            status=result.status.value,
            execution_time=result.execution_time,
            error=result.error,
        )

    def run(self, context: SearchContext) -> AgentResult:
        """Check the context, execute and record statistics."""
        if not self.validate_context(context):
            return self.failed("Invalid context")
        if not self.can_handle(context):
            return self.failed("Agent cannot handle this context")

        self.pre_execute(context)
        start = time.perf_counter()
        try:
            result = self.execute(context)
        except HybridCodeError as e:
            self.logger.error("Search stage raised", error=str(e), kind=type(e).__name__)
            result = self.failed(str(e))
        result.execution_time = time.perf_counter() - start
        self.post_execute(result)
        return result

    def get_stats(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "status": self.status.value,
            "execution_count": self.execution_count,
            "success_count": self.success_count,
            "failure_count": self.failure_count,
            "success_rate": self.success_count / max(self.execution_count, 1),
            "total_time": self.total_time,
            "last_execution": self.last_execution.isoformat() if self.last_execution else None,
        }

    def reset_stats(self) -> None:
        self.execution_count = 0
        self.success_count = 0
        self.failure_count = 0
        self.total_time = 0.0
        self.last_execution = None
        self.status = AgentStatus.IDLE
