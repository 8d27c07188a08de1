from typing import Optional

from pydantic import BaseModel, Field

from ..constants import DEFAULT_MAX_NODES, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, DEFAULT_WORKERS
from ..decompose import DecomposeOptions
from ..wchar import CheckOptions


class RunOptions(BaseModel):
    """Options shared by the command line and the web explorer."""
    json_output: bool = Field(default=False, description="Render JSON instead of text.")
    certificates: bool = Field(default=False, description="Include pseudo-remainder, resultant and cover certificates.")
    seed: int = Field(default=DEFAULT_SEED, description="Seed for sampled ideal elements.")
    sample_count: int = Field(default=DEFAULT_SAMPLE_COUNT, ge=0, description="Sampled ideal elements per check.")
    field: Optional[str] = Field(default=None, description="Field spec overriding the system file: q or fp:P.")
    max_nodes: int = Field(default=DEFAULT_MAX_NODES, ge=1, description="Decomposition node budget.")
    workers: int = Field(default=DEFAULT_WORKERS, ge=1, description="Threads for decomposition and verification.")
    strong: bool = Field(default=False, description="Refine decomposition leaves to strong regular bases.")

    def check_options(self) -> CheckOptions:
        return CheckOptions(sample_count=self.sample_count, seed=self.seed)

    def decompose_options(self) -> DecomposeOptions:
        return DecomposeOptions(max_nodes=self.max_nodes, strong=self.strong, workers=self.workers)
