"""Validated run parameters for the verification commands.

``Bounds`` gathers the knobs every verifier shares; ``RunConfig`` is what the
CLI assembles from its flags before dispatching.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from ..core.config import settings

OUTPUT_FORMATS = ("json", "dot", "text")


class Bounds(BaseModel):
    max_depth: int = Field(default=2, ge=0, le=6)
    max_size: int = Field(default=7, ge=1, le=15)
    # Exhaustive model enumeration is capped at 4 states.
    max_states: int = Field(default=3, ge=1, le=4)
    samples: int = Field(default=settings.DUALITY_SAMPLES, ge=0)
    sample_min_states: int = Field(default=4, ge=1)
    sample_max_states: int = Field(default=6, ge=1)
    edge_density: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = settings.DEFAULT_SEED

    @field_validator("sample_max_states")
    @classmethod
    def _range_is_ordered(cls, value: int, info) -> int:
        low = info.data.get("sample_min_states", 1)
        if value < low:
            raise ValueError("sample_max_states must be >= sample_min_states")
        return value


class RunConfig(BaseModel):
    props: List[str] = Field(default_factory=list)
    bounds: Bounds = Field(default_factory=Bounds)
    out_dir: Optional[str] = None
    formats: List[str] = Field(default_factory=lambda: ["json"])
    jobs: int = Field(default=1, ge=1)
    record: bool = False
    timings: bool = False

    @field_validator("formats")
    @classmethod
    def _known_formats(cls, value: List[str]) -> List[str]:
        unknown = [item for item in value if item not in OUTPUT_FORMATS]
        if unknown:
            raise ValueError(f"unknown output format(s) {unknown}; choose from {list(OUTPUT_FORMATS)}")
        return value


__all__ = ["Bounds", "OUTPUT_FORMATS", "RunConfig"]
