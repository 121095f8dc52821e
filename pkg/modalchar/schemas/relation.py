"""JSON shape of a relation between two model files."""

from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict, field_validator


class RelationFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    pairs: List[List[str]]

    @field_validator("pairs")
    @classmethod
    def _pairs_have_two_sides(cls, value: List[List[str]]) -> List[List[str]]:
        for pair in value:
            if len(pair) != 2:
                raise ValueError(f"pair {pair} must be [left, right]")
        return value


__all__ = ["RelationFile"]
