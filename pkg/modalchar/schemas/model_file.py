"""Beginner-friendly overview for this module.

WHAT: The JSON shape of a pointed model file.
WHEN: Used whenever a model is read from or written to disk.
WHY: Validation happens here, before any state id reaches the domain code,
so a bad file fails with a message that names the offending field.
HOW: ``ModelFile`` forbids unknown keys; the model validator checks that
edges, the point and every valuation refer to declared states and names.

File: modalchar/schemas/model_file.py
"""


from __future__ import annotations
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import List


class StateRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1)
    props: List[str] = Field(default_factory=list)


class ModelFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    signature: List[str] = Field(default_factory=list)
    states: List[StateRecord] = Field(min_length=1)
    edges: List[List[str]] = Field(default_factory=list)
    point: str

    @field_validator("edges")
    @classmethod
    def _edges_are_pairs(cls, value: List[List[str]]) -> List[List[str]]:
        for edge in value:
            if len(edge) != 2:
                raise ValueError(f"edge {edge} must have exactly two endpoints")
        return value

    @model_validator(mode="after")
    def _references_resolve(self) -> "ModelFile":
        ids = [state.id for state in self.states]
        if len(set(ids)) != len(ids):
            raise ValueError("state ids must be unique")
        known = set(ids)
        if self.point not in known:
            raise ValueError(f"point {self.point!r} is not a declared state")
        for source, target in self.edges:
            if source not in known or target not in known:
                raise ValueError(f"edge [{source!r}, {target!r}] mentions an undeclared state")
        names = set(self.signature)
        if len(names) != len(self.signature):
            raise ValueError("signature names must be unique")
        for state in self.states:
            extra = set(state.props) - names
            if extra:
                raise ValueError(f"state {state.id!r} uses {sorted(extra)} outside the signature")
        return self


__all__ = ["ModelFile", "StateRecord"]
