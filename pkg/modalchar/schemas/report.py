"""Verification report schema shared by every ``verify`` command."""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

VERDICT_PATTERN = "^(pass|fail)$"


class Counterexample(BaseModel):
    reason: str
    formula: Optional[str] = None
    # Model JSON (see ``ModelFile``) when the counterexample is a model.
    model: Optional[Dict[str, Any]] = None
    other_model: Optional[Dict[str, Any]] = None


class VerificationReport(BaseModel):
    verdict: str = Field(pattern=VERDICT_PATTERN)
    counterexamples: List[Counterexample] = Field(default_factory=list)
    stats: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _fail_needs_evidence(self) -> "VerificationReport":
        if self.verdict == "fail" and not self.counterexamples:
            raise ValueError("a failing report must carry at least one counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


__all__ = ["Counterexample", "VERDICT_PATTERN", "VerificationReport"]
