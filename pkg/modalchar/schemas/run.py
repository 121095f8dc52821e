"""Beginner-friendly overview for this module.

WHAT: Read model for rows of the verification run ledger.
WHEN: Returned by the ``runs`` command and by ``crud.runs`` callers.
WHY: Keeps the SQLAlchemy row type out of anything that prints or serialises.
HOW: ``from_attributes`` lets pydantic read straight from the ORM object.

File: modalchar/schemas/run.py
"""


from __future__ import annotations
from pydantic import BaseModel
from typing import Optional


class RunOut(BaseModel):
    id: int
    command: str
    formula: Optional[str]
    signature: str
    seed: Optional[int]
    verdict: str
    counterexample_count: int
    report_json: str
    created_at: str

    class Config:
        from_attributes = True


__all__ = ["RunOut"]
