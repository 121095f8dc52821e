"""SQLAlchemy model for one recorded verification run."""

from __future__ import annotations

from sqlalchemy import Column, Integer, Text

from ..db.session import Base


class VerificationRun(Base):
    """A ``verify``/``spoiler`` report kept for later comparison."""

    __tablename__ = "verification_runs"
    __allow_unmapped__ = True

    id = Column(Integer, primary_key=True, index=True)
    command = Column(Text, nullable=False, index=True)
    formula = Column(Text, nullable=True)
    signature = Column(Text, nullable=False)
    seed = Column(Integer, nullable=True)
    verdict = Column(Text, nullable=False)
    counterexample_count = Column(Integer, nullable=False, default=0)
    report_json = Column(Text, nullable=False)
    created_at = Column(Text, nullable=False)


__all__ = ["VerificationRun"]
