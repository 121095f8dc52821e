"""CRUD helpers for the verification run ledger."""

from __future__ import annotations

from datetime import datetime, timezone

from sqlalchemy import desc, select
from sqlalchemy.orm import Session

from ..models.run import VerificationRun
from ..schemas.report import VerificationReport


def _utcnow() -> str:
    return datetime.now(timezone.utc).replace(tzinfo=None).isoformat(timespec="seconds") + "Z"


def record_run(db: Session, payload: dict) -> VerificationRun:
    command = (payload.get("command") or "").strip()
    if not command:
        raise ValueError("command is required")
    report = payload.get("report")
    if not isinstance(report, VerificationReport):
        raise ValueError("report must be a VerificationReport")
    signature = payload.get("signature") or []
    run = VerificationRun(
        command=command,
        formula=(payload.get("formula") or None),
        signature=",".join(signature),
        seed=payload.get("seed"),
        verdict=report.verdict,
        counterexample_count=len(report.counterexamples),
        report_json=report.model_dump_json(),
        created_at=_utcnow(),
    )
    db.add(run)
    db.commit()
    db.refresh(run)
    return run


def list_runs(db: Session, limit: int = 50, offset: int = 0, command: str | None = None):
    stmt = select(VerificationRun)
    if command:
        stmt = stmt.where(VerificationRun.command == command)
    stmt = stmt.order_by(desc(VerificationRun.id)).limit(limit).offset(offset)
    return db.execute(stmt).scalars().all()


def get_run(db: Session, run_id: int) -> VerificationRun | None:
    return db.get(VerificationRun, run_id)


__all__ = ["get_run", "list_runs", "record_run"]
