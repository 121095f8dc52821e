"""Tests for the verification run ledger."""

import sys
from pathlib import Path

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.db.session import Base
from modalchar.crud.runs import get_run, list_runs, record_run
from modalchar.schemas.report import Counterexample, VerificationReport
from modalchar.schemas.run import RunOut

# Ensure models are registered so metadata tables are created
from modalchar.models import run as run_model  # noqa: F401


@pytest.fixture()
def db_session():
    engine = create_engine("sqlite://", connect_args={"check_same_thread": False})
    TestingSessionLocal = sessionmaker(bind=engine, autocommit=False, autoflush=False)
    Base.metadata.create_all(bind=engine)
    session = TestingSessionLocal()
    try:
        yield session
    finally:
        session.close()


def _failing_report():
    return VerificationReport(
        verdict="fail",
        counterexamples=[Counterexample(reason="fits the examples but is not equivalent", formula="[]p")],
        stats={"candidates": 3},
    )


def test_record_and_read_back(db_session):
    run = record_run(
        db_session,
        {
            "command": "verify unique",
            "report": _failing_report(),
            "formula": "<>p",
            "signature": ["p", "q"],
            "seed": 7,
        },
    )
    stored = get_run(db_session, run.id)
    assert stored.verdict == "fail"
    assert stored.counterexample_count == 1
    assert stored.signature == "p,q"
    out = RunOut.model_validate(stored)
    assert VerificationReport.model_validate_json(out.report_json) == _failing_report()


def test_list_filters_by_command(db_session):
    passing = VerificationReport(verdict="pass")
    record_run(db_session, {"command": "verify duality", "report": passing})
    record_run(db_session, {"command": "verify minimality", "report": passing})
    record_run(db_session, {"command": "verify duality", "report": passing})
    assert len(list_runs(db_session)) == 3
    duality = list_runs(db_session, command="verify duality")
    assert [r.command for r in duality] == ["verify duality", "verify duality"]
    assert duality[0].id > duality[1].id


def test_record_validates_payload(db_session):
    with pytest.raises(ValueError):
        record_run(db_session, {"command": " ", "report": VerificationReport(verdict="pass")})
    with pytest.raises(ValueError):
        record_run(db_session, {"command": "verify unique", "report": {"verdict": "pass"}})


def test_failing_report_needs_a_counterexample():
    with pytest.raises(ValueError):
        VerificationReport(verdict="fail")
    with pytest.raises(ValueError):
        VerificationReport(verdict="maybe")
