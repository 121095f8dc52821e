"""SQLAlchemy session helpers for the verification run ledger."""

from __future__ import annotations

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker, declarative_base

from ..core.config import settings

# SQLite only.
CONNECT_ARGS = {"check_same_thread": False} if settings.DB_URL.startswith("sqlite") else {}

# Created on first use.
_engine = None
SessionLocal = sessionmaker(autocommit=False, autoflush=False)
# ``Base`` is the parent class for every SQLAlchemy model in modalchar/models.
Base = declarative_base()


def get_engine():
    """Build the engine on first use and make sure the tables exist."""

    global _engine
    if _engine is None:
        if settings.DB_URL.startswith("sqlite:///"):
            settings.DATA_DIR.mkdir(parents=True, exist_ok=True)
        _engine = create_engine(settings.DB_URL, connect_args=CONNECT_ARGS)
        from ..models import run as _run  # noqa: F401

        Base.metadata.create_all(bind=_engine)
        SessionLocal.configure(bind=_engine)
    return _engine


def get_db():
    """Yield a ledger session and guarantee cleanup."""

    get_engine()
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()
