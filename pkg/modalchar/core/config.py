"""Human-friendly configuration loader.

The ``Settings`` class centralises every environment variable the library
and the command line rely on.

*What:* Which knobs exist (storage paths, size guards, sampling defaults).
*When:* They are read once, when this module is imported.
*Why:* Guards and seeds end up in reports; keeping them in one place means a
report can always be traced back to the configuration that produced it.
*How:* Each attribute uses ``os.getenv`` with a sensible default so the CLI
works without any setup.
"""

from __future__ import annotations

import os
from pathlib import Path


class Settings:
    # ``BASE_DIR`` points to the repository root; ``DATA_DIR`` holds the run
    # ledger database unless ``DB_URL`` points elsewhere.
    BASE_DIR = Path(__file__).resolve().parents[2]
    DATA_DIR = Path(os.getenv("DATA_DIR", str(BASE_DIR / "data")))

    # Recorded verification runs (``--record``) land here.
    DB_URL = os.getenv("DB_URL", f"sqlite:///{DATA_DIR}/runs.db")

    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

    # ---- Size guards
    # Normal-form rewriting is exponential in the worst case; abort cleanly
    # once the disjunct count passes this cap.
    NF_MAX_DISJUNCTS = int(os.getenv("NF_MAX_DISJUNCTS", "1000000"))
    # Same idea for positive-example construction (subset enumeration).
    MAX_EXAMPLES = int(os.getenv("MAX_EXAMPLES", "200000"))

    # ---- Randomised verification defaults
    DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
    DUALITY_SAMPLES = int(os.getenv("DUALITY_SAMPLES", "500"))


# Importing ``settings`` anywhere gives access to the configured values
# without rebuilding the object each time.
settings = Settings()
