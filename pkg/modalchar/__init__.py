"""Finite characterisations of modal formulas.

This package is organised the way a small service is: configuration, named
constants and the exception hierarchy live in ``core``; the algorithms live
in ``services``; pydantic models for files and reports live in ``schemas``;
and the optional run ledger (``db``/``models``/``crud``) stores verification
reports in SQLite. ``cli`` wires all of it to a command line.

The main entry points are re-exported here so a notebook or test can do
``from modalchar import parse_formula, characterize``.
"""

from __future__ import annotations

from .services.characterize import Characterization, characterize, characterize_uniform, fits
from .services.formula import Formula, PropSignature, to_text
from .services.kripke import PointedModel, modelcheck
from .services.normalform import to_normal_form
from .services.parser import parse_formula
from .services.simulation import bisimilar, weak_simulates

__all__ = [
    "Characterization",
    "Formula",
    "PointedModel",
    "PropSignature",
    "bisimilar",
    "characterize",
    "characterize_uniform",
    "fits",
    "modelcheck",
    "parse_formula",
    "to_normal_form",
    "to_text",
    "weak_simulates",
]
