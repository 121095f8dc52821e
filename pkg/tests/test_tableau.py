"""Tests for the K tableau: satisfiability, equivalence and entailment."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.services.formula import atom, box, conj, dia, disj, height_formula, neg_atom, negate
from modalchar.services.kripke import modelcheck
from modalchar.services.tableau import entails, equivalent, sat_k

p, q = atom("p"), atom("q")


def test_unsatisfiable_formulas():
    assert not sat_k(conj(p, neg_atom("p")))
    assert not sat_k(conj(dia(p), box(neg_atom("p"))))
    assert not sat_k(conj(dia(q), dia(p), box(neg_atom("q"))))


def test_satisfiable_formula_has_a_witness():
    formula = conj(dia(p), box(q), neg_atom("q"))
    result = sat_k(formula)
    assert result
    assert modelcheck(formula, result.witness)


def test_distribution_laws():
    assert equivalent(box(conj(p, q)), conj(box(p), box(q)))
    assert equivalent(dia(disj(p, q)), disj(dia(p), dia(q)))


def test_inequivalence_comes_with_a_separating_model():
    left, right = box(disj(p, q)), disj(box(p), box(q))
    result = equivalent(left, right)
    assert not result
    assert result.holds_on == "left"
    assert modelcheck(left, result.witness) != modelcheck(right, result.witness)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_negated_height_formula(n):
    assert equivalent(height_formula(n, "negated"), negate(height_formula(n)))


def test_entailment():
    assert entails(box(p), box(disj(p, q)))
    result = entails(dia(p), box(p))
    assert not result
    assert modelcheck(dia(p), result.witness)
    assert not modelcheck(box(p), result.witness)
