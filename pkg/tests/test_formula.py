"""Tests for the formula AST, measures and syntactic transformations."""

import pickle
import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.connectives import CONN_NEG_ATOM, FULL_LANGUAGE
from modalchar.core.errors import FragmentError, SignatureError, UnknownPropositionError
from modalchar.services.formula import (
    BOT,
    TOP,
    PropSignature,
    atom,
    box,
    canonical,
    conj,
    dia,
    disj,
    dual,
    flip_formula,
    formula_size,
    fragment_of,
    height_formula,
    modal_depth,
    neg_atom,
    negate,
    to_text,
    uniform_flip,
)
from modalchar.services.enumeration import random_formula
from modalchar.services.tableau import equivalent

p, q, r = atom("p"), atom("q"), atom("r")


def test_junctions_flatten_and_collapse():
    assert conj(conj(p, q), r).children == (p, q, r)
    assert disj([p]) == p
    with pytest.raises(ValueError):
        conj([])


def test_measures_count_leaves_and_modal_operators():
    formula = conj(dia(p), box(disj(q, r)))
    assert formula_size(formula) == 5
    assert modal_depth(formula) == 1
    assert modal_depth(dia(box(p))) == 2
    assert fragment_of(formula) == {"and", "or", "dia", "box"}


def test_printer_parenthesises_disjunctions_inside_conjunctions():
    assert to_text(conj(dia(p), box(disj(q, r)))) == "<>p & [](q | r)"
    assert to_text(conj(disj(p, q), r)) == "(p | q) & r"
    assert to_text(disj(conj(p, q), neg_atom("r"))) == "p & q | ~r"
    assert to_text(box(BOT)) == "[]false"


def test_negate_pushes_to_atoms():
    formula = conj(dia(p), box(disj(q, r)))
    expected = disj(box(neg_atom("p")), dia(conj(neg_atom("q"), neg_atom("r"))))
    assert negate(formula) == expected
    assert negate(negate(formula)) == formula
    assert negate(TOP) == BOT


def test_dual_swaps_modalities_and_junctions():
    formula = conj(dia(p), box(disj(q, r)))
    assert dual(formula) == disj(box(p), dia(conj(q, r)))
    assert dual(dual(formula)) == formula
    assert dual(TOP) == BOT
    with pytest.raises(FragmentError):
        dual(dia(neg_atom("p")))


def test_flip_formula_swaps_polarity():
    assert flip_formula(conj(p, dia(neg_atom("q")))) == conj(neg_atom("p"), dia(q))


def test_canonical_sorts_and_deduplicates():
    assert canonical(conj(q, p, p)) == conj(p, q)
    assert canonical(disj(p, p)) == p
    assert canonical(box(disj(r, q))) == box(disj(q, r))


def test_height_formula_variants():
    assert to_text(height_formula(0)) == "[]false & true"
    assert to_text(height_formula(1)) == "[][]false & <>true"
    assert to_text(height_formula(1, "top_free")) == "[][]false & <>[]false"
    assert to_text(height_formula(1, "negated")) == "<><>true | []<>true"
    with pytest.raises(ValueError):
        height_formula(-1)
    with pytest.raises(ValueError):
        height_formula(1, "sideways")


def test_uniform_flip_renames_negated_names():
    formula = conj(p, dia(neg_atom("q")))
    assert uniform_flip(formula, {"q"}) == conj(p, dia(atom("q_neg")))
    with pytest.raises(FragmentError):
        uniform_flip(neg_atom("p"), {"q"})
    with pytest.raises(FragmentError):
        uniform_flip(conj(q, neg_atom("q")), {"q"})


def test_signature_validation():
    assert PropSignature.parse("p, q").props == ("p", "q")
    with pytest.raises(SignatureError):
        PropSignature(("p", "p"))
    with pytest.raises(SignatureError):
        PropSignature(("true",))
    with pytest.raises(SignatureError):
        PropSignature.partitioned(["p", "q"], ["q"])
    sig = PropSignature.partitioned(["p"], ["q"])
    assert sig.positive == {"p"}
    with pytest.raises(UnknownPropositionError):
        sig.require(["p", "s"])


def test_formulas_survive_pickling():
    formula = conj(dia(p), box(disj(q, r)))
    copy = pickle.loads(pickle.dumps(formula))
    assert copy == formula
    assert hash(copy) == hash(formula)


def test_negation_is_the_flipped_dual():
    rng = random.Random(21)
    without_negated_atoms = FULL_LANGUAGE - {CONN_NEG_ATOM}
    for _ in range(150):
        formula = random_formula(rng, ("p", "q"), without_negated_atoms, max_depth=2)
        assert equivalent(negate(formula), flip_formula(dual(formula)), ("p", "q"))
