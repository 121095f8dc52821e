"""Tests for the verifiers, the full-language spoiler and the coproduct fixtures."""

import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.connectives import FULL_LANGUAGE, POSITIVE_FRAGMENT, UNIFORM_FRAGMENT
from modalchar.core.errors import SignatureError, SizeGuardExceeded
from modalchar.schemas.config import Bounds
from modalchar.services.characterize import characterize, characterize_uniform, fits
from modalchar.services.enumeration import random_formula, random_model, tree_models
from modalchar.services.formula import BOT, TOP, atom, box, conj, dia, neg_atom, to_text
from modalchar.services.kripke import Evaluator, empty_loop, full_loop, modelcheck
from modalchar.services.parser import parse_formula
from modalchar.services.oracle import (
    coproduct_fixtures,
    fixture_facts,
    spoiler_full_language,
    spoiler_report,
    verify_duality,
    verify_fixtures,
    verify_minimality,
    verify_preservation,
    verify_unique,
)
from modalchar.services.tableau import equivalent, sat_k

p, q = atom("p"), atom("q")
SMALL = Bounds(max_depth=1, max_size=3)


@pytest.mark.parametrize("formula", [dia(p), box(p), conj(p, dia(p))])
def test_unique_characterisation_small(formula):
    report = verify_unique(formula, characterize(formula, ("p",)), SMALL)
    assert report.passed, report.counterexamples
    assert report.stats["fitting"] >= 1


def test_unique_characterisation_uniform():
    formula = dia(neg_atom("q"))
    char = characterize_uniform(formula, ["p"], ["q"])
    report = verify_unique(formula, char, SMALL, UNIFORM_FRAGMENT, positive_atoms=["p"], negative_atoms=["q"])
    assert report.passed, report.counterexamples


def test_unique_flags_a_mismatched_characterisation():
    report = verify_unique(box(p), characterize(dia(p), ("p",)), SMALL)
    assert not report.passed
    assert "<>p" in [c.formula for c in report.counterexamples]


def test_duality():
    report = verify_duality(characterize(dia(p), ("p",)), Bounds(max_states=2, samples=20, seed=1))
    assert report.passed, report.counterexamples
    assert report.stats["upward"] + report.stats["downward"] == report.stats["models"]
    assert report.stats["sampled_models"] == 20


def test_duality_is_reproducible():
    bounds = Bounds(max_states=1, samples=10, seed=5)
    char = characterize(box(p), ("p",))
    assert verify_duality(char, bounds) == verify_duality(char, bounds)


def test_preservation():
    report = verify_preservation(("p", "q"), Bounds(max_states=3, seed=3), trials=100)
    assert report.passed, report.counterexamples
    assert report.stats["trials"] == 100


@pytest.mark.parametrize("n", [1, 2])
def test_minimality(n):
    report = verify_minimality(n)
    assert report.passed, report.counterexamples
    assert report.stats["positives"] == {1: 2, 2: 4}[n]


def test_spoiler_for_false():
    result = spoiler_full_language([], [full_loop(("p",))], BOT)
    assert result.case == "i"
    assert modelcheck(result.formula, result.witness)
    assert not fits(result.formula, [], [result.witness])


def test_spoiler_for_a_satisfiable_formula():
    char = characterize(dia(p), ("p",))
    result = spoiler_full_language(char.positives, char.negatives, dia(p))
    assert result.case == "ii"
    assert fits(result.formula, char.positives, char.negatives)
    assert modelcheck(dia(p), result.witness) != modelcheck(result.formula, result.witness)
    report = spoiler_report(result, dia(p))
    assert report.passed
    assert report.stats["n"] == result.n


def test_spoiler_for_true():
    result = spoiler_full_language([empty_loop(("p",))], [], TOP)
    assert modelcheck(TOP, result.witness)
    assert not modelcheck(result.formula, result.witness)


def test_spoiler_checks_the_signature():
    with pytest.raises(SignatureError):
        spoiler_full_language([], [], q, ["p"])


def test_coproduct_fixtures():
    report = verify_fixtures()
    assert report.passed, report.counterexamples
    facts = fixture_facts(coproduct_fixtures())
    assert all(expected == observed for _, expected, observed in facts)
    with pytest.raises(SignatureError):
        coproduct_fixtures(("p", "q"))


# ---------------------------------------------------------------------------
# Seeded property checks at desk scale


def test_random_formulas_fit_their_characterisation():
    rng = random.Random(11)
    for _ in range(30):
        formula = random_formula(rng, ("p", "q"), POSITIVE_FRAGMENT, max_depth=2, budget=3)
        char = characterize(formula, ("p", "q"))
        assert fits(formula, char.positives, char.negatives), to_text(formula)


def test_sat_k_agrees_with_bounded_tree_search():
    rng = random.Random(5)
    trees = list(tree_models(("p",), 2, 2))
    evaluators = [Evaluator(tree) for tree in trees]
    for _ in range(60):
        formula = random_formula(rng, ("p",), FULL_LANGUAGE, max_depth=2, budget=1)
        found = any(ev.holds(formula) for ev in evaluators)
        assert bool(sat_k(formula, ("p",))) == found, to_text(formula)


def test_spoilers_for_random_characterisations():
    rng = random.Random(2)
    for _ in range(8):
        formula = random_formula(rng, ("p",), POSITIVE_FRAGMENT, max_depth=1, budget=2)
        char = characterize(formula, ("p",))
        result = spoiler_full_language(char.positives, char.negatives, formula)
        assert fits(result.formula, char.positives, char.negatives)
        assert not equivalent(formula, result.formula, ("p",))


def test_random_uniform_formulas():
    rng = random.Random(9)
    for _ in range(6):
        formula = random_formula(
            rng, ("p", "q"), UNIFORM_FRAGMENT, max_depth=1, budget=2, positive_atoms=["p"], negative_atoms=["q"]
        )
        char = characterize_uniform(formula, ["p"], ["q"])
        report = verify_unique(
            formula, char, SMALL, UNIFORM_FRAGMENT, positive_atoms=["p"], negative_atoms=["q"]
        )
        assert report.passed, (to_text(formula), report.counterexamples)


# ---------------------------------------------------------------------------
# Acceptance scale

PQ = ("p", "q")
CORPUS = [
    "p",
    "q",
    "<>p",
    "[]p",
    "<>(p & q)",
    "[](p | q)",
    "[]p & <>q",
    "[][]p",
    "p & q",
    "p | q",
    "<>p | <>q",
    "[]p | []q",
    "<>[]p",
    "[]<>p",
    "<>p & <>q",
    "p & <>q",
    "p | []q",
    "<><>p",
    "[](p | <>q)",
    "<>p & []q",
]


@pytest.mark.slow
@pytest.mark.parametrize("text", CORPUS)
def test_corpus_is_uniquely_characterised(text):
    formula = parse_formula(text)
    report = verify_unique(formula, characterize(formula, PQ), Bounds(max_depth=2, max_size=7))
    assert report.passed, report.counterexamples
    assert report.stats["fitting"] >= 1


@pytest.mark.slow
@pytest.mark.parametrize("text", CORPUS)
def test_corpus_duality_partitions_models(text):
    char = characterize(parse_formula(text), PQ)
    bounds = Bounds(max_states=3, samples=500, sample_min_states=4, sample_max_states=6, edge_density=0.5, seed=7)
    report = verify_duality(char, bounds)
    assert report.passed, report.counterexamples
    assert report.stats["sampled_models"] == 500


@pytest.mark.slow
def test_preservation_at_scale():
    report = verify_preservation(PQ, Bounds(max_depth=3, max_states=3, seed=3), trials=1000)
    assert report.passed, report.counterexamples
    assert report.stats["trials"] == 1000


@pytest.mark.slow
def test_fit_suite():
    rng = random.Random(31)
    fitted = 0
    for _ in range(200):
        formula = random_formula(rng, PQ, POSITIVE_FRAGMENT, max_depth=3, budget=3)
        try:
            char = characterize(formula, PQ, cap=5000)
        except SizeGuardExceeded:
            continue
        assert fits(formula, char.positives, char.negatives), to_text(formula)
        fitted += 1
    assert fitted >= 120


def _labelled_examples(rng, formula, draws=8):
    positives, negatives = [], []
    for _ in range(draws):
        model = random_model(rng, PQ, 1, 3)
        (positives if modelcheck(formula, model) else negatives).append(model)
    return positives, negatives


@pytest.mark.slow
def test_full_language_spoilers_at_scale():
    rng = random.Random(37)
    cases = set()
    for _ in range(100):
        formula = random_formula(rng, PQ, FULL_LANGUAGE, max_depth=2, budget=2)
        positives, negatives = _labelled_examples(rng, formula)
        result = spoiler_full_language(positives, negatives, formula, PQ)
        cases.add(result.case)
        assert fits(result.formula, positives, negatives), to_text(formula)
        assert not equivalent(formula, result.formula, PQ), to_text(formula)
        assert modelcheck(formula, result.witness) != modelcheck(result.formula, result.witness)
    assert cases == {"i", "ii"}


@pytest.mark.slow
def test_uniform_formulas_at_scale():
    rng = random.Random(41)
    for _ in range(50):
        formula = random_formula(
            rng, PQ, UNIFORM_FRAGMENT, max_depth=2, budget=2, positive_atoms=["p"], negative_atoms=["q"]
        )
        char = characterize_uniform(formula, ["p"], ["q"])
        assert fits(formula, char.positives, char.negatives), to_text(formula)
        report = verify_unique(
            formula,
            char,
            Bounds(max_depth=2, max_size=6),
            UNIFORM_FRAGMENT,
            positive_atoms=["p"],
            negative_atoms=["q"],
        )
        assert report.passed, (to_text(formula), report.counterexamples)


@pytest.mark.slow
def test_sat_k_agrees_with_tree_search_at_scale():
    rng = random.Random(43)
    evaluators = [Evaluator(tree) for tree in tree_models(("p",), 2, 2)]
    for _ in range(500):
        formula = random_formula(rng, ("p",), FULL_LANGUAGE, max_depth=2, budget=1)
        found = any(ev.holds(formula) for ev in evaluators)
        assert bool(sat_k(formula, ("p",))) == found, to_text(formula)
