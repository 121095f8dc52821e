"""Tests for pointed models: validation, model checking and structural operations."""

import math
import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.connectives import FULL_LANGUAGE
from modalchar.core.errors import ModelFormatError, SignatureError
from modalchar.services.enumeration import enumerate_models, random_formula, random_model
from modalchar.services.formula import atom, box, conj, dia, flip_formula, height_formula, neg_atom
from modalchar.services.kripke import (
    EMPTY,
    FULL,
    PointedModel,
    dedup_isomorphic,
    deadlock,
    empty_loop,
    flip_model,
    full_loop,
    generated_submodel,
    glue,
    height,
    isomorphic,
    loopstate_states,
    modelcheck,
    path_model,
    tree_unravel,
)

p, q = atom("p"), atom("q")


@pytest.fixture()
def chain_model():
    # a{p} -> b{q}, b -> b
    return PointedModel.build(("p", "q"), ["a", "b"], [("a", "b"), ("b", "b")], {"a": ["p"], "b": ["q"]}, "a")


def test_model_validation():
    with pytest.raises(ModelFormatError):
        PointedModel.build(("p",), ["a"], [], {}, "z")
    with pytest.raises(ModelFormatError):
        PointedModel.build(("p",), ["a"], [("a", "b")], {}, "a")
    with pytest.raises(ModelFormatError):
        PointedModel.build(("p",), ["a"], [], {"a": ["q"]}, "a")


def test_modelcheck(chain_model):
    assert modelcheck(p, chain_model)
    assert modelcheck(dia(q), chain_model)
    assert modelcheck(box(q), chain_model)
    assert not modelcheck(dia(p), chain_model)
    assert modelcheck(conj(p, dia(box(q))), chain_model)
    assert modelcheck(box(neg_atom("p")), chain_model)
    with pytest.raises(SignatureError):
        modelcheck(atom("r"), chain_model)


def test_height():
    assert height(path_model(3)) == 3
    assert height(deadlock(())) == 0
    assert height(empty_loop(("p",))) == math.inf


def test_tree_unravel_keeps_shallow_truth(chain_model):
    tree = tree_unravel(chain_model, 2)
    assert len(tree.states) == 3
    assert height(tree) == 2
    assert "a>b>b" in tree.states
    for formula in (dia(q), box(dia(q)), dia(box(q)), conj(p, box(box(q)))):
        assert modelcheck(formula, tree) == modelcheck(formula, chain_model)


def test_unravelling_a_loop_gives_a_path():
    tree = tree_unravel(empty_loop(("p",)), 2)
    assert tree.states == ("o", "o>o", "o>o>o")
    assert isomorphic(tree, path_model(2, ("p",)))


def test_glue_roots_the_examples():
    sig = ("p",)
    assert isomorphic(glue({"p"}, [], sig), deadlock(sig, ["p"]))
    glued = glue(set(), [empty_loop(sig), full_loop(sig)])
    assert glued.states == ("r", "0.o", "1.o")
    assert ("r", "0.o") in glued.edges
    assert modelcheck(dia(p), glued)
    assert not modelcheck(box(p), glued)
    with pytest.raises(SignatureError):
        glue(set(), [empty_loop(sig), full_loop(("p", "q"))])


def test_flip_model_swaps_loopstates():
    sig = ("p", "q")
    assert isomorphic(flip_model(empty_loop(sig)), full_loop(sig))


def test_loopstate_states():
    sig = ("p",)
    marked = PointedModel.build(sig, ["x", "o"], [("x", "o"), ("o", "o")], {"x": ["p"]}, "x")
    blank = PointedModel.build(sig, ["x", "o"], [("x", "o"), ("o", "o")], {}, "x")
    assert loopstate_states(marked, EMPTY) == {"o"}
    assert loopstate_states(blank, EMPTY) == {"x", "o"}
    assert loopstate_states(full_loop(sig), FULL) == {"o"}
    assert loopstate_states(deadlock(sig), EMPTY) == set()


def test_generated_submodel_drops_unreachable_states():
    model = PointedModel.build(("p",), ["a", "b", "c"], [("a", "b"), ("c", "a")], {}, "a")
    assert generated_submodel(model).states == ("a", "b")


def test_isomorphism_respects_the_point():
    renamed = PointedModel.build(("p",), ["z"], [("z", "z")], {}, "z")
    assert isomorphic(renamed, empty_loop(("p",)))
    assert not isomorphic(path_model(1), path_model(1).with_point("s1"))
    assert len(dedup_isomorphic([renamed, empty_loop(("p",)), deadlock(("p",))])) == 2


def test_transitive_path():
    assert len(path_model(2, transitive=True).edges) == 3


def test_flipping_both_sides_keeps_truth():
    rng = random.Random(4)
    sig = ("p", "q")
    for _ in range(1000):
        formula = random_formula(rng, sig, FULL_LANGUAGE, max_depth=2)
        model = random_model(rng, sig, 1, 4)
        assert modelcheck(formula, model) == modelcheck(flip_formula(formula), flip_model(model))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_height_formula_holds_exactly_at_height_n(n):
    models = list(enumerate_models(("p",), 3)) + [path_model(k, ("p",)) for k in range(5)]
    for model in models:
        at_height = height(model) == n
        assert modelcheck(height_formula(n), model) == at_height
        assert modelcheck(height_formula(n, "top_free"), model) == at_height
        assert modelcheck(height_formula(n, "negated"), model) != at_height


def test_unravel_names_survive_separator_in_ids():
    model = PointedModel.build(
        ("p",),
        ["a", "b", "c", "b>c"],
        [("a", "b>c"), ("a", "b"), ("b", "c")],
        {"c": ["p"]},
        "a",
    )
    tree = tree_unravel(model, 2)
    assert len(tree.states) == 4
    assert "a>b>c" in tree.states
    assert "a>b\\>c" in tree.states
    assert tree.props("a>b>c") == frozenset({"p"})
    assert tree.props("a>b\\>c") == frozenset()
    assert height(tree) == 2


def test_unravel_escapes_the_point_too():
    model = PointedModel.build((), ["x>", "x"], [("x>", "x"), ("x", "x")], {}, "x>")
    tree = tree_unravel(model, 2)
    assert tree.point == "x\\>"
    assert tree.states == ("x\\>", "x\\>>x", "x\\>>x>x")
    assert isomorphic(tree, path_model(2))
