"""Tests for the surface syntax parser."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.errors import FormulaSyntaxError, UnknownPropositionError
from modalchar.services.formula import BOT, TOP, PropSignature, atom, box, conj, dia, disj, neg_atom, to_text
from modalchar.services.parser import parse_formula, tokenize

p, q, r = atom("p"), atom("q"), atom("r")


def test_parses_modal_operators_and_junctions():
    assert parse_formula("<>p & [](q | r)") == conj(dia(p), box(disj(q, r)))
    assert parse_formula("p & q | r") == disj(conj(p, q), r)
    assert parse_formula("p & (q | r)") == conj(p, disj(q, r))


def test_negation_is_pushed_to_atoms():
    assert parse_formula("~(<>p)") == box(neg_atom("p"))
    assert parse_formula("~~p") == p
    assert parse_formula("~(p & []q)") == disj(neg_atom("p"), dia(neg_atom("q")))


def test_constants():
    assert parse_formula("true") == TOP
    assert parse_formula("[]false") == box(BOT)


def test_printer_output_parses_back():
    for text in ("<>(p & q) | []~r", "(p | q) & <>[]r", "[](p | <>(q & r))"):
        formula = parse_formula(text)
        assert parse_formula(to_text(formula)) == formula


@pytest.mark.parametrize(
    "text,position",
    [("p &", 3), ("p $ q", 2), ("(p", 2), ("", 0), ("p q", 2)],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula(text)
    assert excinfo.value.position == position


def test_signature_is_enforced():
    with pytest.raises(UnknownPropositionError):
        parse_formula("p & q", PropSignature(("p",)))


def test_tokenizer_keeps_positions():
    tokens = tokenize("<>p_1 & q")
    assert [t.text for t in tokens] == ["<>", "p_1", "&", "q"]
    assert tokens[2].position == 6
