"""Recursive-descent parser for the formula surface syntax.

Grammar::

    formula := disj
    disj    := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := "<>" unary | "[]" unary | "~" unary
             | atom | "true" | "false" | "(" formula ")"
    atom    := letter (letter | digit | "_")*

General negation is accepted on the surface and pushed to the atoms while
parsing, so the returned tree is always in negation normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from ..core.connectives import KEYWORD_FALSE, KEYWORD_TRUE
from ..core.errors import FormulaSyntaxError
from .formula import BOT, TOP, Formula, PropSignature, atom, atoms_of, box, conj, dia, disj, negate

_TOKEN_RE = re.compile(r"<>|\[\]|[~&|()]|[A-Za-z][A-Za-z0-9_]*")
_SPACE_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class Token:
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        space = _SPACE_RE.match(text, pos)
        if space:
            pos = space.end()
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append(Token(match.group(0), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise FormulaSyntaxError("unexpected end of input", len(self.text))
        self.index += 1
        return token

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("empty formula", 0)
        result = self.disjunction()
        leftover = self.peek()
        if leftover is not None:
            raise FormulaSyntaxError(f"unexpected {leftover.text!r}", leftover.position)
        return result

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self._at("|"):
            self.index += 1
            parts.append(self.conjunction())
        return disj(parts)

    def conjunction(self) -> Formula:
        parts = [self.unary()]
        while self._at("&"):
            self.index += 1
            parts.append(self.unary())
        return conj(parts)

    def unary(self) -> Formula:
        token = self.take()
        text = token.text
        if text == "<>":
            return dia(self.unary())
        if text == "[]":
            return box(self.unary())
        if text == "~":
            return negate(self.unary())
        if text == "(":
            inner = self.disjunction()
            closing = self.peek()
            if closing is None or closing.text != ")":
                where = closing.position if closing is not None else len(self.text)
                raise FormulaSyntaxError("expected ')'", where)
            self.index += 1
            return inner
        if text == KEYWORD_TRUE:
            return TOP
        if text == KEYWORD_FALSE:
            return BOT
        if text[0].isalpha():
            return atom(text)
        raise FormulaSyntaxError(f"unexpected {text!r}", token.position)

    def _at(self, text: str) -> bool:
        token = self.peek()
        return token is not None and token.text == text


def parse_formula(text: str, sig: PropSignature | None = None) -> Formula:
    """Parse ``text`` into an NNF formula, optionally checking names against ``sig``."""

    formula = _Parser(text).parse()
    if sig is not None:
        sig.require(atoms_of(formula))
    return formula


__all__ = ["Token", "parse_formula", "tokenize"]
