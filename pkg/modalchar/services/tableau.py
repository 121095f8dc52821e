"""Satisfiability for basic modal logic K by a tableau, plus equivalence and entailment.

The tableau saturates ∧ and ∨ (branching on ∨), closes a branch on ⊥ or on
p together with ¬p, and then opens one successor per ◇-formula carrying the
◇ body and every □ body. Depth strictly decreases, so it terminates; an open
tableau reads off as a tree model of depth at most the modal depth.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from ..core.connectives import KIND_AND, KIND_ATOM, KIND_BOT, KIND_BOX, KIND_DIA, KIND_NEG_ATOM, KIND_OR
from .formula import Formula, atoms_of, conj, negate, sort_key, to_text
from .kripke import PointedModel, TreeNode, tree_model

LOGGER = logging.getLogger(__name__)

Label = FrozenSet[Formula]


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: PointedModel | None = None

    def __bool__(self) -> bool:
        return self.satisfiable


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: PointedModel | None = None
    # Which side holds at the witness point: "left" or "right".
    holds_on: str | None = None

    def __bool__(self) -> bool:
        return self.equivalent


@dataclass(frozen=True)
class EntailmentResult:
    holds: bool
    witness: PointedModel | None = None

    def __bool__(self) -> bool:
        return self.holds


class _Tableau:
    def __init__(self) -> None:
        self.memo: Dict[Label, TreeNode | None] = {}

    def run(self, label: Label) -> TreeNode | None:
        if label in self.memo:
            return self.memo[label]
        result = self._expand(label)
        self.memo[label] = result
        return result

    def _expand(self, label: Label) -> TreeNode | None:
        ordered = sorted(label, key=sort_key)
        for formula in ordered:
            if formula.kind == KIND_AND:
                return self.run((label - {formula}) | frozenset(formula.children))
        for formula in ordered:
            if formula.kind == KIND_OR:
                rest = label - {formula}
                for child in formula.children:
                    found = self.run(rest | {child})
                    if found is not None:
                        return found
                return None
        positive = set()
        negative = set()
        diamonds: List[Formula] = []
        boxes: List[Formula] = []
        for formula in ordered:
            kind = formula.kind
            if kind == KIND_BOT:
                return None
            if kind == KIND_ATOM:
                positive.add(formula.name)
            elif kind == KIND_NEG_ATOM:
                negative.add(formula.name)
            elif kind == KIND_DIA:
                diamonds.append(formula.child)
            elif kind == KIND_BOX:
                boxes.append(formula.child)
        if positive & negative:
            return None
        children = []
        for body in diamonds:
            child = self.run(frozenset([body, *boxes]))
            if child is None:
                return None
            children.append(child)
        return TreeNode(frozenset(positive), tuple(children))


def _signature(formulas: Iterable[Formula], sig: Iterable[str] | None) -> Tuple[str, ...]:
    if sig is not None:
        return tuple(sig)
    names: set[str] = set()
    for formula in formulas:
        names |= atoms_of(formula)
    return tuple(sorted(names))


def sat_k(formula: Formula, sig: Iterable[str] | None = None) -> SatResult:
    """Is ``formula`` satisfiable in some Kripke model? Returns a tree witness if so."""

    node = _Tableau().run(frozenset([formula]))
    if node is None:
        return SatResult(False)
    return SatResult(True, tree_model(node, _signature([formula], sig)))


def equivalent(left: Formula, right: Formula, sig: Iterable[str] | None = None) -> EquivalenceResult:
    """Equivalence over K via unsatisfiability of left ∧ ¬right and right ∧ ¬left."""

    names = _signature([left, right], sig)
    only_left = sat_k(conj(left, negate(right)), names)
    if only_left:
        return EquivalenceResult(False, only_left.witness, "left")
    only_right = sat_k(conj(right, negate(left)), names)
    if only_right:
        return EquivalenceResult(False, only_right.witness, "right")
    LOGGER.debug("%s and %s are equivalent", to_text(left), to_text(right))
    return EquivalenceResult(True)


def entails(left: Formula, right: Formula, sig: Iterable[str] | None = None) -> EntailmentResult:
    """left ⊨ right iff left ∧ ¬right is unsatisfiable; otherwise a countermodel is returned."""

    counter = sat_k(conj(left, negate(right)), _signature([left, right], sig))
    if counter:
        return EntailmentResult(False, counter.witness)
    return EntailmentResult(True)


__all__ = [
    "EntailmentResult",
    "EquivalenceResult",
    "SatResult",
    "entails",
    "equivalent",
    "sat_k",
]
