"""Beginner-friendly overview for this module.

WHAT: Decision procedures for bisimulation, n-bisimulation, plain
simulation and weak simulation between finite pointed models, plus the
relation algebra (identity, converse, composition) used to reason about
them.
WHEN: Called by the duality and preservation verifiers, the CLI ``bisim``
and ``wsim`` verbs, and the fixture checks.
WHY: Weak simulations are the order behind the characterisations: a
positive example weakly simulates into exactly the models a formula holds
on. Every other relation here is a reference point for that one.
HOW: Each relation is the greatest fixpoint of a deletion loop. We start
from the pairs that pass the atom clause and keep deleting pairs that break
the forth/back clauses; a deletion re-queues the predecessor pairs that
might now break too. Only pairs reachable from the two points are
considered, which never changes the answer because every clause looks at
successor pairs only.

File: modalchar/services/simulation.py
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, Set, Tuple

from ..core.errors import SignatureError
from .kripke import EMPTY, FULL, PointedModel, flip_model

LOGGER = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Relation:
    """A set of (left state, right state) pairs between two pointed models."""

    left: PointedModel
    right: PointedModel
    pairs: FrozenSet[Tuple[str, str]]

    def __post_init__(self) -> None:
        for a, b in self.pairs:
            if a not in self.left.index:
                raise ValueError(f"{a!r} is not a state of the left model")
            if b not in self.right.index:
                raise ValueError(f"{b!r} is not a state of the right model")

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def contains_points(self) -> bool:
        return (self.left.point, self.right.point) in self.pairs

    def indexed(self) -> Set[Pair]:
        return {(self.left.index[a], self.right.index[b]) for a, b in self.pairs}


@dataclass(frozen=True)
class SimulationResult:
    holds: bool
    witness: Relation | None = None

    def __bool__(self) -> bool:
        return self.holds


def _require_same_signature(left: PointedModel, right: PointedModel) -> None:
    if left.signature != right.signature:
        raise SignatureError(
            f"models use different signatures: {list(left.signature)} vs {list(right.signature)}"
        )


def _reachable_pairs(left: PointedModel, right: PointedModel) -> Set[Pair]:
    start = (left.point_index, right.point_index)
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for u in left.succ[i]:
            for w in right.succ[j]:
                if (u, w) not in seen:
                    seen.add((u, w))
                    stack.append((u, w))
    return seen


def _refine(
    left: PointedModel,
    right: PointedModel,
    relation: Set[Pair],
    keeps: Callable[[int, int, Set[Pair]], bool],
) -> Set[Pair]:
    queue = deque(sorted(relation))
    queued = set(relation)
    while queue:
        pair = queue.popleft()
        queued.discard(pair)
        if pair not in relation:
            continue
        i, j = pair
        if keeps(i, j, relation):
            continue
        relation.discard(pair)
        for pi in left.pred[i]:
            for pj in right.pred[j]:
                dependant = (pi, pj)
                if dependant in relation and dependant not in queued:
                    queue.append(dependant)
                    queued.add(dependant)
    return relation


def _witness(left: PointedModel, right: PointedModel, relation: Set[Pair]) -> Relation:
    """Restrict ``relation`` to the pairs reachable from the two points inside it."""

    start = (left.point_index, right.point_index)
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for u in left.succ[i]:
            for w in right.succ[j]:
                if (u, w) in relation and (u, w) not in seen:
                    seen.add((u, w))
                    stack.append((u, w))
    pairs = frozenset((left.states[i], right.states[j]) for i, j in seen)
    return Relation(left, right, pairs)


def _result(left: PointedModel, right: PointedModel, relation: Set[Pair], with_witness: bool) -> SimulationResult:
    if (left.point_index, right.point_index) not in relation:
        return SimulationResult(False)
    return SimulationResult(True, _witness(left, right, relation) if with_witness else None)


# ---------------------------------------------------------------------------
# Clause checks. ``Z`` is the current candidate relation over state indices.


def _forth(left: PointedModel, right: PointedModel, i: int, j: int, Z: Set[Pair]) -> bool:
    targets = right.succ[j]
    return all(any((u, w) in Z for w in targets) for u in left.succ[i])


def _back(left: PointedModel, right: PointedModel, i: int, j: int, Z: Set[Pair]) -> bool:
    sources = left.succ[i]
    return all(any((u, w) in Z for u in sources) for w in right.succ[j])


def _weak_forth(left: PointedModel, right: PointedModel, i: int, j: int, Z: Set[Pair]) -> bool:
    escape = left.empty_loop_mask
    targets = right.succ[j]
    for u in left.succ[i]:
        if escape >> u & 1:
            continue
        if not any((u, w) in Z for w in targets):
            return False
    return True


def _weak_back(left: PointedModel, right: PointedModel, i: int, j: int, Z: Set[Pair]) -> bool:
    escape = right.full_loop_mask
    sources = left.succ[i]
    for w in right.succ[j]:
        if escape >> w & 1:
            continue
        if not any((u, w) in Z for u in sources):
            return False
    return True


def _included(left: PointedModel, right: PointedModel, i: int, j: int) -> bool:
    return left.valuation[i] <= right.valuation[j]


# ---------------------------------------------------------------------------
# Decision procedures


def bisimilar(left: PointedModel, right: PointedModel, with_witness: bool = True) -> SimulationResult:
    """Greatest bisimulation; the witness is its part reachable from the points."""

    _require_same_signature(left, right)
    start = {
        (i, j)
        for i, j in _reachable_pairs(left, right)
        if left.valuation[i] == right.valuation[j]
    }
    relation = _refine(
        left,
        right,
        start,
        lambda i, j, Z: _forth(left, right, i, j, Z) and _back(left, right, i, j, Z),
    )
    return _result(left, right, relation, with_witness)


def n_bisimilar(left: PointedModel, right: PointedModel, n: int) -> bool:
    """True iff the points agree on every formula of modal depth at most ``n``.

    Z₀ is atom agreement and Z_{k+1} keeps the pairs of Z_k whose successors
    can be matched forth and back inside Z_k.
    """

    _require_same_signature(left, right)
    if n < 0:
        raise ValueError("n must be >= 0")
    level = {
        (i, j)
        for i in range(len(left.states))
        for j in range(len(right.states))
        if left.valuation[i] == right.valuation[j]
    }
    for _ in range(n):
        previous = level
        level = {
            (i, j)
            for i, j in previous
            if _forth(left, right, i, j, previous) and _back(left, right, i, j, previous)
        }
        if level == previous:
            break
    return (left.point_index, right.point_index) in level


def simulates(left: PointedModel, right: PointedModel, with_witness: bool = True) -> SimulationResult:
    """Plain simulation for the positive fragment: atom inclusion, forth and back, no escapes."""

    _require_same_signature(left, right)
    start = {(i, j) for i, j in _reachable_pairs(left, right) if _included(left, right, i, j)}
    relation = _refine(
        left,
        right,
        start,
        lambda i, j, Z: _forth(left, right, i, j, Z) and _back(left, right, i, j, Z),
    )
    return _result(left, right, relation, with_witness)


def weak_simulates(left: PointedModel, right: PointedModel, with_witness: bool = True) -> SimulationResult:
    """Is there a weak simulation from ``left`` to ``right`` linking the points?

    forth′: every successor of t is bisimilar to ○∅ or has a matching
    successor of t′. back′: every successor of t′ is bisimilar to ○Prop or
    has a matching successor of t.
    """

    _require_same_signature(left, right)
    start = {(i, j) for i, j in _reachable_pairs(left, right) if _included(left, right, i, j)}
    relation = _refine(
        left,
        right,
        start,
        lambda i, j, Z: _weak_forth(left, right, i, j, Z) and _weak_back(left, right, i, j, Z),
    )
    result = _result(left, right, relation, with_witness)
    LOGGER.debug(
        "weak simulation %d→%d states: %s (%d surviving pairs)",
        len(left.states),
        len(right.states),
        result.holds,
        len(relation),
    )
    return result


def bisim_to_loopstate(model: PointedModel, which: str) -> bool:
    """Is the point bisimilar to ○∅ (``empty``) or ○Prop (``full``)?"""

    if which == EMPTY:
        mask = model.empty_loop_mask
    elif which == FULL:
        mask = model.full_loop_mask
    else:
        raise ValueError(f"loopstate kind must be 'empty' or 'full', got {which!r}")
    return bool(mask >> model.point_index & 1)


# ---------------------------------------------------------------------------
# Relation checks and algebra


def is_weak_simulation(relation: Relation) -> bool:
    left, right = relation.left, relation.right
    if left.signature != right.signature or not relation.contains_points:
        return False
    Z = relation.indexed()
    return all(
        _included(left, right, i, j)
        and _weak_forth(left, right, i, j, Z)
        and _weak_back(left, right, i, j, Z)
        for i, j in Z
    )


def is_bisimulation(relation: Relation) -> bool:
    left, right = relation.left, relation.right
    if left.signature != right.signature or not relation.contains_points:
        return False
    Z = relation.indexed()
    return all(
        left.valuation[i] == right.valuation[j]
        and _forth(left, right, i, j, Z)
        and _back(left, right, i, j, Z)
        for i, j in Z
    )


def identity_relation(model: PointedModel) -> Relation:
    return Relation(model, model, frozenset((state, state) for state in model.states))


def full_relation(left: PointedModel, right: PointedModel) -> Relation:
    return Relation(left, right, frozenset((a, b) for a in left.states for b in right.states))


def converse(relation: Relation) -> Relation:
    return Relation(relation.right, relation.left, frozenset((b, a) for a, b in relation.pairs))


def flipped_converse(relation: Relation) -> Relation:
    """Z⁻¹ between the flipped models: a weak simulation flip(m′) → flip(m) when Z is one m → m′."""

    return Relation(
        flip_model(relation.right),
        flip_model(relation.left),
        frozenset((b, a) for a, b in relation.pairs),
    )


def compose(first: Relation, second: Relation) -> Relation:
    """first ∘ second: pairs (a, c) with (a, b) ∈ first and (b, c) ∈ second."""

    if first.right != second.left:
        raise ValueError("cannot compose: the middle models differ")
    by_middle: dict[str, list[str]] = {}
    for b, c in second.pairs:
        by_middle.setdefault(b, []).append(c)
    pairs = frozenset((a, c) for a, b in first.pairs for c in by_middle.get(b, ()))
    return Relation(first.left, second.right, pairs)


def relation_from_pairs(
    left: PointedModel, right: PointedModel, pairs: Iterable[Tuple[str, str]]
) -> Relation:
    return Relation(left, right, frozenset(pairs))


__all__ = [
    "Relation",
    "SimulationResult",
    "bisim_to_loopstate",
    "bisimilar",
    "compose",
    "converse",
    "flipped_converse",
    "full_relation",
    "identity_relation",
    "is_bisimulation",
    "is_weak_simulation",
    "n_bisimilar",
    "relation_from_pairs",
    "simulates",
    "weak_simulates",
]
