"""Bounded streams of formulas and models, and seeded random generators.

Formulas are enumerated bottom-up by size (leaves plus modal operators) and
deduplicated through ``canonical``. Models are enumerated up to isomorphism
by keeping only the raw encodings that are minimal among their relabellings.
"""

from __future__ import annotations

import logging
import random
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple

from ..core.connectives import (
    CONN_AND,
    CONN_BOT,
    CONN_BOX,
    CONN_DIA,
    CONN_NEG_ATOM,
    CONN_OR,
    CONN_TOP,
    POSITIVE_FRAGMENT,
)
from .formula import BOT, TOP, Formula, PropSignature, atom, box, canonical, conj, dia, disj, formula_size, modal_depth, neg_atom, sort_key
from .kripke import PointedModel, TreeNode, tree_model

LOGGER = logging.getLogger(__name__)

MAX_EXHAUSTIVE_STATES = 4


def _names(sig: PropSignature | Iterable[str]) -> Tuple[str, ...]:
    return sig.props if isinstance(sig, PropSignature) else tuple(sig)


# ---------------------------------------------------------------------------
# Formulas


def _leaves(
    names: Tuple[str, ...],
    fragment: FrozenSet[str],
    positive_atoms: Tuple[str, ...] | None,
    negative_atoms: Tuple[str, ...] | None,
) -> List[Formula]:
    leaves = [atom(name) for name in (names if positive_atoms is None else positive_atoms)]
    if CONN_NEG_ATOM in fragment:
        leaves.extend(neg_atom(name) for name in (names if negative_atoms is None else negative_atoms))
    if CONN_TOP in fragment:
        leaves.append(TOP)
    if CONN_BOT in fragment:
        leaves.append(BOT)
    return leaves


@lru_cache(maxsize=64)
def _formula_layers(
    names: Tuple[str, ...],
    fragment: FrozenSet[str],
    max_depth: int,
    max_size: int,
    positive_atoms: Tuple[str, ...] | None,
    negative_atoms: Tuple[str, ...] | None,
) -> Tuple[Tuple[Formula, ...], ...]:
    layers: List[List[Formula]] = [[]]
    seen: Set[Formula] = set()
    depth: Dict[Formula, int] = {}

    def offer(candidate: Formula, size: int, bucket: List[Formula]) -> None:
        form = canonical(candidate)
        if form in seen or formula_size(form) != size:
            return
        d = modal_depth(form)
        if d > max_depth:
            return
        seen.add(form)
        depth[form] = d
        bucket.append(form)

    first: List[Formula] = []
    for leaf in _leaves(names, fragment, positive_atoms, negative_atoms):
        offer(leaf, 1, first)
    layers.append(first)

    for size in range(2, max_size + 1):
        bucket: List[Formula] = []
        for inner in layers[size - 1]:
            if depth[inner] >= max_depth:
                continue
            if CONN_DIA in fragment:
                offer(dia(inner), size, bucket)
            if CONN_BOX in fragment:
                offer(box(inner), size, bucket)
        for small in range(1, size // 2 + 1):
            for left in layers[small]:
                for right in layers[size - small]:
                    if CONN_AND in fragment:
                        offer(conj(left, right), size, bucket)
                    if CONN_OR in fragment:
                        offer(disj(left, right), size, bucket)
        bucket.sort(key=sort_key)
        layers.append(bucket)
        LOGGER.debug("formula layer %d: %d formulas", size, len(bucket))
    return tuple(tuple(layer) for layer in layers)


def enumerate_formulas(
    sig: PropSignature | Iterable[str],
    fragment: Iterable[str] = POSITIVE_FRAGMENT,
    max_depth: int = 2,
    max_size: int = 5,
    positive_atoms: Iterable[str] | None = None,
    negative_atoms: Iterable[str] | None = None,
) -> Iterator[Formula]:
    """Every fragment formula within the bounds, once per canonical form, smallest first.

    ``positive_atoms``/``negative_atoms`` restrict which names may occur
    unnegated/negated, which is how uniform [P;Q] formulas are enumerated.
    """

    layers = _formula_layers(
        _names(sig),
        frozenset(fragment),
        max_depth,
        max_size,
        None if positive_atoms is None else tuple(positive_atoms),
        None if negative_atoms is None else tuple(negative_atoms),
    )
    for layer in layers:
        yield from layer


def random_formula(
    rng: random.Random,
    sig: PropSignature | Iterable[str],
    fragment: Iterable[str] = POSITIVE_FRAGMENT,
    max_depth: int = 2,
    budget: int = 4,
    positive_atoms: Sequence[str] | None = None,
    negative_atoms: Sequence[str] | None = None,
) -> Formula:
    """A random fragment formula of modal depth at most ``max_depth``.

    ``budget`` bounds the number of ∧/∨ nodes.
    """

    names = _names(sig)
    allowed = frozenset(fragment)
    leaves = _leaves(
        names,
        allowed,
        None if positive_atoms is None else tuple(positive_atoms),
        None if negative_atoms is None else tuple(negative_atoms),
    )
    if not leaves:
        raise ValueError("the fragment and signature admit no leaf formulas")
    modal = [conn for conn in (CONN_DIA, CONN_BOX) if conn in allowed]
    junction = [conn for conn in (CONN_AND, CONN_OR) if conn in allowed]

    def grow(depth: int, junctions: int) -> Formula:
        options = ["leaf"]
        if depth > 0 and modal:
            options += ["modal", "modal"]
        if junctions > 0 and junction:
            options += ["junction", "junction"]
        pick = rng.choice(options)
        if pick == "leaf":
            return rng.choice(leaves)
        if pick == "modal":
            body = grow(depth - 1, junctions)
            return dia(body) if rng.choice(modal) == CONN_DIA else box(body)
        left_budget = rng.randint(0, junctions - 1)
        left = grow(depth, left_budget)
        right = grow(depth, junctions - 1 - left_budget)
        return conj(left, right) if rng.choice(junction) == CONN_AND else disj(left, right)

    return grow(max_depth, budget)


# ---------------------------------------------------------------------------
# Models


def _reachable_from_zero(n: int, edge_bits: int) -> bool:
    seen = 1
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if edge_bits >> (i * n + j) & 1 and not seen >> j & 1:
                seen |= 1 << j
                frontier.append(j)
    return seen == (1 << n) - 1


def _relabel(n: int, edge_bits: int, colours: Tuple[int, ...], order: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    # order[new] = old; state 0 (the point) never moves.
    position = [0] * n
    for new, old in enumerate(order):
        position[old] = new
    bits = 0
    for i in range(n):
        for j in range(n):
            if edge_bits >> (i * n + j) & 1:
                bits |= 1 << (position[i] * n + position[j])
    return bits, tuple(colours[old] for old in order)


def _model_from_code(names: Tuple[str, ...], n: int, edge_bits: int, colours: Tuple[int, ...]) -> PointedModel:
    states = tuple(f"s{i}" for i in range(n))
    edges = frozenset(
        (states[i], states[j]) for i in range(n) for j in range(n) if edge_bits >> (i * n + j) & 1
    )
    valuation = tuple(
        frozenset(name for k, name in enumerate(names) if colour >> k & 1) for colour in colours
    )
    return PointedModel(names, states, edges, valuation, states[0])


def enumerate_models(
    sig: PropSignature | Iterable[str],
    max_states: int,
    generated_only: bool = False,
    min_states: int = 1,
) -> Iterator[PointedModel]:
    """All pointed models with ``min_states``..``max_states`` states, one per isomorphism class.

    The point is always ``s0``; an encoding is kept only when no relabelling
    of the other states gives a smaller one.
    """

    if max_states > MAX_EXHAUSTIVE_STATES:
        raise ValueError(f"exhaustive model enumeration stops at {MAX_EXHAUSTIVE_STATES} states")
    names = _names(sig)
    colour_count = 1 << len(names)
    for n in range(max(1, min_states), max_states + 1):
        orders = [(0,) + rest for rest in permutations(range(1, n))][1:]
        produced = 0
        for edge_bits in range(1 << (n * n)):
            if generated_only and not _reachable_from_zero(n, edge_bits):
                continue
            for colours in product(range(colour_count), repeat=n):
                code = (edge_bits, colours)
                if any(_relabel(n, edge_bits, colours, order) < code for order in orders):
                    continue
                produced += 1
                yield _model_from_code(names, n, edge_bits, colours)
        LOGGER.debug("enumerated %d models with %d states", produced, n)


def random_model(
    rng: random.Random,
    sig: PropSignature | Iterable[str],
    min_states: int = 1,
    max_states: int = 4,
    density: float = 0.5,
) -> PointedModel:
    names = _names(sig)
    n = rng.randint(min_states, max_states)
    states = tuple(f"s{i}" for i in range(n))
    edges = frozenset((a, b) for a in states for b in states if rng.random() < density)
    valuation = tuple(frozenset(name for name in names if rng.random() < 0.5) for _ in states)
    return PointedModel(names, states, edges, valuation, states[0])


def _trees(colours: Tuple[FrozenSet[str], ...], depth: int, branching: int) -> List[TreeNode]:
    if depth == 0:
        return [TreeNode(colour) for colour in colours]
    below = _trees(colours, depth - 1, branching)
    shapes = [()]
    for width in range(1, branching + 1):
        shapes.extend(combinations_with_replacement(range(len(below)), width))
    return [
        TreeNode(colour, tuple(below[k] for k in shape))
        for colour in colours
        for shape in shapes
    ]


def tree_models(sig: PropSignature | Iterable[str], depth: int, branching: int) -> Iterator[PointedModel]:
    """Every tree model of height at most ``depth`` with at most ``branching`` children per node."""

    names = _names(sig)
    colours = tuple(
        frozenset(name for k, name in enumerate(names) if bits >> k & 1) for bits in range(1 << len(names))
    )
    for tree in _trees(colours, depth, branching):
        yield tree_model(tree, names)


__all__ = [
    "MAX_EXHAUSTIVE_STATES",
    "enumerate_formulas",
    "enumerate_models",
    "random_formula",
    "random_model",
    "tree_models",
]
