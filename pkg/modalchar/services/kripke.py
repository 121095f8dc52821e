"""Beginner-friendly overview for finite pointed Kripke models.

WHAT: The ``PointedModel`` value type, model checking, and the structural
operations the characterisation machinery needs (generated submodels,
height, tree unravelling, valuation flips, ▽-gluing, loopstates and
isomorphism).
WHEN: Every example, every counterexample and every fixture is a pointed
model, so this module sits right above ``formula``.
WHY: Keeping the index structures (successor bitmasks, predecessor lists,
loopstate sets) cached on the immutable model lets the fixpoint loops in
``simulation`` reuse them for free.
HOW: States are opaque strings kept in a tuple; their position in that
tuple is the bit used by the extension masks. Graph questions (acyclicity,
longest paths, isomorphism) are answered by networkx.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from ..core.connectives import KIND_AND, KIND_ATOM, KIND_BOT, KIND_BOX, KIND_DIA, KIND_NEG_ATOM, KIND_OR, KIND_TOP
from ..core.errors import ModelFormatError, SignatureError
from .formula import Formula, PropSignature, atoms_of

EMPTY = "empty"
FULL = "full"
LOOPSTATE_KINDS = (EMPTY, FULL)


def _names(sig: PropSignature | Iterable[str]) -> Tuple[str, ...]:
    if isinstance(sig, PropSignature):
        return sig.props
    return tuple(sig)


@dataclass(frozen=True)
class PointedModel:
    """A finite Kripke model with a distinguished point.

    ``valuation`` is aligned with ``states``: ``valuation[i]`` is the set of
    propositions true at ``states[i]``.
    """

    signature: Tuple[str, ...]
    states: Tuple[str, ...]
    edges: FrozenSet[Tuple[str, str]]
    valuation: Tuple[FrozenSet[str], ...]
    point: str

    def __post_init__(self) -> None:
        if len(set(self.states)) != len(self.states):
            raise ModelFormatError("state ids must be distinct")
        if len(self.valuation) != len(self.states):
            raise ModelFormatError("valuation must list one proposition set per state")
        known = set(self.states)
        if self.point not in known:
            raise ModelFormatError(f"point {self.point!r} is not a state")
        for source, target in self.edges:
            if source not in known or target not in known:
                raise ModelFormatError(f"edge ({source!r}, {target!r}) mentions an unknown state")
        allowed = set(self.signature)
        for state, props in zip(self.states, self.valuation):
            extra = set(props) - allowed
            if extra:
                raise ModelFormatError(
                    f"state {state!r} is labelled with {sorted(extra)} outside the signature"
                )

    @classmethod
    def build(
        cls,
        signature: PropSignature | Iterable[str],
        states: Iterable[str],
        edges: Iterable[Tuple[str, str]],
        valuation: Mapping[str, Iterable[str]],
        point: str,
    ) -> "PointedModel":
        """Convenience constructor taking a ``state -> props`` mapping."""

        ordered = tuple(states)
        return cls(
            signature=_names(signature),
            states=ordered,
            edges=frozenset((a, b) for a, b in edges),
            valuation=tuple(frozenset(valuation.get(state, ())) for state in ordered),
            point=point,
        )

    # ---- index structures (computed once per model)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {state: i for i, state in enumerate(self.states)}

    @property
    def point_index(self) -> int:
        return self.index[self.point]

    @cached_property
    def succ(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in self.states]
        for source, target in sorted(self.edges):
            out[self.index[source]].append(self.index[target])
        return tuple(tuple(items) for items in out)

    @cached_property
    def pred(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in self.states]
        for source, targets in enumerate(self.succ):
            for target in targets:
                out[target].append(source)
        return tuple(tuple(items) for items in out)

    @cached_property
    def succ_mask(self) -> Tuple[int, ...]:
        masks = []
        for targets in self.succ:
            mask = 0
            for target in targets:
                mask |= 1 << target
            masks.append(mask)
        return tuple(masks)

    @property
    def all_mask(self) -> int:
        return (1 << len(self.states)) - 1

    @cached_property
    def prop_mask(self) -> Dict[str, int]:
        masks = {name: 0 for name in self.signature}
        for i, props in enumerate(self.valuation):
            for name in props:
                masks[name] |= 1 << i
        return masks

    @cached_property
    def empty_loop_mask(self) -> int:
        bad = [not self.succ[i] or bool(self.valuation[i]) for i in range(len(self.states))]
        return self._cannot_reach(bad)

    @cached_property
    def full_loop_mask(self) -> int:
        full = frozenset(self.signature)
        bad = [not self.succ[i] or self.valuation[i] != full for i in range(len(self.states))]
        return self._cannot_reach(bad)

    def _cannot_reach(self, bad: List[bool]) -> int:
        # Backward search from the bad states marks everything that can reach one.
        tainted = list(bad)
        stack = [i for i, flag in enumerate(bad) if flag]
        while stack:
            current = stack.pop()
            for source in self.pred[current]:
                if not tainted[source]:
                    tainted[source] = True
                    stack.append(source)
        mask = 0
        for i, flag in enumerate(tainted):
            if not flag:
                mask |= 1 << i
        return mask

    @cached_property
    def iso_key(self) -> str:
        return nx.weisfeiler_lehman_graph_hash(self.to_digraph(), node_attr="label", iterations=3)

    # ---- accessors

    def props(self, state: str) -> FrozenSet[str]:
        return self.valuation[self.index[state]]

    def successors(self, state: str) -> Tuple[str, ...]:
        return tuple(self.states[j] for j in self.succ[self.index[state]])

    def size(self) -> int:
        return len(self.states)

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for state, props in zip(self.states, self.valuation):
            marker = "*" if state == self.point else ""
            graph.add_node(state, props=props, label=marker + ",".join(sorted(props)))
        graph.add_edges_from(self.edges)
        return graph

    def with_point(self, state: str) -> "PointedModel":
        if state not in self.index:
            raise ModelFormatError(f"point {state!r} is not a state")
        return replace(self, point=state)


# ---------------------------------------------------------------------------
# Fixed models


def empty_loop(sig: PropSignature | Iterable[str]) -> PointedModel:
    """○∅: one reflexive state with an empty valuation."""

    return PointedModel(_names(sig), ("o",), frozenset({("o", "o")}), (frozenset(),), "o")


def full_loop(sig: PropSignature | Iterable[str]) -> PointedModel:
    """○Prop: one reflexive state where every proposition holds."""

    names = _names(sig)
    return PointedModel(names, ("o",), frozenset({("o", "o")}), (frozenset(names),), "o")


def deadlock(sig: PropSignature | Iterable[str], props: Iterable[str] = ()) -> PointedModel:
    return PointedModel(_names(sig), ("d",), frozenset(), (frozenset(props),), "d")


def path_model(
    n: int,
    sig: PropSignature | Iterable[str] = (),
    transitive: bool = False,
) -> PointedModel:
    """Pₙ: states s0..sn with edges s_i → s_{i+1} (all i < j when transitive)."""

    if n < 0:
        raise ValueError("path length must be >= 0")
    states = tuple(f"s{i}" for i in range(n + 1))
    if transitive:
        edges = {(states[i], states[j]) for i in range(n + 1) for j in range(i + 1, n + 1)}
    else:
        edges = {(states[i], states[i + 1]) for i in range(n)}
    return PointedModel(_names(sig), states, frozenset(edges), tuple(frozenset() for _ in states), states[0])


@dataclass(frozen=True)
class TreeNode:
    """A finite tree of valuations, turned into a model by ``tree_model``."""

    props: FrozenSet[str]
    children: Tuple["TreeNode", ...] = ()


def tree_model(root: TreeNode, sig: PropSignature | Iterable[str]) -> PointedModel:
    """Node ids are dotted child positions below the root ``w``."""

    names = _names(sig)
    allowed = frozenset(names)
    states: List[str] = []
    valuation: List[FrozenSet[str]] = []
    edges: List[Tuple[str, str]] = []
    stack: List[Tuple[TreeNode, str]] = [(root, "w")]
    while stack:
        node, name = stack.pop()
        states.append(name)
        valuation.append(node.props & allowed)
        for k, child in enumerate(node.children):
            child_name = f"{name}.{k}"
            edges.append((name, child_name))
            stack.append((child, child_name))
    return PointedModel(names, tuple(states), frozenset(edges), tuple(valuation), "w")


# ---------------------------------------------------------------------------
# Semantics


class Evaluator:
    """Bottom-up model checker for one model.

    Extensions are bitmasks over the model's states, cached per subformula,
    so checking many formulas that share subterms against the same model
    costs each subterm once.
    """

    def __init__(self, model: PointedModel) -> None:
        self.model = model
        self._cache: Dict[Formula, int] = {}

    def extension(self, formula: Formula) -> int:
        cached = self._cache.get(formula)
        if cached is not None:
            return cached
        model = self.model
        kind = formula.kind
        if kind == KIND_TOP:
            result = model.all_mask
        elif kind == KIND_BOT:
            result = 0
        elif kind in (KIND_ATOM, KIND_NEG_ATOM):
            mask = model.prop_mask.get(formula.name or "")
            if mask is None:
                raise SignatureError(
                    f"proposition {formula.name!r} is not in the model signature {list(model.signature)}"
                )
            result = mask if kind == KIND_ATOM else model.all_mask & ~mask
        elif kind == KIND_AND:
            result = model.all_mask
            for child in formula.children:
                result &= self.extension(child)
        elif kind == KIND_OR:
            result = 0
            for child in formula.children:
                result |= self.extension(child)
        elif kind == KIND_DIA:
            inner = self.extension(formula.child)
            result = 0
            for i, succ in enumerate(model.succ_mask):
                if succ & inner:
                    result |= 1 << i
        elif kind == KIND_BOX:
            outside = model.all_mask & ~self.extension(formula.child)
            result = 0
            for i, succ in enumerate(model.succ_mask):
                if not succ & outside:
                    result |= 1 << i
        else:
            raise ValueError(f"unknown node kind {kind!r}")
        self._cache[formula] = result
        return result

    def holds(self, formula: Formula, state: str | None = None) -> bool:
        index = self.model.point_index if state is None else self.model.index[state]
        return bool(self.extension(formula) >> index & 1)


def modelcheck(formula: Formula, model: PointedModel, evaluator: Evaluator | None = None) -> bool:
    """True iff ``formula`` holds at the point of ``model``."""

    unknown = atoms_of(formula) - set(model.signature)
    if unknown:
        raise SignatureError(
            f"formula mentions {sorted(unknown)} outside the model signature {list(model.signature)}"
        )
    return (evaluator or Evaluator(model)).holds(formula)


# ---------------------------------------------------------------------------
# Structure


def reachable_states(model: PointedModel, start: str | None = None) -> List[str]:
    """States reachable from ``start`` (default: the point), in model order."""

    origin = model.index[start if start is not None else model.point]
    seen = {origin}
    stack = [origin]
    while stack:
        current = stack.pop()
        for target in model.succ[current]:
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return [model.states[i] for i in sorted(seen)]


def generated_submodel(model: PointedModel) -> PointedModel:
    keep = reachable_states(model)
    if len(keep) == len(model.states):
        return model
    kept = set(keep)
    return PointedModel(
        signature=model.signature,
        states=tuple(keep),
        edges=frozenset((a, b) for a, b in model.edges if a in kept),
        valuation=tuple(model.props(state) for state in keep),
        point=model.point,
    )


def rooted_at(model: PointedModel, state: str) -> PointedModel:
    """Move the point to ``state`` and keep only what it generates."""

    return generated_submodel(model.with_point(state))


def height(model: PointedModel) -> int | float:
    """Length of the longest path from the point; ``math.inf`` if a cycle is reachable."""

    graph = model.to_digraph()
    reach = nx.descendants(graph, model.point) | {model.point}
    sub = graph.subgraph(reach)
    if not nx.is_directed_acyclic_graph(sub):
        return math.inf
    return nx.dag_longest_path_length(sub)


PATH_SEPARATOR = ">"


def _path_component(state: str) -> str:
    # Escaped so that distinct paths never share a name.
    return state.replace("\\", "\\\\").replace(PATH_SEPARATOR, "\\" + PATH_SEPARATOR)


def tree_unravel(model: PointedModel, n: int) -> PointedModel:
    """Depth-n unravelling: one state per path of at most n edges from the point.

    A state is named by its path, components joined with ``>``; a ``>`` or
    ``\\`` inside an original id is backslash-escaped.
    """

    if n < 0:
        raise ValueError("unravelling depth must be >= 0")
    root_name = _path_component(model.point)
    states: List[str] = [root_name]
    valuation: List[FrozenSet[str]] = [model.props(model.point)]
    edges: List[Tuple[str, str]] = []
    frontier = [(model.point, root_name)]
    for _ in range(n):
        following = []
        for last, name in frontier:
            for nxt in model.successors(last):
                longer_name = name + PATH_SEPARATOR + _path_component(nxt)
                states.append(longer_name)
                valuation.append(model.props(nxt))
                edges.append((name, longer_name))
                following.append((nxt, longer_name))
        frontier = following
    return PointedModel(model.signature, tuple(states), frozenset(edges), tuple(valuation), root_name)


def flip_model(model: PointedModel) -> PointedModel:
    """(·)^¬ on models: complement every valuation within the signature."""

    full = frozenset(model.signature)
    return replace(model, valuation=tuple(full - props for props in model.valuation))


def glue(
    props: Iterable[str],
    examples: Sequence[PointedModel],
    signature: PropSignature | Iterable[str] | None = None,
) -> PointedModel:
    """▽_P: a fresh root coloured ``props`` whose successors are the examples' points.

    The examples are copied disjointly in the given order; copy ``k`` has its
    states prefixed with ``"k."``. With no examples the result is a deadlock.
    """

    if signature is not None:
        names = _names(signature)
    elif examples:
        names = examples[0].signature
    else:
        names = tuple(sorted(set(props)))
    root_props = frozenset(props)
    if not root_props <= set(names):
        raise SignatureError(f"root colour {sorted(root_props)} is outside the signature {list(names)}")
    for example in examples:
        if example.signature != names:
            raise SignatureError("glued examples must share one signature")
    states: List[str] = ["r"]
    valuation: List[FrozenSet[str]] = [root_props]
    edges: List[Tuple[str, str]] = []
    for k, example in enumerate(examples):
        prefix = f"{k}."
        states.extend(prefix + state for state in example.states)
        valuation.extend(example.valuation)
        edges.extend((prefix + a, prefix + b) for a, b in example.edges)
        edges.append(("r", prefix + example.point))
    return PointedModel(names, tuple(states), frozenset(edges), tuple(valuation), "r")


def loopstate_states(model: PointedModel, which: str) -> FrozenSet[str]:
    """States whose generated submodel is bisimilar to ○∅ (``empty``) or ○Prop (``full``)."""

    mask = _loop_mask(model, which)
    return frozenset(state for i, state in enumerate(model.states) if mask >> i & 1)


def _loop_mask(model: PointedModel, which: str) -> int:
    if which == EMPTY:
        return model.empty_loop_mask
    if which == FULL:
        return model.full_loop_mask
    raise ValueError(f"loopstate kind must be one of {LOOPSTATE_KINDS}, got {which!r}")


# ---------------------------------------------------------------------------
# Isomorphism


def iso_key(model: PointedModel) -> str:
    return model.iso_key


def example_order(model: PointedModel) -> Tuple[int, str]:
    """Deterministic ordering for example lists: state count, then WL hash."""

    return (len(model.states), model.iso_key)


def isomorphic(left: PointedModel, right: PointedModel) -> bool:
    """Point- and valuation-preserving isomorphism."""

    if left.signature != right.signature:
        return False
    if len(left.states) != len(right.states) or len(left.edges) != len(right.edges):
        return False
    if left.iso_key != right.iso_key:
        return False
    matcher = DiGraphMatcher(
        left.to_digraph(),
        right.to_digraph(),
        node_match=lambda a, b: a["label"] == b["label"],
    )
    return matcher.is_isomorphic()


def dedup_isomorphic(models: Iterable[PointedModel]) -> List[PointedModel]:
    """Keep the first model of every isomorphism class, preserving order."""

    buckets: Dict[Tuple[int, int, str], List[PointedModel]] = {}
    kept: List[PointedModel] = []
    for model in models:
        key = (len(model.states), len(model.edges), model.iso_key)
        bucket = buckets.setdefault(key, [])
        if any(isomorphic(model, seen) for seen in bucket):
            continue
        bucket.append(model)
        kept.append(model)
    return kept


def contains_isomorphic(models: Iterable[PointedModel], target: PointedModel) -> bool:
    return any(isomorphic(model, target) for model in models)


def canonical_examples(models: Iterable[PointedModel]) -> List[PointedModel]:
    """Isomorphism-deduplicated and deterministically ordered."""

    return sorted(dedup_isomorphic(models), key=example_order)


__all__ = [
    "EMPTY",
    "FULL",
    "Evaluator",
    "LOOPSTATE_KINDS",
    "PointedModel",
    "TreeNode",
    "canonical_examples",
    "contains_isomorphic",
    "deadlock",
    "dedup_isomorphic",
    "empty_loop",
    "example_order",
    "flip_model",
    "full_loop",
    "generated_submodel",
    "glue",
    "height",
    "isomorphic",
    "iso_key",
    "loopstate_states",
    "modelcheck",
    "path_model",
    "reachable_states",
    "rooted_at",
    "tree_model",
    "tree_unravel",
]
