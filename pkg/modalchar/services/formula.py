"""Beginner-friendly overview for this module.

WHAT: The modal formula AST (negation normal form only), its printer, the
structural measures, fragment classification and the three syntactic
transformations: the ◁-dual, the atom flip and the uniform Q-flip.
WHEN: Everything else in the package builds on these values.
WHY: Normal-form rewriting, model checking and the tableau all walk the
same immutable tree, so it lives in one place with one canonical ordering.
HOW: ``Formula`` is a frozen dataclass tagged with a node kind; smart
constructors (``conj``/``disj``) flatten nested junctions so every And/Or
node has at least two children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Tuple

from ..core.connectives import (
    JUNCTION_KINDS,
    KIND_AND,
    KIND_ATOM,
    KIND_BOT,
    KIND_BOX,
    KIND_DIA,
    KIND_NEG_ATOM,
    KIND_OR,
    KIND_ORDER,
    KIND_TOP,
    LEAF_KINDS,
    MODAL_KINDS,
    RESERVED_NAMES,
    kind_to_connective,
)
from ..core.errors import FragmentError, SignatureError, UnknownPropositionError

NEGATED_SUFFIX = "_neg"


@dataclass(frozen=True)
class Formula:
    """One node of a modal formula in negation normal form."""

    kind: str
    name: str | None = None
    children: Tuple["Formula", ...] = ()
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind in (KIND_ATOM, KIND_NEG_ATOM):
            if not self.name:
                raise ValueError(f"{self.kind} node needs a proposition name")
            if self.children:
                raise ValueError("atoms have no children")
        elif self.kind in (KIND_TOP, KIND_BOT):
            if self.children or self.name:
                raise ValueError("constants carry neither name nor children")
        elif self.kind in MODAL_KINDS:
            if len(self.children) != 1:
                raise ValueError("modal nodes have exactly one child")
        elif self.kind in JUNCTION_KINDS:
            if len(self.children) < 2:
                raise ValueError("junction nodes need at least two children")
        else:
            raise ValueError(f"unknown node kind {self.kind!r}")
        object.__setattr__(self, "_hash", hash((self.kind, self.name, self.children)))

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        # String hashes differ between processes; rebuild instead of copying _hash.
        return (Formula, (self.kind, self.name, self.children))

    def __str__(self) -> str:
        return to_text(self)

    @property
    def child(self) -> "Formula":
        return self.children[0]


TOP = Formula(KIND_TOP)
BOT = Formula(KIND_BOT)


def atom(name: str) -> Formula:
    return Formula(KIND_ATOM, name)


def neg_atom(name: str) -> Formula:
    return Formula(KIND_NEG_ATOM, name)


def dia(child: Formula) -> Formula:
    return Formula(KIND_DIA, None, (child,))


def box(child: Formula) -> Formula:
    return Formula(KIND_BOX, None, (child,))


def _junction(kind: str, parts: Iterable[Formula]) -> Formula:
    items: list[Formula] = []
    for part in parts:
        if part.kind == kind:
            items.extend(part.children)
        else:
            items.append(part)
    if not items:
        # ⊤/⊥ as empty junctions would leave the positive fragment.
        raise ValueError(f"empty {kind} is not a formula")
    if len(items) == 1:
        return items[0]
    return Formula(kind, None, tuple(items))


def conj(*parts: Formula | Iterable[Formula]) -> Formula:
    """Flattened conjunction; accepts formulas or a single iterable of them."""

    return _junction(KIND_AND, _spread(parts))


def disj(*parts: Formula | Iterable[Formula]) -> Formula:
    """Flattened disjunction; accepts formulas or a single iterable of them."""

    return _junction(KIND_OR, _spread(parts))


def _spread(parts: tuple) -> list[Formula]:
    if len(parts) == 1 and not isinstance(parts[0], Formula):
        return list(parts[0])
    return list(parts)


def box_power(n: int, body: Formula) -> Formula:
    for _ in range(n):
        body = box(body)
    return body


def dia_power(n: int, body: Formula) -> Formula:
    for _ in range(n):
        body = dia(body)
    return body


# ---------------------------------------------------------------------------
# Signatures


@dataclass(frozen=True)
class PropSignature:
    """Ordered proposition names, optionally split into a [P;Q] partition.

    ``negative`` is Q: the names that may only occur negated in uniform
    formulas. P is every other name.
    """

    props: Tuple[str, ...]
    negative: frozenset[str] | None = None

    def __post_init__(self) -> None:
        if len(set(self.props)) != len(self.props):
            raise SignatureError(f"duplicate proposition names in {self.props}")
        for name in self.props:
            if not name or not (name[0].isalpha()) or name in RESERVED_NAMES:
                raise SignatureError(f"invalid proposition name {name!r}")
            if not all(ch.isalnum() or ch == "_" for ch in name):
                raise SignatureError(f"invalid proposition name {name!r}")
        if self.negative is not None and not self.negative <= set(self.props):
            missing = sorted(self.negative - set(self.props))
            raise SignatureError(f"negative names {missing} not in signature")

    @classmethod
    def of(cls, names: Iterable[str]) -> "PropSignature":
        return cls(tuple(names))

    @classmethod
    def parse(cls, text: str) -> "PropSignature":
        names = [part.strip() for part in (text or "").split(",")]
        return cls(tuple(name for name in names if name))

    @classmethod
    def partitioned(cls, positive: Iterable[str], negative: Iterable[str]) -> "PropSignature":
        pos = list(positive)
        neg = list(negative)
        overlap = set(pos) & set(neg)
        if overlap:
            raise SignatureError(f"P and Q must be disjoint, both contain {sorted(overlap)}")
        return cls(tuple(pos + neg), frozenset(neg))

    @property
    def positive(self) -> frozenset[str]:
        return frozenset(self.props) - (self.negative or frozenset())

    def __contains__(self, name: object) -> bool:
        return name in self.props

    def __iter__(self):
        return iter(self.props)

    def __len__(self) -> int:
        return len(self.props)

    def require(self, names: Iterable[str]) -> None:
        unknown = sorted(set(names) - set(self.props))
        if unknown:
            raise UnknownPropositionError(
                f"unknown proposition(s) {', '.join(unknown)}; signature is {list(self.props)}"
            )


def signature_for(formula: Formula) -> PropSignature:
    """Smallest signature covering the formula, in alphabetical order."""

    return PropSignature(tuple(sorted(atoms_of(formula))))


# ---------------------------------------------------------------------------
# Measures and classification


def atoms_of(formula: Formula) -> frozenset[str]:
    found: set[str] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if node.name is not None:
            found.add(node.name)
        stack.extend(node.children)
    return frozenset(found)


def modal_depth(formula: Formula) -> int:
    if formula.kind in LEAF_KINDS:
        return 0
    inner = max(modal_depth(child) for child in formula.children)
    return inner + 1 if formula.kind in MODAL_KINDS else inner


def formula_size(formula: Formula) -> int:
    """Leaves plus modal operators; ∧ and ∨ nodes are not counted."""

    if formula.kind in LEAF_KINDS:
        return 1
    total = sum(formula_size(child) for child in formula.children)
    return total + 1 if formula.kind in MODAL_KINDS else total


def fragment_of(formula: Formula) -> frozenset[str]:
    used: set[str] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        connective = kind_to_connective(node.kind)
        if connective is not None:
            used.add(connective)
        stack.extend(node.children)
    return frozenset(used)


def in_fragment(formula: Formula, fragment: Iterable[str]) -> bool:
    return fragment_of(formula) <= frozenset(fragment)


# ---------------------------------------------------------------------------
# Canonical ordering


@lru_cache(maxsize=1 << 18)
def sort_key(formula: Formula) -> tuple:
    return (
        KIND_ORDER[formula.kind],
        formula.name or "",
        tuple(sort_key(child) for child in formula.children),
    )


@lru_cache(maxsize=1 << 18)
def canonical(formula: Formula) -> Formula:
    """Sorted, flattened, duplicate-free rendition of ``formula``.

    Only commutativity, associativity and idempotence of ∧/∨ are used, so
    the result is logically equivalent to the input.
    """

    if formula.kind in LEAF_KINDS:
        return formula
    children = [canonical(child) for child in formula.children]
    if formula.kind in MODAL_KINDS:
        return Formula(formula.kind, None, (children[0],))
    flat: set[Formula] = set()
    for child in children:
        if child.kind == formula.kind:
            flat.update(child.children)
        else:
            flat.add(child)
    ordered = sorted(flat, key=sort_key)
    if len(ordered) == 1:
        return ordered[0]
    return Formula(formula.kind, None, tuple(ordered))


# ---------------------------------------------------------------------------
# Printing


def to_text(formula: Formula) -> str:
    kind = formula.kind
    if kind == KIND_ATOM:
        return formula.name or ""
    if kind == KIND_NEG_ATOM:
        return f"~{formula.name}"
    if kind == KIND_TOP:
        return "true"
    if kind == KIND_BOT:
        return "false"
    if kind == KIND_DIA:
        return "<>" + _operand_text(formula.child)
    if kind == KIND_BOX:
        return "[]" + _operand_text(formula.child)
    if kind == KIND_AND:
        return " & ".join(
            f"({to_text(child)})" if child.kind == KIND_OR else to_text(child)
            for child in formula.children
        )
    return " | ".join(to_text(child) for child in formula.children)


def _operand_text(child: Formula) -> str:
    if child.kind in JUNCTION_KINDS:
        return f"({to_text(child)})"
    return to_text(child)


# ---------------------------------------------------------------------------
# Transformations


def negate(formula: Formula) -> Formula:
    """NNF of ¬formula: push the negation down to the atoms."""

    kind = formula.kind
    if kind == KIND_TOP:
        return BOT
    if kind == KIND_BOT:
        return TOP
    if kind == KIND_ATOM:
        return neg_atom(formula.name or "")
    if kind == KIND_NEG_ATOM:
        return atom(formula.name or "")
    if kind == KIND_DIA:
        return box(negate(formula.child))
    if kind == KIND_BOX:
        return dia(negate(formula.child))
    if kind == KIND_AND:
        return disj(negate(child) for child in formula.children)
    return conj(negate(child) for child in formula.children)


_DUAL_KIND = {
    KIND_AND: KIND_OR,
    KIND_OR: KIND_AND,
    KIND_DIA: KIND_BOX,
    KIND_BOX: KIND_DIA,
    KIND_TOP: KIND_BOT,
    KIND_BOT: KIND_TOP,
}


def dual(formula: Formula) -> Formula:
    """◁: swap □/◇ and ∧/∨ (and ⊤/⊥), keep atoms. Negated atoms are rejected."""

    kind = formula.kind
    if kind == KIND_NEG_ATOM:
        raise FragmentError(f"dual is undefined on negated atom ~{formula.name}")
    if kind == KIND_ATOM:
        return formula
    if kind in (KIND_TOP, KIND_BOT):
        return Formula(_DUAL_KIND[kind])
    return Formula(_DUAL_KIND[kind], None, tuple(dual(child) for child in formula.children))


def flip_formula(formula: Formula) -> Formula:
    """(·)^¬ on formulas: substitute ¬p for every p and cancel double negations."""

    kind = formula.kind
    if kind == KIND_ATOM:
        return neg_atom(formula.name or "")
    if kind == KIND_NEG_ATOM:
        return atom(formula.name or "")
    if kind in (KIND_TOP, KIND_BOT):
        return formula
    return Formula(kind, None, tuple(flip_formula(child) for child in formula.children))


def negated_name(name: str) -> str:
    return f"{name}{NEGATED_SUFFIX}"


def uniform_flip(formula: Formula, negative: Iterable[str]) -> Formula:
    """Replace every ¬q (q ∈ Q) by a fresh positive atom ``q_neg``.

    The input must be uniform for [P;Q]: names in Q only occur negated and
    every other name only occurs positively.
    """

    q_names = frozenset(negative)
    clashes = {negated_name(q) for q in q_names} & atoms_of(formula)
    if clashes:
        raise SignatureError(f"fresh names {sorted(clashes)} already occur in the formula")

    def walk(node: Formula) -> Formula:
        if node.kind == KIND_NEG_ATOM:
            if node.name not in q_names:
                raise FragmentError(f"~{node.name} is negated but {node.name} is not in Q")
            return atom(negated_name(node.name or ""))
        if node.kind == KIND_ATOM:
            if node.name in q_names:
                raise FragmentError(f"{node.name} is in Q but occurs unnegated")
            return node
        if node.kind in LEAF_KINDS:
            return node
        return Formula(node.kind, None, tuple(walk(child) for child in node.children))

    return walk(formula)


HEIGHT_VARIANTS = ("standard", "top_free", "negated")


def height_formula(n: int, variant: str = "standard") -> Formula:
    """height_n = □ⁿ⁺¹⊥ ∧ ◇ⁿ⊤, true exactly at points of height n.

    ``top_free`` gives □ⁿ⁺¹⊥ ∧ ◇ⁿ□⊥ and ``negated`` gives the NNF of
    ¬height_n written as ◇ⁿ⁺¹⊤ ∨ □ⁿ◇⊤.
    """

    if n < 0:
        raise ValueError("height formulas are indexed by n >= 0")
    if variant == "standard":
        return conj(box_power(n + 1, BOT), dia_power(n, TOP))
    if variant == "top_free":
        return conj(box_power(n + 1, BOT), dia_power(n, box(BOT)))
    if variant == "negated":
        return disj(dia_power(n + 1, TOP), box_power(n, dia(TOP)))
    raise ValueError(f"unknown height variant {variant!r}; expected one of {HEIGHT_VARIANTS}")


__all__ = [
    "BOT",
    "Formula",
    "HEIGHT_VARIANTS",
    "NEGATED_SUFFIX",
    "PropSignature",
    "TOP",
    "atom",
    "atoms_of",
    "box",
    "box_power",
    "canonical",
    "conj",
    "dia",
    "dia_power",
    "disj",
    "dual",
    "flip_formula",
    "formula_size",
    "fragment_of",
    "height_formula",
    "in_fragment",
    "modal_depth",
    "neg_atom",
    "negate",
    "negated_name",
    "signature_for",
    "sort_key",
    "to_text",
    "uniform_flip",
]
