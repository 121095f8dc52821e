"""Normal forms for the positive fragment L{□,◇,∧,∨}.

A basic normal form is ``π ∧ ◇φ₁ ∧ … ∧ ◇φₙ ∧ □(ψ₁ ∨ … ∨ ψₘ)`` where π is a
set of atoms, every φᵢ and ψⱼ is again a basic normal form, and at least one
of the three parts is present. A normal form is a non-empty disjunction of
basic normal forms. Rewriting is innermost-first: children are normalised
before their parent is assembled.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Tuple

from ..core.config import settings
from ..core.connectives import KIND_AND, KIND_ATOM, KIND_BOX, KIND_DIA, KIND_OR
from ..core.errors import FragmentError, MalformedNormalFormError, SizeGuardExceeded
from .formula import Formula, atom, box, conj, dia, disj, to_text

LOGGER = logging.getLogger(__name__)

CASE_ATOMS = "i"
CASE_DIAMONDS = "ii"
CASE_BOX = "iii"
CASE_MIXED = "iv"


@dataclass(frozen=True)
class BasicNormalForm:
    atoms: FrozenSet[str] = frozenset()
    diamonds: Tuple["BasicNormalForm", ...] = ()
    # None when there is no □ conjunct; otherwise the disjuncts under the □.
    box: Tuple["BasicNormalForm", ...] | None = None
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.atoms and not self.diamonds and self.box is None:
            raise MalformedNormalFormError("a basic normal form needs atoms, a ◇ or a □")
        if self.box is not None and not self.box:
            raise MalformedNormalFormError("□ must range over a non-empty disjunction")
        object.__setattr__(self, "_hash", hash((self.atoms, self.diamonds, self.box)))

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (BasicNormalForm, (self.atoms, self.diamonds, self.box))

    @property
    def level(self) -> int:
        return _bnf_level(self)

    def __str__(self) -> str:
        return to_text(bnf_to_formula(self))


@lru_cache(maxsize=None)
def _bnf_level(bnf: BasicNormalForm) -> int:
    children = list(bnf.diamonds) + list(bnf.box or ())
    if not children:
        return 0
    return 1 + max(_bnf_level(child) for child in children)


@dataclass(frozen=True)
class NormalForm:
    disjuncts: Tuple[BasicNormalForm, ...]

    def __post_init__(self) -> None:
        if not self.disjuncts:
            raise MalformedNormalFormError("a normal form needs at least one disjunct")

    @property
    def level(self) -> int:
        return max(bnf.level for bnf in self.disjuncts)

    def __len__(self) -> int:
        return len(self.disjuncts)

    def __iter__(self):
        return iter(self.disjuncts)

    def to_lines(self) -> list[str]:
        return [str(bnf) for bnf in self.disjuncts]


@lru_cache(maxsize=None)
def bnf_key(bnf: BasicNormalForm) -> tuple:
    box_part = (0,) if bnf.box is None else (1,) + tuple(bnf_key(item) for item in bnf.box)
    return (
        tuple(sorted(bnf.atoms)),
        tuple(bnf_key(item) for item in bnf.diamonds),
        box_part,
    )


def _ordered(items: Iterable[BasicNormalForm]) -> Tuple[BasicNormalForm, ...]:
    return tuple(sorted(set(items), key=bnf_key))


def make_bnf(
    atoms: Iterable[str] = (),
    diamonds: Iterable[BasicNormalForm] = (),
    box: Iterable[BasicNormalForm] | None = None,
) -> BasicNormalForm:
    """Build a basic normal form with its children sorted and deduplicated."""

    return BasicNormalForm(
        frozenset(atoms),
        _ordered(diamonds),
        None if box is None else _ordered(box),
    )


def _guard(count: int, cap: int, what: str) -> None:
    if count > cap:
        LOGGER.warning("normal form guard hit: %s would reach %d disjuncts (cap %d)", what, count, cap)
        raise SizeGuardExceeded(f"{what} would produce {count} disjuncts, above the cap of {cap}")


def conj_bnf(first: BasicNormalForm, second: BasicNormalForm, cap: int | None = None) -> BasicNormalForm:
    """The conjunction of two basic normal forms, again a basic normal form.

    Boxes merge via □α ∧ □β ≡ □(α ∧ β), with the inner conjunction distributed
    over both disjunctions. The level never exceeds the larger input level.
    """

    limit = settings.NF_MAX_DISJUNCTS if cap is None else cap
    if first.box is None:
        merged = second.box
    elif second.box is None:
        merged = first.box
    else:
        _guard(len(first.box) * len(second.box), limit, "merging two boxes")
        merged = tuple(conj_bnf(a, b, limit) for a in first.box for b in second.box)
    return make_bnf(first.atoms | second.atoms, first.diamonds + second.diamonds, merged)


def to_normal_form(formula: Formula, cap: int | None = None) -> NormalForm:
    """Rewrite a positive-fragment formula into an equivalent normal form of the same level."""

    limit = settings.NF_MAX_DISJUNCTS if cap is None else cap
    memo: Dict[Formula, Tuple[BasicNormalForm, ...]] = {}

    def rewrite(node: Formula) -> Tuple[BasicNormalForm, ...]:
        cached = memo.get(node)
        if cached is not None:
            return cached
        kind = node.kind
        if kind == KIND_ATOM:
            result = (make_bnf(atoms=(node.name or "",)),)
        elif kind == KIND_OR:
            parts = [bnf for child in node.children for bnf in rewrite(child)]
            _guard(len(parts), limit, "a disjunction")
            result = _ordered(parts)
        elif kind == KIND_AND:
            result = rewrite(node.children[0])
            for child in node.children[1:]:
                other = rewrite(child)
                _guard(len(result) * len(other), limit, "distributing ∧ over ∨")
                result = _ordered(conj_bnf(a, b, limit) for a in result for b in other)
        elif kind == KIND_DIA:
            result = _ordered(make_bnf(diamonds=(bnf,)) for bnf in rewrite(node.child))
        elif kind == KIND_BOX:
            result = (make_bnf(box=rewrite(node.child)),)
        else:
            raise FragmentError(
                f"normal forms cover □, ◇, ∧, ∨ over atoms only; found {kind} in {to_text(formula)}"
            )
        memo[node] = result
        return result

    disjuncts = rewrite(formula)
    LOGGER.debug("normal form of %s has %d disjuncts", to_text(formula), len(disjuncts))
    return NormalForm(disjuncts)


def classify_bnf(bnf: BasicNormalForm) -> str:
    """Which of the four shapes a basic normal form has: ``i`` … ``iv``."""

    if bnf.box is not None and not bnf.box:
        raise MalformedNormalFormError("□ over an empty disjunction")
    has_box = bnf.box is not None
    if not bnf.diamonds and not has_box:
        if not bnf.atoms:
            raise MalformedNormalFormError("empty basic normal form")
        return CASE_ATOMS
    if not has_box:
        return CASE_DIAMONDS
    if not bnf.diamonds:
        return CASE_BOX
    return CASE_MIXED


def bnf_to_formula(bnf: BasicNormalForm) -> Formula:
    parts = [atom(name) for name in sorted(bnf.atoms)]
    parts.extend(dia(bnf_to_formula(item)) for item in bnf.diamonds)
    if bnf.box is not None:
        parts.append(box(disj(bnf_to_formula(item) for item in bnf.box)))
    return conj(parts)


def nf_to_formula(nf: NormalForm) -> Formula:
    return disj(bnf_to_formula(bnf) for bnf in nf.disjuncts)


__all__ = [
    "BasicNormalForm",
    "CASE_ATOMS",
    "CASE_BOX",
    "CASE_DIAMONDS",
    "CASE_MIXED",
    "NormalForm",
    "bnf_key",
    "bnf_to_formula",
    "classify_bnf",
    "conj_bnf",
    "make_bnf",
    "nf_to_formula",
    "to_normal_form",
]
