"""Beginner-friendly overview for this module.

WHAT: Builds finite characterisations: positive examples from a normal form
by ▽-gluing, negative examples by dualising the formula and flipping the
positive examples of the dual. Also: fit checking, the ⊤/⊥ extension, the
uniform-fragment reduction, the minimality spoiler for □ⁿp and the tower
size table.
WHEN: ``characterize`` is the entry point of the CLI verb with the same
name and of every verifier in ``oracle``.
WHY: A formula fits its characterisation by construction; the fit is
re-checked anyway before returning, so a construction bug surfaces as a
``FitVerificationError`` instead of a silently wrong example set.
HOW: Positive examples are built per basic-normal-form shape (atoms only,
diamonds only, box only, mixed) and memoised per (basic normal form,
signature, cap). Example lists are deduplicated up to isomorphism and
sorted by (state count, WL hash) so output is reproducible.

File: modalchar/services/characterize.py
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations, product
from typing import Iterable, List, Sequence, Tuple

from ..core.config import settings
from ..core.connectives import KIND_BOT, KIND_TOP, POSITIVE_FRAGMENT, UNIFORM_FRAGMENT
from ..core.errors import (
    FitVerificationError,
    FragmentError,
    NotAConstructedExampleError,
    SignatureError,
    SizeGuardExceeded,
)
from .formula import (
    Formula,
    PropSignature,
    atom,
    atoms_of,
    box,
    box_power,
    conj,
    dia,
    disj,
    dual,
    fragment_of,
    in_fragment,
    modal_depth,
    negated_name,
    signature_for,
    to_text,
    uniform_flip,
)
from .kripke import (
    Evaluator,
    PointedModel,
    canonical_examples,
    contains_isomorphic,
    empty_loop,
    example_order,
    flip_model,
    full_loop,
    glue,
    rooted_at,
)
from .normalform import (
    CASE_ATOMS,
    CASE_BOX,
    CASE_DIAMONDS,
    BasicNormalForm,
    NormalForm,
    classify_bnf,
    conj_bnf,
    to_normal_form,
)

LOGGER = logging.getLogger(__name__)

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass(frozen=True)
class Characterization:
    formula: Formula
    signature: Tuple[str, ...]
    positives: Tuple[PointedModel, ...]
    negatives: Tuple[PointedModel, ...]

    def without_positive(self, index: int) -> "Characterization":
        kept = self.positives[:index] + self.positives[index + 1 :]
        return Characterization(self.formula, self.signature, kept, self.negatives)

    def summary(self) -> dict:
        return {
            "formula": to_text(self.formula),
            "signature": list(self.signature),
            "modal_depth": modal_depth(self.formula),
            "positives": len(self.positives),
            "negatives": len(self.negatives),
            "positive_states": sum(len(m.states) for m in self.positives),
            "negative_states": sum(len(m.states) for m in self.negatives),
        }


@dataclass(frozen=True)
class FitResult:
    holds: bool
    counterexample: PointedModel | None = None
    polarity: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.holds


# ---------------------------------------------------------------------------
# Positive examples


def _signature_names(sig: PropSignature | Iterable[str]) -> Tuple[str, ...]:
    return sig.props if isinstance(sig, PropSignature) else tuple(sig)


def _union(groups: Iterable[Sequence[PointedModel]]) -> List[PointedModel]:
    return canonical_examples(chain.from_iterable(groups))


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        LOGGER.warning("example guard hit: %s needs %d examples (cap %d)", what, count, cap)
        raise SizeGuardExceeded(f"{what} would build {count} examples, above the cap of {cap}")


def _subsets(items: Sequence[PointedModel], nonempty: bool) -> Iterable[Tuple[PointedModel, ...]]:
    start = 1 if nonempty else 0
    return chain.from_iterable(combinations(items, size) for size in range(start, len(items) + 1))


@lru_cache(maxsize=4096)
def _bnf_examples(bnf: BasicNormalForm, names: Tuple[str, ...], cap: int) -> Tuple[PointedModel, ...]:
    case = classify_bnf(bnf)
    loop = empty_loop(names)
    built: List[PointedModel] = []
    if case == CASE_ATOMS:
        built.append(glue(bnf.atoms, [loop], names))
    elif case == CASE_DIAMONDS:
        choices = [_bnf_examples(item, names, cap) for item in bnf.diamonds]
        total = 1
        for options in choices:
            total *= len(options)
        _check_cap(total, cap, "a ◇-only normal form")
        for combo in product(*choices):
            built.append(glue(bnf.atoms, canonical_examples(list(combo) + [loop]), names))
    else:
        pool = _union(_bnf_examples(item, names, cap) for item in bnf.box or ())
        if case == CASE_BOX:
            _check_cap(2 ** len(pool), cap, "a □-only normal form")
            for subset in _subsets(pool, nonempty=False):
                built.append(glue(bnf.atoms, list(subset), names))
        else:
            # Each ◇ child is paired with every □ disjunct and re-normalised.
            choices = [
                _union(_bnf_examples(conj_bnf(phi, psi), names, cap) for psi in bnf.box or ())
                for phi in bnf.diamonds
            ]
            total = 2 ** len(pool) - 1
            for options in choices:
                total *= len(options)
            _check_cap(total, cap, "a mixed ◇/□ normal form")
            for combo in product(*choices):
                for subset in _subsets(pool, nonempty=True):
                    children = canonical_examples(list(combo) + list(subset))
                    built.append(glue(bnf.atoms, children, names))
    result = tuple(canonical_examples(built))
    LOGGER.debug("case %s normal form of level %d: %d examples", case, bnf.level, len(result))
    return result


def pos_examples(nf: NormalForm, sig: PropSignature | Iterable[str], cap: int | None = None) -> List[PointedModel]:
    """The positive examples of a normal form: the union over its disjuncts."""

    names = _signature_names(sig)
    limit = settings.MAX_EXAMPLES if cap is None else cap
    result = _union(_bnf_examples(bnf, names, limit) for bnf in nf.disjuncts)
    _check_cap(len(result), limit, "a normal form")
    return result


def extend_top_bot(sig: PropSignature | Iterable[str]) -> Tuple[List[PointedModel], List[PointedModel]]:
    """Single-model example sets for the constants: E⁺ for ⊤ is {○∅}, E⁻ for ⊥ is {○Prop}."""

    return [empty_loop(sig)], [full_loop(sig)]


# ---------------------------------------------------------------------------
# Fit


def fits(
    formula: Formula,
    positives: Sequence[PointedModel] = (),
    negatives: Sequence[PointedModel] = (),
) -> FitResult:
    """Does ``formula`` hold on every positive and fail on every negative example?"""

    for index, model in enumerate(positives):
        if not Evaluator(model).holds(formula):
            return FitResult(False, model, POSITIVE, index)
    for index, model in enumerate(negatives):
        if Evaluator(model).holds(formula):
            return FitResult(False, model, NEGATIVE, index)
    return FitResult(True)


def fits_characterization(formula: Formula, characterization: Characterization) -> FitResult:
    return fits(formula, characterization.positives, characterization.negatives)


def _verified(characterization: Characterization) -> Characterization:
    result = fits_characterization(characterization.formula, characterization)
    if not result:
        raise FitVerificationError(
            f"{to_text(characterization.formula)} does not fit its own {result.polarity} "
            f"example #{result.index}"
        )
    return characterization


# ---------------------------------------------------------------------------
# Characterisations


def _resolve_signature(formula: Formula, sig: PropSignature | Iterable[str] | None) -> PropSignature:
    if sig is None:
        return signature_for(formula)
    signature = sig if isinstance(sig, PropSignature) else PropSignature(tuple(sig))
    signature.require(atoms_of(formula))
    return signature


def characterize(
    formula: Formula,
    sig: PropSignature | Iterable[str] | None = None,
    cap: int | None = None,
) -> Characterization:
    """Positive and negative examples that characterise ``formula`` in L{□,◇,∧,∨}.

    ⊤ and ⊥ are accepted on their own and get the single-model example sets.
    """

    signature = _resolve_signature(formula, sig)
    names = signature.props
    if formula.kind == KIND_TOP:
        positives, _ = extend_top_bot(names)
        return _verified(Characterization(formula, names, tuple(positives), ()))
    if formula.kind == KIND_BOT:
        _, negatives = extend_top_bot(names)
        return _verified(Characterization(formula, names, (), tuple(negatives)))
    if not in_fragment(formula, POSITIVE_FRAGMENT):
        extra = sorted(fragment_of(formula) - POSITIVE_FRAGMENT)
        raise FragmentError(f"characterize needs a formula in L{{□,◇,∧,∨}}; found {extra}")
    positives = pos_examples(to_normal_form(formula), names, cap)
    dual_examples = pos_examples(to_normal_form(dual(formula)), names, cap)
    negatives = sorted((flip_model(model) for model in dual_examples), key=example_order)
    LOGGER.info(
        "characterised %s with %d positive and %d negative examples",
        to_text(formula),
        len(positives),
        len(negatives),
    )
    return _verified(Characterization(formula, names, tuple(positives), tuple(negatives)))


def _unflip_model(model: PointedModel, names: Tuple[str, ...], negative: frozenset[str]) -> PointedModel:
    positive = frozenset(names) - negative
    valuation = []
    for props in model.valuation:
        kept = props & positive
        restored = {q for q in negative if negated_name(q) not in props}
        valuation.append(frozenset(kept | restored))
    return PointedModel(names, model.states, model.edges, tuple(valuation), model.point)


def characterize_uniform(
    formula: Formula,
    positive: Iterable[str],
    negative: Iterable[str],
    cap: int | None = None,
) -> Characterization:
    """Characterise a [P;Q]-uniform formula by renaming each ¬q to a fresh atom."""

    signature = PropSignature.partitioned(positive, negative)
    signature.require(atoms_of(formula))
    q_names = signature.negative or frozenset()
    if not in_fragment(formula, UNIFORM_FRAGMENT):
        extra = sorted(fragment_of(formula) - UNIFORM_FRAGMENT)
        raise FragmentError(f"uniform formulas use □, ◇, ∧, ∨ and negated atoms only; found {extra}")
    fresh = {q: negated_name(q) for q in q_names}
    clashes = set(fresh.values()) & set(signature.props)
    if clashes:
        raise SignatureError(f"fresh names {sorted(clashes)} collide with the signature")
    renamed = uniform_flip(formula, q_names)
    renamed_sig = PropSignature(tuple(fresh.get(name, name) for name in signature.props))
    inner = characterize(renamed, renamed_sig, cap)
    names = signature.props
    result = Characterization(
        formula,
        names,
        tuple(_unflip_model(model, names, q_names) for model in inner.positives),
        tuple(_unflip_model(model, names, q_names) for model in inner.negatives),
    )
    return _verified(result)


# ---------------------------------------------------------------------------
# Minimality


def minimality_spoiler(target: PointedModel, n: int, prop: str = "p") -> Formula:
    """A formula refuted by ``target`` but by no other positive example of □ⁿ⁺¹p.

    ``target`` must be one of the constructed examples of □ⁿ⁺¹``prop``. A
    target with successors E₁…Eₖ gets ⋁□ψ_Eᵢ ∨ ◇⋀ψ_Eᵢ, with ψ built the same
    way one level down. The deadlock gets ◇□ⁿp, since it refutes every ◇ while
    every other example has a successor satisfying □ⁿp. At level 0 there is a
    single example, refuted by ◇p.
    """

    if n < 0:
        raise ValueError("n must be >= 0")
    goal = box_power(n + 1, atom(prop))
    constructed = pos_examples(to_normal_form(goal), target.signature)
    if not contains_isomorphic(constructed, target):
        raise NotAConstructedExampleError(
            f"the model is not one of the {len(constructed)} examples built for {to_text(goal)}"
        )
    children = [rooted_at(target, state) for state in target.successors(target.point)]
    if not children:
        return dia(box_power(n, atom(prop)))
    if n == 0:
        parts = [dia(atom(prop))]
    else:
        parts = sorted(
            {minimality_spoiler(child, n - 1, prop) for child in children},
            key=to_text,
        )
    return disj([box(part) for part in parts] + [dia(conj(parts))])


# ---------------------------------------------------------------------------
# Tower table


def tower(n: int, m: int) -> int:
    if n < 1:
        raise ValueError("tower is defined for n >= 1")
    value = m
    for _ in range(n - 1):
        value = 2**value
    return value


@dataclass(frozen=True)
class TowerRow:
    n: int
    examples: int
    tower: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n, self.examples, self.tower)


@dataclass(frozen=True)
class TowerTable:
    rows: Tuple[TowerRow, ...]

    @property
    def consistent(self) -> bool:
        return all(row.examples == row.tower for row in self.rows)


def tower_table(max_n: int, allow_large: bool = False, prop: str = "p") -> TowerTable:
    """|E⁺| for □ⁿp against tower(n, 2), for n = 1..max_n."""

    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if max_n > 4:
        raise SizeGuardExceeded("the tower table stops at n = 4 (65536 examples)")
    if max_n == 4 and not allow_large:
        raise SizeGuardExceeded("n = 4 builds 65536 examples; pass allow_large to run it")
    rows = []
    for n in range(1, max_n + 1):
        count = len(pos_examples(to_normal_form(box_power(n, atom(prop))), (prop,)))
        rows.append(TowerRow(n, count, tower(n, 2)))
        LOGGER.info("tower row n=%d: %d examples, tower(n,2)=%d", n, count, rows[-1].tower)
    return TowerTable(tuple(rows))


__all__ = [
    "Characterization",
    "FitResult",
    "NEGATIVE",
    "POSITIVE",
    "TowerRow",
    "TowerTable",
    "characterize",
    "characterize_uniform",
    "extend_top_bot",
    "fits",
    "fits_characterization",
    "minimality_spoiler",
    "pos_examples",
    "tower",
    "tower_table",
]
