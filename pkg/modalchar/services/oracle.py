"""Beginner-friendly overview for this module.

WHAT: The verifiers that check the characterisation machinery against
independent oracles: bounded uniqueness, the weak-simulation duality,
preservation under weak simulations, minimality of the □ⁿp example sets,
the full-language spoiler and the coproduct fixtures.
WHEN: Called by the CLI ``verify``/``spoiler``/``fixtures`` verbs and by
the test suite at smaller bounds.
WHY: Each check compares two procedures that share no code path (normal
forms and gluing against the tableau, weak simulations against model
checking), so agreement is real evidence.
HOW: Every verifier returns a ``VerificationReport``. Models and formulas in
counterexamples are serialised with ``export`` so a report can be written
straight to JSON. Seeds come from ``Bounds`` and timings are only added on
request, so a fixed configuration gives byte-identical reports.

File: modalchar/services/oracle.py
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from ..core.connectives import POSITIVE_FRAGMENT
from ..core.errors import FitVerificationError, SignatureError
from ..schemas.config import Bounds
from ..schemas.report import Counterexample, VerificationReport
from .characterize import Characterization, characterize, fits, minimality_spoiler
from .enumeration import enumerate_formulas, enumerate_models, random_formula, random_model
from .export import model_to_dict
from .formula import (
    BOT,
    TOP,
    Formula,
    atom,
    atoms_of,
    box,
    box_power,
    conj,
    dia,
    dia_power,
    disj,
    height_formula,
    modal_depth,
    to_text,
)
from .kripke import Evaluator, PointedModel, modelcheck, path_model, tree_unravel
from .simulation import weak_simulates
from .tableau import equivalent, sat_k

LOGGER = logging.getLogger(__name__)

MAX_REPORTED = 10


def _report(
    counterexamples: List[Counterexample],
    stats: Dict[str, object],
    started: float | None = None,
) -> VerificationReport:
    if started is not None:
        stats["seconds"] = round(time.perf_counter() - started, 3)
    verdict = "fail" if counterexamples else "pass"
    return VerificationReport(verdict=verdict, counterexamples=counterexamples, stats=stats)


def _clock(timings: bool) -> float | None:
    return time.perf_counter() if timings else None


# ---------------------------------------------------------------------------
# Unique characterisation


def verify_unique(
    formula: Formula,
    characterization: Characterization,
    bounds: Bounds | None = None,
    fragment: Iterable[str] = POSITIVE_FRAGMENT,
    positive_atoms: Iterable[str] | None = None,
    negative_atoms: Iterable[str] | None = None,
    timings: bool = False,
) -> VerificationReport:
    """Every enumerated candidate that fits the examples must be equivalent to ``formula``."""

    bounds = bounds or Bounds()
    started = _clock(timings)
    names = characterization.signature
    positives = [Evaluator(model) for model in characterization.positives]
    negatives = [Evaluator(model) for model in characterization.negatives]
    counterexamples: List[Counterexample] = []
    enumerated = fitting = violators = 0
    for candidate in enumerate_formulas(
        names,
        fragment,
        bounds.max_depth,
        bounds.max_size,
        positive_atoms=positive_atoms,
        negative_atoms=negative_atoms,
    ):
        enumerated += 1
        if not all(ev.holds(candidate) for ev in positives):
            continue
        if any(ev.holds(candidate) for ev in negatives):
            continue
        fitting += 1
        verdict = equivalent(formula, candidate, names)
        if verdict:
            continue
        violators += 1
        if len(counterexamples) < MAX_REPORTED:
            counterexamples.append(
                Counterexample(
                    reason=f"fits the examples but is not equivalent (holds only on the {verdict.holds_on} side)",
                    formula=to_text(candidate),
                    model=model_to_dict(verdict.witness) if verdict.witness is not None else None,
                )
            )
    LOGGER.info(
        "verify unique %s: %d candidates, %d fitting, %d violators",
        to_text(formula),
        enumerated,
        fitting,
        violators,
    )
    stats: Dict[str, object] = {
        "formula": to_text(formula),
        "candidates": enumerated,
        "fitting": fitting,
        "violators": violators,
        "max_depth": bounds.max_depth,
        "max_size": bounds.max_size,
    }
    return _report(counterexamples, stats, started)


# ---------------------------------------------------------------------------
# Duality


def _duality_models(names: Tuple[str, ...], bounds: Bounds) -> Tuple[List[PointedModel], int]:
    # Generated submodels suffice: weak simulations and truth only see what the point reaches.
    models = list(enumerate_models(names, bounds.max_states, generated_only=True))
    exhaustive = len(models)
    rng = random.Random(bounds.seed)
    for _ in range(bounds.samples):
        models.append(
            random_model(rng, names, bounds.sample_min_states, bounds.sample_max_states, bounds.edge_density)
        )
    return models, exhaustive


def _duality_chunk(
    characterization: Characterization, models: Sequence[PointedModel], offset: int
) -> Tuple[List[Tuple[int, str]], int]:
    """Check one slice of models: (violations as (index, problem), upward count)."""

    findings: List[Tuple[int, str]] = []
    upward_count = 0
    for k, model in enumerate(models):
        upward = any(weak_simulates(example, model, with_witness=False) for example in characterization.positives)
        downward = any(weak_simulates(model, example, with_witness=False) for example in characterization.negatives)
        truth = modelcheck(characterization.formula, model)
        upward_count += int(upward)
        if upward and downward:
            findings.append((offset + k, "model lies in both the upward and the downward half"))
        elif not upward and not downward:
            findings.append((offset + k, "model lies in neither half"))
        elif upward != truth:
            findings.append((offset + k, f"upward half says {upward} but the formula is {truth}"))
    return findings, upward_count


def verify_duality(
    characterization: Characterization,
    bounds: Bounds | None = None,
    jobs: int = 1,
    timings: bool = False,
) -> VerificationReport:
    """Each model must be above a positive example or below a negative one, never both."""

    bounds = bounds or Bounds()
    started = _clock(timings)
    models, exhaustive = _duality_models(characterization.signature, bounds)
    if jobs > 1 and len(models) > jobs:
        size = -(-len(models) // jobs)
        slices = [(models[k : k + size], k) for k in range(0, len(models), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(
                    _duality_chunk,
                    [characterization] * len(slices),
                    [chunk for chunk, _ in slices],
                    [offset for _, offset in slices],
                )
            )
    else:
        parts = [_duality_chunk(characterization, models, 0)]
    upward_total = 0
    violations: List[Tuple[int, str]] = []
    for found, upward in parts:
        upward_total += upward
        violations.extend(found)
    violations.sort()
    counterexamples = [
        Counterexample(reason=problem, model=model_to_dict(models[index]))
        for index, problem in violations[:MAX_REPORTED]
    ]
    LOGGER.info(
        "verify duality %s: %d models, %d violations",
        to_text(characterization.formula),
        len(models),
        len(violations),
    )
    stats: Dict[str, object] = {
        "formula": to_text(characterization.formula),
        "models": len(models),
        "exhaustive_models": exhaustive,
        "sampled_models": len(models) - exhaustive,
        "upward": upward_total,
        "downward": len(models) - upward_total,
        "violations": len(violations),
        "seed": bounds.seed,
    }
    return _report(counterexamples, stats, started)


# ---------------------------------------------------------------------------
# Preservation


def _grow_valuations(rng: random.Random, model: PointedModel) -> PointedModel:
    names = model.signature
    valuation = tuple(
        props | frozenset(name for name in names if rng.random() < 0.3) for props in model.valuation
    )
    return PointedModel(names, model.states, model.edges, valuation, model.point)


def _attach_loop(rng: random.Random, model: PointedModel, full: bool) -> PointedModel:
    loop = "loop_full" if full else "loop_empty"
    props = frozenset(model.signature) if full else frozenset()
    sources = [state for state in model.states if rng.random() < 0.5] or [model.point]
    edges = set(model.edges) | {(loop, loop)} | {(state, loop) for state in sources}
    return PointedModel(
        model.signature,
        model.states + (loop,),
        frozenset(edges),
        model.valuation + (props,),
        model.point,
    )


def _weakly_related_pair(
    rng: random.Random, names: Tuple[str, ...], bounds: Bounds
) -> Tuple[PointedModel, PointedModel, str]:
    base = random_model(rng, names, 1, max(bounds.max_states, 2), bounds.edge_density)
    strategy = rng.choice(["grow", "escape_full", "escape_empty", "sample"])
    if strategy == "grow":
        return base, _grow_valuations(rng, base), strategy
    if strategy == "escape_full":
        # New successors of the right model are ○Prop states: back′ escapes them.
        return base, _attach_loop(rng, base, full=True), strategy
    if strategy == "escape_empty":
        # Successors only the left model has are ○∅ states: forth′ escapes them.
        return _attach_loop(rng, base, full=False), base, strategy
    for _ in range(20):
        other = random_model(rng, names, 1, max(bounds.max_states, 2), bounds.edge_density)
        if weak_simulates(base, other, with_witness=False):
            return base, other, strategy
    return base, _grow_valuations(rng, base), "grow"


def verify_preservation(
    names: Sequence[str],
    bounds: Bounds | None = None,
    trials: int = 1000,
    timings: bool = False,
) -> VerificationReport:
    """Truth of positive-fragment formulas must survive every weak simulation."""

    bounds = bounds or Bounds()
    started = _clock(timings)
    signature = tuple(names)
    rng = random.Random(bounds.seed)
    counterexamples: List[Counterexample] = []
    strategies: Dict[str, int] = {}
    premises = 0
    for _ in range(trials):
        formula = random_formula(rng, signature, POSITIVE_FRAGMENT, min(bounds.max_depth, 3))
        left, right, strategy = _weakly_related_pair(rng, signature, bounds)
        strategies[strategy] = strategies.get(strategy, 0) + 1
        if not weak_simulates(left, right, with_witness=False):
            counterexamples.append(
                Counterexample(
                    reason=f"{strategy} pair is not weakly related",
                    model=model_to_dict(left),
                    other_model=model_to_dict(right),
                )
            )
            continue
        if not modelcheck(formula, left):
            continue
        premises += 1
        if not modelcheck(formula, right) and len(counterexamples) < MAX_REPORTED:
            counterexamples.append(
                Counterexample(
                    reason="formula true on the left model but false on the right one",
                    formula=to_text(formula),
                    model=model_to_dict(left),
                    other_model=model_to_dict(right),
                )
            )
    LOGGER.info("verify preservation: %d trials, %d with a true premise", trials, premises)
    stats: Dict[str, object] = {
        "trials": trials,
        "premises_true": premises,
        "strategies": dict(sorted(strategies.items())),
        "seed": bounds.seed,
    }
    return _report(counterexamples, stats, started)


# ---------------------------------------------------------------------------
# Minimality of the □ⁿp example sets


def verify_minimality(n: int, prop: str = "p", timings: bool = False) -> VerificationReport:
    """Dropping any positive example of □ⁿp must let □ⁿp ∧ ψ fit without being equivalent."""

    if n < 1:
        raise ValueError("minimality is checked for n >= 1")
    started = _clock(timings)
    goal = box_power(n, atom(prop))
    char = characterize(goal, (prop,))
    counterexamples: List[Counterexample] = []
    for index, dropped in enumerate(char.positives):
        spoiler = conj(goal, minimality_spoiler(dropped, n - 1, prop))
        reduced = char.without_positive(index)
        if not fits(spoiler, reduced.positives, reduced.negatives):
            counterexamples.append(
                Counterexample(
                    reason=f"spoiler does not fit once example #{index} is dropped",
                    formula=to_text(spoiler),
                    model=model_to_dict(dropped),
                )
            )
            continue
        if equivalent(goal, spoiler, (prop,)):
            counterexamples.append(
                Counterexample(
                    reason=f"spoiler for example #{index} is equivalent to the goal",
                    formula=to_text(spoiler),
                    model=model_to_dict(dropped),
                )
            )
    stats: Dict[str, object] = {"formula": to_text(goal), "positives": len(char.positives)}
    return _report(counterexamples, stats, started)


# ---------------------------------------------------------------------------
# Full-language spoiler


@dataclass(frozen=True)
class SpoilerResult:
    formula: Formula
    witness: PointedModel
    case: str
    n: int


def _depth_of_states(model: PointedModel) -> Dict[str, int]:
    depth = {model.point: 0}
    frontier = [model.point]
    while frontier:
        following = []
        for state in frontier:
            for nxt in model.successors(state):
                if nxt not in depth:
                    depth[nxt] = depth[state] + 1
                    following.append(nxt)
        frontier = following
    return depth


def _extend_with_chain(model: PointedModel, leaf: str, length: int) -> PointedModel:
    taken = set(model.states)
    fresh = (f"c{k}" for k in itertools.count(1))
    chain = tuple(itertools.islice((name for name in fresh if name not in taken), length))
    edges = set(model.edges)
    previous = leaf
    for state in chain:
        edges.add((previous, state))
        previous = state
    return PointedModel(
        model.signature,
        model.states + chain,
        frozenset(edges),
        model.valuation + tuple(frozenset() for _ in chain),
        model.point,
    )


def spoiler_full_language(
    positives: Sequence[PointedModel],
    negatives: Sequence[PointedModel],
    formula: Formula,
    sig: Sequence[str] | None = None,
    fragment_forms: bool = False,
) -> SpoilerResult:
    """A formula that fits the same examples as ``formula`` but is not equivalent to it.

    With d the modal depth, either formula ∧ ◇ᵈ⁺¹⊤ is unsatisfiable, so the
    formula forces height ≤ d and ``formula ∨ height_n`` adds the path Pₙ; or
    some model of the formula has a path of length d+1, and its depth-d
    unravelling with a chain hung below a depth-d leaf is a model of height n
    that still satisfies the formula (the chain sits below depth d), so
    ``formula ∧ ¬height_n`` drops it. In both cases n exceeds every example
    size, and a finite model's height is below its state count, so no example
    changes its verdict.
    """

    examples = list(positives) + list(negatives)
    if sig is not None:
        names = tuple(sig)
    elif examples:
        names = examples[0].signature
    else:
        names = tuple(sorted(atoms_of(formula)))
    missing = atoms_of(formula) - set(names)
    if missing:
        raise SignatureError(f"formula mentions {sorted(missing)} outside the signature {list(names)}")
    depth = modal_depth(formula)
    deeper = sat_k(conj(formula, dia_power(depth + 1, TOP)), names)
    if not deeper:
        n = max([len(m.states) for m in examples] + [depth + 1]) + 1
        variant = "top_free" if fragment_forms and formula == BOT else "standard"
        height_n = height_formula(n, variant)
        result = height_n if formula == BOT else disj(formula, height_n)
        witness = path_model(n, names)
        case = "i"
    else:
        n = max([len(m.states) for m in positives] + [depth]) + 1
        not_height = height_formula(n, "negated")
        result = not_height if formula == TOP else conj(formula, not_height)
        unravelled = tree_unravel(deeper.witness, depth)
        levels = _depth_of_states(unravelled)
        leaf = min(state for state, level in levels.items() if level == depth)
        witness = _extend_with_chain(unravelled, leaf, n - depth)
        case = "ii"
    if not fits(result, positives, negatives):
        raise FitVerificationError(f"spoiler {to_text(result)} lost the fit")
    if modelcheck(result, witness) == modelcheck(formula, witness):
        raise FitVerificationError(f"witness does not separate {to_text(formula)} from {to_text(result)}")
    LOGGER.info("spoiler case %s with n=%d: %s", case, n, to_text(result))
    return SpoilerResult(result, witness, case, n)


def spoiler_report(result: SpoilerResult, formula: Formula) -> VerificationReport:
    stats: Dict[str, object] = {
        "formula": to_text(formula),
        "spoiler": to_text(result.formula),
        "case": result.case,
        "n": result.n,
        "witness": model_to_dict(result.witness),
    }
    return _report([], stats)


# ---------------------------------------------------------------------------
# Coproduct fixtures


def _blank_loop_branch(prefix: str, props: Iterable[str]) -> Tuple[List[str], List[Tuple[str, str]], Dict[str, frozenset]]:
    child, loop = prefix, f"{prefix}_loop"
    return [child, loop], [(child, loop), (loop, loop)], {child: frozenset(props), loop: frozenset()}


def _two_branch_model(root: str, left_props: Iterable[str], right_props: Iterable[str], names: Tuple[str, ...]) -> PointedModel:
    states = [root]
    edges: List[Tuple[str, str]] = []
    valuation: Dict[str, frozenset] = {root: frozenset()}
    for side, props in (("left", left_props), ("right", right_props)):
        branch_states, branch_edges, branch_val = _blank_loop_branch(f"{root}_{side}", props)
        states += branch_states
        edges += branch_edges + [(root, branch_states[0])]
        valuation.update(branch_val)
    return PointedModel.build(names, states, edges, valuation, root)


@dataclass(frozen=True)
class CoproductFixtures:
    a: PointedModel
    b: PointedModel
    c: PointedModel
    c_prime: PointedModel


def coproduct_fixtures(sig: Sequence[str] = ("p", "q", "r")) -> CoproductFixtures:
    """The four models showing that weak simulations have no coproducts."""

    names = tuple(sig)
    missing = {"p", "q", "r"} - set(names)
    if missing:
        raise SignatureError(f"the fixtures need p, q and r in the signature; missing {sorted(missing)}")
    a = _two_branch_model("a", ["p"], ["q"], names)
    b_states = ["b", "b_left", "b_left_loop", "b_loop"]
    b_edges = [("b", "b_left"), ("b_left", "b_left_loop"), ("b_left_loop", "b_left_loop"), ("b", "b_loop"), ("b_loop", "b_loop")]
    b = PointedModel.build(names, b_states, b_edges, {"b_left": ["r"]}, "b")
    c = _two_branch_model("c", ["p", "r"], ["q"], names)
    c_prime = _two_branch_model("c", ["p"], ["q", "r"], names)
    return CoproductFixtures(a, b, c, c_prime)


def fixture_facts(fixtures: CoproductFixtures) -> List[Tuple[str, bool, bool]]:
    """(description, expected, observed) for every documented fixture fact."""

    p, q, r = atom("p"), atom("q"), atom("r")
    p_or_q = box(disj(p, q))
    facts = [
        ("A ⊨ □(p∨q)", True, modelcheck(p_or_q, fixtures.a)),
        ("B ⊨ ◇r", True, modelcheck(dia(r), fixtures.b)),
        ("C ⊭ ◇(q∧r)", False, modelcheck(dia(conj(q, r)), fixtures.c)),
        ("C′ ⊭ ◇(p∧r)", False, modelcheck(dia(conj(p, r)), fixtures.c_prime)),
        ("C ⊨ □(p∨q) ∧ ◇r", True, modelcheck(conj(p_or_q, dia(r)), fixtures.c)),
        ("C′ ⊨ □(p∨q) ∧ ◇r", True, modelcheck(conj(p_or_q, dia(r)), fixtures.c_prime)),
    ]
    for left_name, left, right_name, right in (
        ("A", fixtures.a, "C", fixtures.c),
        ("B", fixtures.b, "C", fixtures.c),
        ("A", fixtures.a, "C′", fixtures.c_prime),
        ("B", fixtures.b, "C′", fixtures.c_prime),
    ):
        facts.append((f"{left_name} →w {right_name}", True, bool(weak_simulates(left, right, with_witness=False))))
    return facts


def verify_fixtures(sig: Sequence[str] = ("p", "q", "r")) -> VerificationReport:
    facts = fixture_facts(coproduct_fixtures(sig))
    counterexamples = [
        Counterexample(reason=f"{description}: expected {expected}, observed {observed}")
        for description, expected, observed in facts
        if expected != observed
    ]
    stats: Dict[str, object] = {"facts": len(facts)}
    return _report(counterexamples, stats)


__all__ = [
    "CoproductFixtures",
    "SpoilerResult",
    "coproduct_fixtures",
    "fixture_facts",
    "spoiler_full_language",
    "spoiler_report",
    "verify_duality",
    "verify_fixtures",
    "verify_minimality",
    "verify_preservation",
    "verify_unique",
]
