#!/usr/bin/env python3
"""
modalchar command line.

Purpose:
  Run the characterisation library from a shell: parse and normalise
  formulas, check models, decide (weak/bi)simulations, build example sets
  and run the verifiers. Formulas are given as grammar text, models as JSON
  files (see modalchar/schemas/model_file.py).

Examples:
  python -m modalchar parse "~(<>p)"
  python -m modalchar characterize "[](p | q)" --props p,q --out out/box_p_or_q
  python -m modalchar wsim empty_loop.json model.json
  python -m modalchar verify duality "<>p" --max-states 3 --samples 500 --jobs 4
  python -m modalchar tower --max-n 3

Exit codes:
  0  = success / verification passed
  1  = verification failed
  2  = a size guard aborted the run
  64 = usage error
  65 = formula or model file could not be parsed
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from .core.config import settings
from .core.connectives import UNIFORM_FRAGMENT
from .core.errors import (
    FitVerificationError,
    FormulaSyntaxError,
    FragmentError,
    MalformedNormalFormError,
    ModelFormatError,
    NotAConstructedExampleError,
    SignatureError,
    SizeGuardExceeded,
    UnknownPropositionError,
)
from .crud.runs import list_runs, record_run
from .db.session import get_db
from .schemas.config import Bounds, RunConfig
from .schemas.report import VerificationReport
from .schemas.run import RunOut
from .services.characterize import (
    Characterization,
    characterize,
    characterize_uniform,
    fits,
    tower_table,
)
from .services.export import (
    model_to_dict,
    model_to_dot,
    read_model,
    read_relation,
    relation_to_dict,
    write_model,
)
from .services.formula import (
    PropSignature,
    atoms_of,
    formula_size,
    fragment_of,
    modal_depth,
    signature_for,
    to_text,
)
from .services.kripke import height, modelcheck, tree_unravel
from .services.normalform import classify_bnf, to_normal_form
from .services.oracle import (
    coproduct_fixtures,
    spoiler_full_language,
    spoiler_report,
    verify_duality,
    verify_fixtures,
    verify_minimality,
    verify_preservation,
    verify_unique,
)
from .services.parser import parse_formula
from .services.simulation import (
    bisimilar,
    is_weak_simulation,
    n_bisimilar,
    relation_from_pairs,
    weak_simulates,
)

LOGGER = logging.getLogger("modalchar.cli")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BOUND = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

PARSE_ERRORS = (
    FormulaSyntaxError,
    UnknownPropositionError,
    SignatureError,
    FragmentError,
    ModelFormatError,
    MalformedNormalFormError,
    NotAConstructedExampleError,
)


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 means "bound abort" here.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--props", default=None,
                        help="Comma separated proposition signature, e.g. p,q (default: the formula's atoms).")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging to stderr.")
    return common


def _verify_options() -> argparse.ArgumentParser:
    opts = argparse.ArgumentParser(add_help=False)
    opts.add_argument("--seed", type=int, default=settings.DEFAULT_SEED,
                      help=f"RNG seed for sampled checks (default: {settings.DEFAULT_SEED}).")
    opts.add_argument("--record", action="store_true", help="Store the report in the run ledger.")
    opts.add_argument("--timings", action="store_true", help="Add wall-clock seconds to the report.")
    opts.add_argument("--jobs", type=int, default=1, help="Worker processes for parallel checks (default: 1).")
    return opts


# What each subcommand exercises; shown as the description of its --help.
CONSTRUCTS: Dict[Tuple[str, ...], str] = {
    ("parse",): "Formula grammar and negation normal form: prints the NNF, modal depth, size and fragment.",
    ("nf",): "Normal form for L{□,◇,∧,∨}: a disjunction of basic normal forms π ∧ ◇φ₁ ∧ … ∧ □(ψ₁ ∨ … ∨ ψₘ), "
             "each tagged with its shape (i) to (iv).",
    ("modelcheck",): "Kripke semantics: truth of a formula at the point of a pointed model.",
    ("height",): "Height of a pointed model: the longest path from the point, inf when a cycle is reachable.",
    ("unravel",): "Depth-n tree unravelling: a tree model n-bisimilar to the input, of height n when the input "
                  "is at least that high.",
    ("bisim",): "Bisimulation and n-bisimulation between pointed models, decided by partition refinement.",
    ("wsim",): "Weak simulation: forth and back clauses that let successors escape to the empty loop ○∅ "
               "or the full loop ○Prop.",
    ("characterize",): "Finite characterisation of an L{□,◇,∧,∨} formula: positive examples glued from its "
                       "normal form, negative examples from the flipped positive examples of its dual.",
    ("characterize-uniform",): "Characterisation of a [P;Q]-uniform formula: each ¬q becomes a fresh atom, "
                               "the result is characterised and the examples are flipped back on Q.",
    ("fits",): "Fitting: the formula holds on every positive example and fails on every negative one.",
    ("verify",): "Oracle-backed verifiers for the characterisation machinery.",
    ("verify", "unique"): "Unique characterisation: every bounded L{□,◇,∧,∨} candidate that fits the "
                          "examples is equivalent to the formula over K.",
    ("verify", "duality"): "Weak-simulation duality: each model lies above a positive example or below a "
                           "negative example, never both, and the upward half is exactly where the formula holds.",
    ("verify", "preservation"): "Preservation under weak simulations: positive-fragment truth carries over "
                                "from a model to any model it weakly simulates into.",
    ("verify", "minimality"): "Minimality of the □ⁿp examples: dropping any positive example lets a "
                              "non-equivalent formula fit, so tower(n, 2) examples are needed.",
    ("spoiler",): "No finite characterisation in the full modal language: a fitting formula that is not "
                  "equivalent, built with the height formulas height_n.",
    ("tower",): "Size lower bound: positive examples of □ⁿp counted against tower(n, 2).",
    ("fixtures",): "Named model fixtures.",
    ("fixtures", "coproduct"): "Missing coproducts for weak simulations: the models A, B, C and C′ with "
                               "their expected weak-simulation facts.",
    ("runs",): "Run ledger: verification runs stored with --record.",
}


def _add_command(sub, path: Tuple[str, ...], help_text: str, parents=()) -> argparse.ArgumentParser:
    return sub.add_parser(path[-1], parents=list(parents), help=help_text, description=CONSTRUCTS[path])


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    verify_opts = _verify_options()
    p = _ArgumentParser(prog="modalchar",
                        description="Finite characterisations of modal formulas in L{□,◇,∧,∨}.")
    sub = p.add_subparsers(dest="command", required=True)

    cmd = _add_command(sub, ("parse",), "Parse a formula into negation normal form and report its measures.",
                       [common])
    cmd.add_argument("formula", help="Formula text, e.g. \"[](p | q) & <>p\".")

    cmd = _add_command(sub, ("nf",), "Rewrite a formula into its normal form (one basic normal form per line).",
                       [common])
    cmd.add_argument("formula", help="Formula of L{□,◇,∧,∨}.")
    cmd.add_argument("--cases", action="store_true", help="Prefix each disjunct with its shape (i-iv).")

    cmd = _add_command(sub, ("modelcheck",), "Evaluate a formula at the point of a model.", [common])
    cmd.add_argument("formula", help="Formula text.")
    cmd.add_argument("model", help="Model JSON file.")

    cmd = _add_command(sub, ("height",), "Longest path from the point (inf if a cycle is reachable).", [common])
    cmd.add_argument("model", help="Model JSON file.")

    cmd = _add_command(sub, ("unravel",), "Depth-n tree unravelling of a model.", [common])
    cmd.add_argument("model", help="Model JSON file.")
    cmd.add_argument("--depth", type=int, required=True, help="Unravelling depth n (paths of at most n edges).")
    cmd.add_argument("--out", default=None, help="Write the unravelled model here instead of stdout.")

    cmd = _add_command(sub, ("bisim",), "Decide bisimilarity (or n-bisimilarity with --depth) of two models.",
                       [common])
    cmd.add_argument("left", help="Left model JSON file.")
    cmd.add_argument("right", help="Right model JSON file.")
    cmd.add_argument("--depth", type=int, default=None,
                     help="Decide n-bisimilarity: agreement on every formula of modal depth at most n.")

    cmd = _add_command(sub, ("wsim",), "Decide whether the left model weakly simulates into the right one.",
                       [common])
    cmd.add_argument("left", help="Model JSON file on the simulated side.")
    cmd.add_argument("right", help="Model JSON file on the simulating side.")
    cmd.add_argument("--check", default=None, metavar="RELATION",
                     help="Instead of deciding, check that this relation file is a weak simulation.")

    cmd = _add_command(sub, ("characterize",), "Build positive and negative examples that characterise a formula.",
                       [common])
    cmd.add_argument("formula", help="Formula of L{□,◇,∧,∨}, or true/false.")
    cmd.add_argument("--out", default="characterization", help="Output directory (default: ./characterization).")
    cmd.add_argument("--format", default="json", help="Comma separated: json,dot,text (default: json).")

    cmd = _add_command(sub, ("characterize-uniform",),
                       "Characterise a [P;Q]-uniform formula (atoms in Q occur only negated).", [common])
    cmd.add_argument("formula", help="Formula of L{□,◇,∧,∨,¬} with negation on Q atoms only.")
    cmd.add_argument("--negative", default="", help="Comma separated Q; every other signature name is in P.")
    cmd.add_argument("--out", default="characterization", help="Output directory (default: ./characterization).")
    cmd.add_argument("--format", default="json", help="Comma separated: json,dot,text (default: json).")

    cmd = _add_command(sub, ("fits",), "Check a formula against positive and negative example files.", [common])
    cmd.add_argument("formula", help="Formula text.")
    cmd.add_argument("--pos", nargs="*", default=[], help="Positive example model files.")
    cmd.add_argument("--neg", nargs="*", default=[], help="Negative example model files.")

    verify = _add_command(sub, ("verify",), "Run an oracle-backed verifier.")
    vsub = verify.add_subparsers(dest="verifier", required=True)

    cmd = _add_command(vsub, ("verify", "unique"),
                       "Every bounded candidate fitting the characterisation is equivalent to the formula.",
                       [common, verify_opts])
    cmd.add_argument("formula", help="Formula to characterise and check.")
    cmd.add_argument("--max-depth", type=int, default=2, help="Modal depth bound for candidates (default: 2).")
    cmd.add_argument("--max-size", type=int, default=7, help="Size bound for candidates (default: 7).")
    cmd.add_argument("--negative", default=None,
                     help="Comma separated Q: characterise as a uniform formula and enumerate the uniform fragment.")

    cmd = _add_command(vsub, ("verify", "duality"),
                       "Upward closure of the positives and downward closure of the negatives partition all models.",
                       [common, verify_opts])
    cmd.add_argument("formula", help="Formula to characterise and check.")
    cmd.add_argument("--max-states", type=int, default=3, help="Check every model up to this many states (max 4).")
    cmd.add_argument("--samples", type=int, default=settings.DUALITY_SAMPLES, help="Random models on top.")
    cmd.add_argument("--sample-min-states", type=int, default=4, help="Smallest sampled model.")
    cmd.add_argument("--sample-max-states", type=int, default=6, help="Largest sampled model.")
    cmd.add_argument("--density", type=float, default=0.5, help="Edge probability for sampled models.")

    cmd = _add_command(vsub, ("verify", "preservation"), "Positive-fragment truth is preserved along weak simulations.",
                       [common, verify_opts])
    cmd.add_argument("--trials", type=int, default=1000, help="Random (formula, model pair) trials.")
    cmd.add_argument("--max-depth", type=int, default=3, help="Modal depth bound for the formulas.")
    cmd.add_argument("--max-states", type=int, default=4, help="State bound for the models.")

    cmd = _add_command(vsub, ("verify", "minimality"), "No positive example of the box tower formula can be dropped.",
                       [common, verify_opts])
    cmd.add_argument("--n", type=int, default=1, help="Check □ⁿp for this n (default: 1).")

    cmd = _add_command(sub, ("spoiler",), "Full-language spoiler: a fitting but non-equivalent formula via height_n.",
                       [common, verify_opts])
    cmd.add_argument("formula", help="Full-language formula that fits the examples.")
    cmd.add_argument("--pos", nargs="*", default=[], help="Positive example model files.")
    cmd.add_argument("--neg", nargs="*", default=[], help="Negative example model files.")
    cmd.add_argument("--fragment-forms", action="store_true",
                     help="Use the ⊤-free height formula when the input is false.")

    cmd = _add_command(sub, ("tower",), "Count the positive examples of □ⁿp against tower(n, 2).", [common])
    cmd.add_argument("--max-n", type=int, default=3, help="Largest n (default: 3).")
    cmd.add_argument("--allow-large", action="store_true", help="Permit n = 4 (65536 examples).")

    fixtures = _add_command(sub, ("fixtures",), "Named test fixtures.")
    fsub = fixtures.add_subparsers(dest="fixture", required=True)
    cmd = _add_command(fsub, ("fixtures", "coproduct"),
                       "The four models showing weak simulations have no coproducts.", [common])
    cmd.add_argument("--out", default=None, help="Also write A, B, C, C′ as model files here.")

    cmd = _add_command(sub, ("runs",), "List recorded verification runs.", [common])
    cmd.add_argument("--limit", type=int, default=20, help="Newest runs to show (default: 20).")
    cmd.add_argument("--filter", default=None, dest="command_filter", help="Only runs of this command.")
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# ---------------------------------------------------------------------------
# Helpers


def _emit(payload: Any) -> None:
    if isinstance(payload, str):
        print(payload)
    else:
        print(json.dumps(payload, indent=2))


def _signature(args: argparse.Namespace, formula=None) -> PropSignature:
    if args.props:
        return PropSignature.parse(args.props)
    if formula is not None:
        return signature_for(formula)
    return PropSignature(())


def _formula(args: argparse.Namespace, text: str):
    sig = PropSignature.parse(args.props) if args.props else None
    return parse_formula(text, sig)


def _models(paths: Sequence[str]) -> List:
    return [read_model(path) for path in paths]


def _report_exit(report: VerificationReport) -> int:
    return EXIT_OK if report.passed else EXIT_FAIL


def _record(args: argparse.Namespace, command: str, report: VerificationReport,
            formula: str | None, signature: Sequence[str]) -> None:
    if not getattr(args, "record", False):
        return
    for db in get_db():
        run = record_run(db, {
            "command": command,
            "report": report,
            "formula": formula,
            "signature": list(signature),
            "seed": getattr(args, "seed", None),
        })
        LOGGER.info("recorded run %s", run.id)


def _formats(text: str) -> List[str]:
    return RunConfig(formats=[item.strip() for item in text.split(",") if item.strip()]).formats


def _write_characterization(char: Characterization, out: Path, formats: Sequence[str]) -> Dict[str, Any]:
    out.mkdir(parents=True, exist_ok=True)
    (out / "formula.txt").write_text(to_text(char.formula) + "\n", encoding="utf-8")
    for folder, models in (("pos", char.positives), ("neg", char.negatives)):
        for k, model in enumerate(models):
            if "json" in formats:
                write_model(model, out / folder / f"{k:03d}.json")
            if "dot" in formats:
                (out / folder).mkdir(parents=True, exist_ok=True)
                (out / folder / f"{k:03d}.dot").write_text(model_to_dot(model, f"{folder}{k:03d}"), encoding="utf-8")
    summary = char.summary()
    lines = [f"{key}: {value}" for key, value in summary.items()]
    (out / "summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    if "text" in formats:
        for line in lines:
            print(line, file=sys.stderr)
    return summary


# ---------------------------------------------------------------------------
# Commands


def cmd_parse(args: argparse.Namespace) -> int:
    formula = _formula(args, args.formula)
    _emit({
        "formula": to_text(formula),
        "modal_depth": modal_depth(formula),
        "size": formula_size(formula),
        "atoms": sorted(atoms_of(formula)),
        "connectives": sorted(fragment_of(formula)),
    })
    return EXIT_OK


def cmd_nf(args: argparse.Namespace) -> int:
    nf = to_normal_form(_formula(args, args.formula))
    for bnf in nf.disjuncts:
        line = str(bnf)
        print(f"{classify_bnf(bnf)}\t{line}" if args.cases else line)
    return EXIT_OK


def cmd_modelcheck(args: argparse.Namespace) -> int:
    model = read_model(args.model)
    _emit("true" if modelcheck(_formula(args, args.formula), model) else "false")
    return EXIT_OK


def cmd_height(args: argparse.Namespace) -> int:
    value = height(read_model(args.model))
    _emit("inf" if value == math.inf else str(value))
    return EXIT_OK


def cmd_unravel(args: argparse.Namespace) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    unravelled = tree_unravel(read_model(args.model), args.depth)
    if args.out:
        write_model(unravelled, args.out)
    else:
        _emit(model_to_dict(unravelled))
    return EXIT_OK


def cmd_bisim(args: argparse.Namespace) -> int:
    left, right = read_model(args.left), read_model(args.right)
    if args.depth is not None:
        _emit("true" if n_bisimilar(left, right, args.depth) else "false")
        return EXIT_OK
    result = bisimilar(left, right)
    _emit("true" if result else "false")
    _emit(relation_to_dict(result.witness.pairs) if result.witness is not None else "none")
    return EXIT_OK


def cmd_wsim(args: argparse.Namespace) -> int:
    left, right = read_model(args.left), read_model(args.right)
    if args.check:
        relation = relation_from_pairs(left, right, read_relation(args.check))
        _emit("true" if is_weak_simulation(relation) else "false")
        return EXIT_OK
    result = weak_simulates(left, right)
    _emit("true" if result else "false")
    _emit(relation_to_dict(result.witness.pairs) if result.witness is not None else "none")
    return EXIT_OK


def cmd_characterize(args: argparse.Namespace) -> int:
    formula = _formula(args, args.formula)
    char = characterize(formula, _signature(args, formula))
    _emit(_write_characterization(char, Path(args.out), _formats(args.format)))
    return EXIT_OK


def _uniform_partition(args: argparse.Namespace, formula, negative_text: str):
    sig = _signature(args, formula)
    negative = [name.strip() for name in negative_text.split(",") if name.strip()]
    positive = [name for name in sig.props if name not in negative]
    return positive, negative


def cmd_characterize_uniform(args: argparse.Namespace) -> int:
    formula = _formula(args, args.formula)
    positive, negative = _uniform_partition(args, formula, args.negative)
    char = characterize_uniform(formula, positive, negative)
    _emit(_write_characterization(char, Path(args.out), _formats(args.format)))
    return EXIT_OK


def cmd_fits(args: argparse.Namespace) -> int:
    formula = _formula(args, args.formula)
    result = fits(formula, _models(args.pos), _models(args.neg))
    if result:
        _emit("true")
        return EXIT_OK
    _emit({
        "fits": False,
        "polarity": result.polarity,
        "index": result.index,
        "model": model_to_dict(result.counterexample),
    })
    return EXIT_FAIL


def _bounds(**values: Any) -> Bounds:
    try:
        return Bounds(**values)
    except ValidationError as exc:
        raise UsageError(f"invalid bounds: {exc.errors()[0]['msg']}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    verifier = args.verifier
    formula_text: str | None = None
    signature: Sequence[str] = ()
    if verifier == "unique":
        formula = _formula(args, args.formula)
        bounds = _bounds(max_depth=args.max_depth, max_size=args.max_size, seed=args.seed)
        if args.negative is not None:
            positive, negative = _uniform_partition(args, formula, args.negative)
            char = characterize_uniform(formula, positive, negative)
            report = verify_unique(formula, char, bounds, UNIFORM_FRAGMENT,
                                   positive_atoms=positive, negative_atoms=negative, timings=args.timings)
        else:
            char = characterize(formula, _signature(args, formula))
            report = verify_unique(formula, char, bounds, timings=args.timings)
        formula_text, signature = to_text(formula), char.signature
    elif verifier == "duality":
        formula = _formula(args, args.formula)
        bounds = _bounds(
            max_states=args.max_states,
            samples=args.samples,
            sample_min_states=args.sample_min_states,
            sample_max_states=args.sample_max_states,
            edge_density=args.density,
            seed=args.seed,
        )
        char = characterize(formula, _signature(args, formula))
        report = verify_duality(char, bounds, jobs=args.jobs, timings=args.timings)
        formula_text, signature = to_text(formula), char.signature
    elif verifier == "preservation":
        signature = _signature(args).props or ("p", "q")
        bounds = _bounds(max_depth=args.max_depth, max_states=args.max_states, seed=args.seed)
        report = verify_preservation(signature, bounds, trials=args.trials, timings=args.timings)
    else:
        report = verify_minimality(args.n, timings=args.timings)
        signature = ("p",)
    _emit(report.model_dump(mode="json"))
    _record(args, f"verify {verifier}", report, formula_text, signature)
    return _report_exit(report)


def cmd_spoiler(args: argparse.Namespace) -> int:
    formula = _formula(args, args.formula)
    positives, negatives = _models(args.pos), _models(args.neg)
    sig = None
    if args.props:
        sig = PropSignature.parse(args.props).props
    result = spoiler_full_language(positives, negatives, formula, sig, fragment_forms=args.fragment_forms)
    report = spoiler_report(result, formula)
    _emit(report.model_dump(mode="json"))
    _record(args, "spoiler", report, to_text(formula), result.witness.signature)
    return EXIT_OK


def cmd_tower(args: argparse.Namespace) -> int:
    table = tower_table(args.max_n, allow_large=args.allow_large)
    for row in table.rows:
        print(row.as_tuple())
    return EXIT_OK if table.consistent else EXIT_FAIL


def cmd_fixtures(args: argparse.Namespace) -> int:
    sig = PropSignature.parse(args.props).props if args.props else ("p", "q", "r")
    if args.out:
        fixtures = coproduct_fixtures(sig)
        out = Path(args.out)
        for name, model in (("A", fixtures.a), ("B", fixtures.b), ("C", fixtures.c), ("C_prime", fixtures.c_prime)):
            write_model(model, out / f"{name}.json")
    report = verify_fixtures(sig)
    _emit(report.model_dump(mode="json"))
    return _report_exit(report)


def cmd_runs(args: argparse.Namespace) -> int:
    rows = []
    for db in get_db():
        rows = [RunOut.model_validate(run).model_dump() for run in list_runs(db, limit=args.limit, command=args.command_filter)]
    _emit(rows)
    return EXIT_OK


COMMANDS = {
    "parse": cmd_parse,
    "nf": cmd_nf,
    "modelcheck": cmd_modelcheck,
    "height": cmd_height,
    "unravel": cmd_unravel,
    "bisim": cmd_bisim,
    "wsim": cmd_wsim,
    "characterize": cmd_characterize,
    "characterize-uniform": cmd_characterize_uniform,
    "fits": cmd_fits,
    "verify": cmd_verify,
    "spoiler": cmd_spoiler,
    "tower": cmd_tower,
    "fixtures": cmd_fixtures,
    "runs": cmd_runs,
}


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, str(settings.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except UsageError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(getattr(args, "verbose", False))
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PARSE_ERRORS as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardExceeded as exc:
        print(f"ABORTED: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except FitVerificationError as exc:
        print(f"FAILED: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
