"""File-driven command line front end.

Commands: validate-op, integrate, density, diagnose, quotient,
ideal-measures, variation, gallery.  Data commands read a JSON spec
document (--space-file) naming the space, measures, functions, and
ideals; --op picks the pseudo-multiplication ("times", "min", or
"chain" to use the document's chain), defaulting to the document's
choice and then to "times".

Exit codes: 0 computed (a negative mathematical verdict such as "no
density" is still a computation), 2 invalid input, 3 size cap exceeded,
4 negative verdict when --fatal-verdicts is set, 1 unexpected internal
failure (including a failing gallery self-assertion).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .density import diagnose_rn, finitize_density, solve_density, verify_density
from .errors import (
    CarrierDomainError,
    DegenerateOperationError,
    MaxitiveError,
    SizeCapError,
    SpaceMismatchError,
    SpecValidationError,
)
from .gallery import GALLERY, run_gallery
from .integral import canonical_grid, integrate_atomwise, integrate_oracle, integrate_threshold
from .measure import SigmaIdeal, check_maxitive, measure_eval
from .pseudomul import Minimum, PseudoMul, SampleBudget, StandardProduct, validate_pseudo_mul
from .quotient import (
    build_quotient,
    ideal_restriction_measure,
    disjoint_variation,
    localize,
    nguyen_measure,
    verify_lattice_complete,
)
from .report import Report, jsonable
from .spaces import SubsetB
from .specdoc import SpecDoc, parse_spec

__all__ = ["main", "run_command"]

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_SIZE_CAP = 3
EXIT_NEGATIVE = 4


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _maybe_doc(args) -> Optional[SpecDoc]:
    doc = getattr(args, "_doc", None)
    if doc is not None:
        return doc
    if getattr(args, "space_file", None):
        return parse_spec(args.space_file)
    return None


def _load_doc(args) -> SpecDoc:
    doc = _maybe_doc(args)
    if doc is None:
        raise _CliError("this command needs --space-file")
    return doc


def _resolve_pm(args, doc: Optional[SpecDoc]) -> PseudoMul:
    choice = getattr(args, "op", None)
    if choice == "times":
        return StandardProduct()
    if choice == "min":
        return Minimum()
    if choice == "chain":
        if doc is None or doc.pseudo_mul is None or doc.pseudo_mul.kind != "chain":
            raise _CliError("--op chain needs a chain pseudo_mul in the spec document")
        return doc.pseudo_mul
    if doc is not None and doc.pseudo_mul is not None:
        return doc.pseudo_mul
    return StandardProduct()


def _named(kind: str, table: dict, name: Optional[str]):
    if name is None:
        if len(table) == 1:
            return next(iter(table.values()))
        raise _CliError(f"--{kind} is required (document has {len(table)} {kind}s)")
    if name not in table:
        raise _CliError(f"unknown {kind} {name!r}; document has: {', '.join(sorted(table)) or 'none'}")
    return table[name]


def _parse_subset(doc: SpecDoc, text: Optional[str]) -> SubsetB:
    if text is None:
        return doc.space.full
    labels = [a for a in text.split(",") if a]
    try:
        return doc.space.subset(labels)
    except ValueError as exc:
        raise _CliError(str(exc))


def _resolve_ideal(doc: SpecDoc, text: str) -> SigmaIdeal:
    if text in doc.ideals:
        return doc.ideals[text]
    return SigmaIdeal(doc.space, _parse_subset(doc, text))


# ---------------------------------------------------------------------------
# Command implementations
# ---------------------------------------------------------------------------

def _cmd_validate_op(args) -> Report:
    doc = _maybe_doc(args)
    pm = _resolve_pm(args, doc)
    report = validate_pseudo_mul(pm, SampleBudget(seed=args.seed))
    profile = pm.finiteness_profile()
    body = {
        "operation": pm.describe(),
        "identity": jsonable(pm.identity),
        "degenerate": report.degenerate,
        "profile": jsonable(profile),
        "checks": [jsonable(c) for c in report.checks],
        "passed": report.passed,
    }
    return Report("validate-op", body, negative_verdict=not report.passed)


def _cmd_integrate(args) -> Report:
    doc = _load_doc(args)
    pm = _resolve_pm(args, doc)
    nu = _named("measure", doc.measures, args.measure)
    f = _named("function", doc.functions, args.function)
    B = _parse_subset(doc, args.subset)
    sweep = integrate_threshold(pm, f, nu, B)
    atomwise = integrate_atomwise(pm, f, nu, B)
    oracle = integrate_oracle(pm, f, nu, B, canonical_grid(pm, f, B))
    body = {
        "operation": pm.describe(),
        "subset": jsonable(B),
        "value": jsonable(sweep),
        "threshold_sweep": jsonable(sweep),
        "atomwise": jsonable(atomwise),
        "oracle_lower_bound": jsonable(oracle),
        "paths_agree": pm.values_equal(sweep, atomwise),
    }
    return Report("integrate", body)


def _cmd_density(args) -> Report:
    doc = _load_doc(args)
    pm = _resolve_pm(args, doc)
    nu = _named("measure", doc.measures, args.nu)
    tau = _named("measure", doc.measures, args.tau)
    result = solve_density(pm, nu, tau)
    body = {"operation": pm.describe(), "nu": jsonable(nu), "tau": jsonable(tau),
            "found": result.ok}
    if result.ok:
        body["density"] = jsonable(result.density)
        if doc.space.n <= args.max_n:
            body["verified_on_all_subsets"] = verify_density(
                pm, result.density, nu, tau, args.max_n)
        if args.finitize:
            c1 = finitize_density(pm, result.density, nu, tau, args.max_n)
            body["finitized_density"] = jsonable(c1)
    else:
        body["failures"] = [jsonable(f) for f in result.failures]
        body["certificate"] = [str(f) for f in result.failures]
    return Report("density", body, negative_verdict=not result.ok)


def _cmd_diagnose(args) -> Report:
    doc = _load_doc(args)
    pm = _resolve_pm(args, doc)
    tau = _named("measure", doc.measures, args.tau)
    diag = diagnose_rn(pm, tau, args.max_n)
    body = {"operation": pm.describe(), "tau": jsonable(tau),
            "diagnosis": jsonable(diag), "text": str(diag).splitlines()}
    return Report("diagnose", body, negative_verdict=not diag.rn_property)


def _cmd_quotient(args) -> Report:
    doc = _load_doc(args)
    tau = _named("measure", doc.measures, args.tau)
    lattice = build_quotient(tau, args.max_n)
    complete = None
    if lattice.k <= min(args.max_n, 12):
        complete = verify_lattice_complete(lattice, min(args.max_n, 12))
    body = {
        "tau": jsonable(tau),
        "non_null_atoms": jsonable(lattice.non_null_atoms),
        "class_count": lattice.count,
        "complete_lattice_verified": complete,
    }
    return Report("quotient", body)


def _cmd_ideal_measures(args) -> Report:
    doc = _load_doc(args)
    tau = _named("measure", doc.measures, args.tau)
    ideal = _resolve_ideal(doc, args.ideal)
    restricted = ideal_restriction_measure(tau, ideal)
    threshold = nguyen_measure(tau, ideal, validate=doc.space.n <= args.max_n)
    body = {
        "tau": jsonable(tau),
        "ideal_top": jsonable(ideal.top),
        "restricted_to_ideal": jsonable(restricted),
        "nguyen_threshold": jsonable(threshold),
        "localization": jsonable(localize(tau, ideal, args.max_n)),
    }
    if doc.space.n <= args.max_n:
        body["restricted_maxitive"] = check_maxitive(restricted.table(args.max_n))
        body["nguyen_maxitive"] = check_maxitive(threshold.table(args.max_n))
        body["nguyen_below_tau"] = all(
            nv <= tv for nv, tv in zip(threshold.masses, tau.masses))
    return Report("ideal-measures", body)


def _cmd_variation(args) -> Report:
    doc = _load_doc(args)
    tau = _named("measure", doc.measures, args.tau)
    m = disjoint_variation(tau)
    same_nulls = None
    if doc.space.n <= args.max_n:
        same_nulls = all(m(B).is_zero == measure_eval(tau, B).is_zero
                         for B in doc.space.subsets(args.max_n))
    body = {
        "tau": jsonable(tau),
        "disjoint_variation": jsonable(m),
        "total": jsonable(m(doc.space.full)),
        "dominates_tau": all(v <= w for v, w in zip(tau.masses, m.masses)),
        "same_null_sets": same_nulls,
    }
    return Report("variation", body)


def _cmd_gallery(args) -> Report:
    try:
        return run_gallery(args.scenario, seed=args.seed, trials=args.trials)
    except KeyError as exc:
        raise _CliError(str(exc.args[0]))


def run_command(command: str, doc: Optional[SpecDoc], **params) -> Report:
    """Programmatic dispatch mirroring the CLI (used by tests and embedders)."""
    if command not in _HANDLERS:
        raise _CliError(f"unknown command {command!r}")
    ns = argparse.Namespace(
        space_file=None, _doc=doc, op=params.pop("op", None),
        seed=params.pop("seed", 0), max_n=params.pop("max_n", 12),
        finitize=params.pop("finitize", False), trials=params.pop("trials", None),
        **params)
    return _HANDLERS[command](ns)


_HANDLERS = {
    "validate-op": _cmd_validate_op,
    "integrate": _cmd_integrate,
    "density": _cmd_density,
    "diagnose": _cmd_diagnose,
    "quotient": _cmd_quotient,
    "ideal-measures": _cmd_ideal_measures,
    "variation": _cmd_variation,
    "gallery": _cmd_gallery,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxitive",
        description="Maxitive measures, idempotent ⊙-integrals, and densities "
                    "on finite spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--space-file", metavar="PATH",
                       help="JSON spec document with space/measures/functions/ideals")
        p.add_argument("--op", choices=["times", "min", "chain"],
                       help="pseudo-multiplication (default: document's, then times)")
        p.add_argument("--json-out", metavar="PATH",
                       help="write the machine-readable report ('-' for stdout)")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        p.add_argument("--max-n", type=int, default=12,
                       help="cap for exhaustive subset enumeration (default 12)")
        p.add_argument("--fatal-verdicts", action="store_true",
                       help="exit 4 when the mathematical verdict is negative")

    p = sub.add_parser("validate-op", help="check the pseudo-multiplication axioms")
    common(p)

    p = sub.add_parser("integrate", help="compute an idempotent ⊙-integral")
    common(p)
    p.add_argument("--measure", help="name of the measure in the document")
    p.add_argument("--function", help="name of the integrand in the document")
    p.add_argument("--subset", help="comma-separated atoms (default: whole space)")

    p = sub.add_parser("density", help="solve ν(B) = ∫_B c ⊙ dτ")
    common(p)
    p.add_argument("--nu", required=True, help="dominated measure name")
    p.add_argument("--tau", required=True, help="dominating measure name")
    p.add_argument("--finitize", action="store_true",
                   help="also return the ⊙-finite-valued density")

    p = sub.add_parser("diagnose", help="Radon-Nikodym property diagnosis for τ")
    common(p)
    p.add_argument("--tau", required=True)

    p = sub.add_parser("quotient", help="summary of the quotient lattice modulo null sets")
    common(p)
    p.add_argument("--tau", required=True)

    p = sub.add_parser("ideal-measures",
                       help="the two measures attached to a σ-ideal, side by side")
    common(p)
    p.add_argument("--tau", required=True)
    p.add_argument("--ideal", required=True,
                   help="ideal name from the document, or comma-separated atoms")

    p = sub.add_parser("variation", help="the disjoint variation of τ")
    common(p)
    p.add_argument("--tau", required=True)

    p = sub.add_parser("gallery", help="run a named self-asserting scenario")
    common(p)
    p.add_argument("scenario", help=f"one of: {', '.join(sorted(GALLERY))}")
    p.add_argument("--trials", type=int, default=None,
                   help="randomized trial count (scenario default otherwise)")

    return parser


def _emit(report: Report, args) -> None:
    if args.json_out == "-":
        print(report.to_json())
        return
    print(report.render())
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        report = handler(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SpecValidationError as exc:
        print("invalid spec document:", file=sys.stderr)
        for issue in exc.issues:
            print(f"  {issue}", file=sys.stderr)
        return EXIT_INVALID
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (CarrierDomainError, DegenerateOperationError, SpaceMismatchError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MaxitiveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(report, args)
    if args.command == "gallery" and report.negative_verdict:
        return EXIT_INTERNAL
    if report.negative_verdict and args.fatal_verdicts:
        return EXIT_NEGATIVE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
