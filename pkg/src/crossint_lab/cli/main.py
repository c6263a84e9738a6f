"""Command-line entry point for crossint-lab.

Exit codes: 0 for success or a true answer, 1 when the checked property
does not hold, 2 for usage, parameter, format and I/O errors.

Examples
--------
.. code-block:: bash

    crossint-lab construct --kind acz --n 4 --ell 1 -o pair.fam
    crossint-lab verify pair.fam
    crossint-lab search --n 4 --ell 2 --json
    crossint-lab analyze pair.fam --strategy first-column
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from ..config.settings import Settings, get_settings
from ..constructions import acz_pair, canonical_pair, matrix_family
from ..core import is_cross_intersecting
from ..exceptions import CrossIntLabError, ParameterError
from ..io.fam_format import encode_pair, read_pair, write_pair
from ..models.params import CanonicalParams, MatrixVariant
from ..models.search import SearchConfig
from ..search import classify_extremal, max_product
from ..spectra import (
    STRATEGIES,
    aligned_echelon_pair,
    char_matrix,
    classify_rows,
    difference_matrix,
    duality_check,
    rref,
    span_dims,
)
from ..utils.logging_setup import setup_logging
from ..utils.run_context import set_run_id
from . import reports
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

COMMANDS = ("construct", "verify", "search", "bounds", "analyze", "classify")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser; ``selftest`` is parsed but not listed."""
    parser = argparse.ArgumentParser(
        prog="crossint-lab",
        description="Exact search and verification of cross-intersecting "
        "set families",
    )
    subparsers = parser.add_subparsers(
        dest="command", metavar="{" + ",".join(COMMANDS) + "}"
    )
    subparsers.required = True

    construct = subparsers.add_parser(
        "construct", help="Build an explicit extremal pair"
    )
    construct.add_argument(
        "--kind", choices=["acz", "canonical", "matrix"], required=True
    )
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--ell", type=int, required=True)
    construct.add_argument("--kappa", type=int)
    construct.add_argument("--tau", type=int)
    construct.add_argument("--nprime", type=int)
    construct.add_argument(
        "--variant", choices=[v.value for v in MatrixVariant]
    )
    construct.add_argument("--k", type=int, help="Rank of M_A (matrix)")
    construct.add_argument("--json", action="store_true")
    construct.add_argument("-o", "--output", type=Path)

    verify = subparsers.add_parser(
        "verify", help="Check that a pair file is cross-intersecting"
    )
    verify.add_argument("file", type=Path)
    verify.add_argument("--ell", type=int, help="Override the file's ell")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("-o", "--output", type=Path)

    search = subparsers.add_parser("search", help="Compute P_ell(n)")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--ell", type=int, required=True)
    search.add_argument(
        "--prune",
        action="append",
        choices=["product", "dimension", "none"],
        help="Bounds to use; repeatable (default: product, dimension "
        "from CROSSINT_DIMENSION_PRUNE_MIN_N)",
    )
    search.add_argument("--all-optima", action="store_true")
    search.add_argument("--workers", type=int)
    search.add_argument("--json", action="store_true")
    search.add_argument(
        "-o", "--output", type=Path, help="Write the first witness here"
    )

    bounds = subparsers.add_parser("bounds", help="Tabulate product bounds")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--ell", type=int, required=True)
    bounds.add_argument("--json", action="store_true")
    bounds.add_argument("-o", "--output", type=Path)

    analyze = subparsers.add_parser(
        "analyze", help="Span dimensions, echelon and row classification"
    )
    analyze.add_argument("file", type=Path)
    analyze.add_argument("--b1", type=int, default=1, help="1-based B1")
    analyze.add_argument(
        "--strategy", choices=list(STRATEGIES), default="max-column"
    )
    analyze.add_argument("--json", action="store_true")
    analyze.add_argument("-o", "--output", type=Path)

    classify = subparsers.add_parser(
        "classify", help="Match a pair against the canonical families"
    )
    classify.add_argument("file", type=Path)
    classify.add_argument("--json", action="store_true")
    classify.add_argument("-o", "--output", type=Path)

    selftest = subparsers.add_parser("selftest")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--rounds", type=int)
    selftest.add_argument("--json", action="store_true")
    selftest.add_argument("-o", "--output", type=Path)
    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        print(text)
    else:
        output.write_text(text + "\n", encoding="utf-8", newline="\n")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(
            f"{args.kind} construction needs {', '.join(missing)}",
            missing[0].lstrip("-"),
        )


def cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    params = None
    if args.kind == "acz":
        pair = acz_pair(args.n, args.ell)
    elif args.kind == "canonical":
        _require(args, "kappa", "tau", "nprime")
        canonical = CanonicalParams(
            n=args.n,
            ell=args.ell,
            kappa=args.kappa,
            tau=args.tau,
            nprime=args.nprime,
        )
        pair = canonical_pair(canonical)
        params = canonical.model_dump()
    else:
        _require(args, "variant")
        family = matrix_family(
            MatrixVariant(args.variant), args.ell, args.n, args.k
        )
        pair = family.pair
        params = {
            "variant": family.spec.variant.value,
            "k": family.spec.k,
            "h": family.spec.h,
        }

    if args.output is not None:
        write_pair(pair, args.output)
    if args.json:
        print(reports.dumps(reports.construct_payload(args.kind, pair, params)))
    elif args.output is not None:
        print(
            f"wrote {args.output}: |A|={len(pair.a)} |B|={len(pair.b)} "
            f"product={pair.product}"
        )
    else:
        sys.stdout.write(encode_pair(pair))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    pair = read_pair(args.file)
    if args.ell is not None:
        pair = pair.model_copy(update={"ell": args.ell})
    result = is_cross_intersecting(pair)
    if args.json:
        _emit(reports.dumps(reports.verify_payload(pair, result)), args.output)
    else:
        _emit(f"cross-intersecting: {str(result).lower()}", args.output)
    return EXIT_OK if result else EXIT_FALSE


def _search_config(args: argparse.Namespace, settings: Settings) -> SearchConfig:
    prune_product = True
    prune_dimension: Optional[bool] = None
    if args.prune:
        if "none" in args.prune and len(set(args.prune)) > 1:
            raise ParameterError(
                "--prune none cannot be combined with other bounds", "prune"
            )
        prune_product = "product" in args.prune
        prune_dimension = "dimension" in args.prune
    workers = settings.default_workers if args.workers is None else args.workers
    return SearchConfig(
        prune_product=prune_product,
        prune_dimension=prune_dimension,
        enumerate_all_optima=args.all_optima,
        worker_count=workers,
    )


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    config = _search_config(args, settings)
    logger.debug("Search config: %s", config.model_dump())
    report = max_product(args.n, args.ell, config, settings)
    if args.output is not None and report.witnesses:
        write_pair(report.witnesses[0], args.output)
    if args.json:
        print(reports.dumps(reports.search_payload(report)))
    else:
        print(reports.search_table(report))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, settings: Settings) -> int:
    if args.n < 1 or args.ell < 0:
        raise ParameterError("bounds need n >= 1 and ell >= 0", "n", args.n)
    payload = reports.bounds_payload(args.n, args.ell)
    text = reports.dumps(payload) if args.json else reports.bounds_table(payload)
    _emit(text, args.output)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, settings: Settings) -> int:
    pair = read_pair(args.file)
    b1_index = args.b1 - 1
    k, h = span_dims(pair, b1_index)
    m_a = char_matrix(pair.a)
    form_a = rref(m_a)
    rows = classify_rows(form_a.matrix, args.strategy)
    duality: Optional[bool] = None
    # (* | I_h) only exists for cross-intersecting input
    if k + h == pair.n and is_cross_intersecting(pair):
        aligned_a, aligned_b = aligned_echelon_pair(
            m_a, difference_matrix(pair, b1_index)
        )
        duality = duality_check(aligned_a, aligned_b)
    payload = reports.analyze_payload(
        pair.n, k, h, b1_index + 1, form_a.pivot_cols, rows, duality
    )
    if args.json:
        text = reports.dumps(payload)
    else:
        text = reports.table(
            [
                (key.replace("_", " "), value)
                for key, value in payload.items()
                if key != "selection_log"
            ]
            + [
                (f"selected column {entry['column']}", entry["rows"])
                for entry in payload["selection_log"]
            ]
        )
    _emit(text, args.output)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    pair = read_pair(args.file)
    result = classify_extremal(pair)
    payload = reports.classify_payload(result)
    if args.json:
        text = reports.dumps(payload)
    else:
        rows: List = [("matched", str(result.matched).lower())]
        if result.params is not None:
            rows += [(key, value) for key, value in payload["params"].items()]
            rows += [
                ("swapped", str(result.swapped).lower()),
                ("relabeling", ",".join(str(e) for e in result.relabeling)),
            ]
            if result.extension_beyond_theorem:
                rows.append(("note", "extension beyond the theorem (ell=0)"))
        text = reports.table(rows)
    _emit(text, args.output)
    return EXIT_OK if result.matched else EXIT_FALSE


def cmd_selftest(args: argparse.Namespace, settings: Settings) -> int:
    rounds = settings.selftest_rounds if args.rounds is None else args.rounds
    if rounds < 1:
        raise ParameterError("--rounds must be positive", "rounds", rounds)
    failures = run_selftest(args.seed, rounds)
    if args.json:
        text = reports.dumps(
            {"seed": args.seed, "rounds": rounds, "failures": failures}
        )
    else:
        text = reports.table(
            [
                (name, "ok" if not failed else f"FAILED {failed[:10]}")
                for name, failed in failures.items()
            ]
        )
    _emit(text, args.output)
    return EXIT_FALSE if any(failures.values()) else EXIT_OK


HANDLERS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "bounds": cmd_bounds,
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "selftest": cmd_selftest,
}


def _report_error(error: CrossIntLabError, as_json: bool) -> None:
    if as_json:
        print(error.to_json(), file=sys.stderr)
    else:
        print(f"error: {error.code}: {error.message}", file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code.

    :param argv: Arguments without the program name; ``sys.argv[1:]``
        when None
    :return: 0, 1 or 2 as described in the module docstring
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = get_settings()
        logger.debug("Running %s with %s", args.command, vars(args))
        return HANDLERS[args.command](args, settings)
    except CrossIntLabError as e:
        _report_error(e, as_json)
    except ValidationError as e:
        _report_error(
            ParameterError(f"Invalid input: {e.errors()[0]['msg']}"), as_json
        )
    except OSError as e:
        _report_error(CrossIntLabError(str(e), code="IO_ERROR"), as_json)
    return EXIT_USAGE


def main() -> None:
    """Console-script entry point."""
    try:
        from dotenv import load_dotenv

        load_dotenv()
    except ImportError:
        pass

    try:
        level = get_settings().log_level
    except CrossIntLabError:
        level = "WARNING"
    setup_logging(level=level)
    set_run_id()
    sys.exit(run())


if __name__ == "__main__":
    main()
