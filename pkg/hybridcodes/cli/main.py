"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or input error.
Results go to stdout (``--json`` for machine-readable output), logs to stderr.
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ValidationError

from ..agents.config import SearchConfig, SearchStrategy
from ..agents.orchestrator import SearchOrchestrator
from ..core.config import get_settings
from ..core.exceptions import HybridCodeError, PreconditionError
from ..core.logging_setup import configure_logging
from ..models.catalog import CATALOG, catalog
from ..models.codefile import (
    load_classical,
    load_code,
    load_pauli_rows,
    load_seeds,
    save_code,
    serialize,
)
from ..models.hybrid_code import HybridCode, validate
from ..services.analysis import (
    code_enumerators,
    hybrid_distance_witness,
    impurity_check,
    shadow,
    sweep_witness,
    union_code_distance,
)
from ..services.constructions import (
    ConstructionXInput,
    append_zero_qubits,
    construction_x,
    convert_all_to_classical,
    juxtapose,
    realize_split,
)
from ..services.lp_bounds import is_feasible, max_m, reproduce_table1
from .schemas import (
    BoundReport,
    CatalogListing,
    CodeReport,
    DistanceReport,
    EnumeratorReport,
    TableReport,
    VerifyReport,
)

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

CATALOG_PREFIX = "catalog:"

Outcome = Tuple[BaseModel, int]


def load_code_arg(value: str) -> HybridCode:
    """A code file path, or ``catalog:NAME`` for a built-in code."""
    if value.startswith(CATALOG_PREFIX):
        return catalog(value[len(CATALOG_PREFIX) :])
    return load_code(value)


def _fits_enumeration(rank: int) -> bool:
    return rank <= get_settings().enumeration_rank_cap


def cmd_verify(args: argparse.Namespace) -> Outcome:
    h = load_code_arg(args.code)
    derived = validate(h)
    claimed = args.claimed_d if args.claimed_d is not None else h.claimed_d
    report = VerifyReport(code=h.label(), n=h.n, k=h.k, m=h.m, method="full", claimed_d=claimed)

    if _fits_enumeration(derived.c_star.rank):
        d, witness = hybrid_distance_witness(derived, threads=args.threads)
        impurity = impurity_check(derived, threads=args.threads)
        report.distance = d
        report.witness = str(witness) if witness is not None else None
        report.impure = impurity.impure
        report.naive_distance = impurity.d_naive
        report.translated_distance = impurity.d_code
        report.union_distance = union_code_distance(derived, threads=args.threads)
    else:
        if claimed is None:
            raise PreconditionError(
                f"rank {derived.c_star.rank} is above the enumeration cap; pass --claimed-d"
            )
        report.method = "sweep"
        witness = sweep_witness(derived, claimed, threads=args.threads)
        if witness is None:
            report.distance_at_least = claimed
        else:
            report.distance = witness.weight()
            report.witness = str(witness)

    if claimed is not None:
        report.confirmed = report.distance is None or report.distance >= claimed
    negative = report.confirmed is False
    return report, EXIT_NEGATIVE if negative else EXIT_OK


def cmd_distance(args: argparse.Namespace) -> Outcome:
    h = load_code_arg(args.code)
    derived = validate(h)
    if args.sweep_target is None:
        d, witness = hybrid_distance_witness(derived, threads=args.threads)
        text = str(witness) if witness is not None else None
        report = DistanceReport(code=h.label(), distance=d, witness=text)
        return report, EXIT_OK
    witness = sweep_witness(derived, args.sweep_target, threads=args.threads)
    report = DistanceReport(
        code=h.label(),
        sweep_target=args.sweep_target,
        holds=witness is None,
        witness=None if witness is None else str(witness),
    )
    return report, EXIT_OK if report.holds else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace) -> Outcome:
    h = load_code_arg(args.code)
    derived = validate(h)
    enums = code_enumerators(derived, threads=args.threads)
    table: Dict[str, Sequence[int]] = {
        "c0": enums.c0.coeffs,
        "c0*": enums.c0_star.coeffs,
        "c": enums.c.coeffs,
        "c*": enums.c_star.coeffs,
    }
    if args.which == "shadow":
        table = {"shadow": shadow(enums.c0, derived.c0.size)}
    elif args.which != "all":
        table = {args.which: table[args.which]}
    out = {name: [str(v) for v in coeffs] for name, coeffs in table.items()}
    return EnumeratorReport(code=h.label(), enumerators=out), EXIT_OK


def cmd_bound(args: argparse.Namespace) -> Outcome:
    use_shadow = not args.no_shadow
    if args.table:
        report = reproduce_table1(
            distances=[args.d] if args.d else (3, 4, 5),
            lengths=[args.n] if args.n else None,
            use_shadow=use_shadow,
        )
        mismatches = len(report.mismatches)
        table = TableReport(cells=report.to_json(), mismatches=mismatches, text=report.text())
        return table, EXIT_NEGATIVE if mismatches else EXIT_OK

    best = max_m(args.n, args.k, args.d, use_shadow)
    result = BoundReport(n=args.n, k=args.k, d=args.d, use_shadow=use_shadow, max_m=best)
    if best is not None and args.certificate:
        cert = is_feasible(args.n, args.k, best, args.d, use_shadow).certificate or {}
        result.certificate = {key: [str(v) for v in values] for key, values in cert.items()}
    return result, EXIT_OK if best is not None else EXIT_NEGATIVE


def _emit_code(h: HybridCode, args: argparse.Namespace, source: Optional[str] = None) -> Outcome:
    output = getattr(args, "output", None)
    if output:
        save_code(h, output)
        logger.info("Code written", path=output, code=h.label())
    return CodeReport(label=h.label(), code=serialize(h), source=source), EXIT_OK


def cmd_construct(args: argparse.Namespace) -> Outcome:
    if args.construction == "x":
        inner = load_code_arg(args.inner)
        classical = load_classical(args.classical)
        claimed = tuple(args.claimed) if args.claimed else None
        if args.outer:
            outer = load_code_arg(args.outer)
            inp = ConstructionXInput.from_nested(inner, outer, classical, claimed)
        else:
            g12 = tuple(load_pauli_rows(args.g12))
            inp = ConstructionXInput(inner=inner, g12=g12, classical=classical, claimed=claimed)
        return _emit_code(construction_x(inp), args, source="construction-x")

    h = load_code_arg(args.code)
    if args.construction == "append":
        result = append_zero_qubits(h, args.count)
    elif args.construction == "convert-lemma2":
        result = convert_all_to_classical(h) if args.all else realize_split(h, args.count)
    else:
        result = juxtapose(h, load_classical(args.classical))
    validate(result)
    return _emit_code(result, args, source=args.construction)


def cmd_search(args: argparse.Namespace) -> Outcome:
    seeds = load_seeds(args.seeds)
    config = SearchConfig(
        target_d=args.d,
        target_k=args.k,
        max_trials=args.trials,
        rng_seed=args.rng_seed,
        strategy=SearchStrategy(args.strategy),
    )
    campaign = SearchOrchestrator().run_campaign(seeds, config, log_path=args.log)
    if campaign.best is None:
        report = CodeReport(label="none", code="")
        return report, EXIT_NEGATIVE
    record = campaign.improvements[-1]
    report = CodeReport(
        label=record.code.label(),
        code=serialize(record.code),
        source=record.source,
        trial=record.trial,
    )
    if args.output:
        save_code(record.code, args.output)
    return report, EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> Outcome:
    if args.name:
        h = catalog(args.name)
        return CodeReport(label=h.label(), code=serialize(h), source=args.name), EXIT_OK
    entries = [
        {"name": e.name, "n": e.n, "k": e.k, "m": e.m, "claimed_d": e.claimed_d, "note": e.note}
        for e in CATALOG.values()
    ]
    return CatalogListing(entries=entries), EXIT_OK


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--threads", type=int, default=None, help="worker threads")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hybridcodes", description="Hybrid quantum-classical stabilizer code toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="validate a code and certify d")
    p.add_argument("code", help="code file or catalog:NAME")
    p.add_argument("--claimed-d", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("distance", parents=[common], help="hybrid minimum distance")
    p.add_argument("code")
    p.add_argument("--sweep-target", type=int, default=None)
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("enumerate", parents=[common], help="weight enumerators")
    p.add_argument("code")
    p.add_argument("--which", choices=["all", "c0", "c0*", "c", "c*", "shadow"], default="all")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("bound", parents=[common], help="largest m allowed by the LP")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--no-shadow", action="store_true")
    p.add_argument("--table", action="store_true", help="recompute the published bound table")
    p.add_argument("--certificate", action="store_true", help="include the enumerator witness")
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("construct", help="build codes from other codes")
    kinds = p.add_subparsers(dest="construction", required=True)
    x = kinds.add_parser("x", parents=[common], help="construction X")
    x.add_argument("--inner", required=True)
    group = x.add_mutually_exclusive_group(required=True)
    group.add_argument("--g12", help="file of normalizer extension rows")
    group.add_argument("--outer", help="code file of the larger nested code")
    x.add_argument("--classical", required=True)
    x.add_argument("--claimed", type=int, nargs=3, metavar=("D1", "D2", "D3"))
    x.add_argument("-o", "--output")
    a = kinds.add_parser("append", parents=[common], help="append |0> qubits")
    a.add_argument("code")
    a.add_argument("--count", type=int, required=True)
    a.add_argument("-o", "--output")
    c = kinds.add_parser("convert-lemma2", parents=[common], help="logical qubits to bits")
    c.add_argument("code")
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--all", action="store_true")
    c.add_argument("-o", "--output")
    j = kinds.add_parser("juxtapose", parents=[common], help="quantum and classical side by side")
    j.add_argument("code")
    j.add_argument("--classical", required=True)
    j.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("search", parents=[common], help="search hybrid codes from seeds")
    p.add_argument("--seeds", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--strategy", choices=[s.value for s in SearchStrategy], default="exhaustive")
    p.add_argument("--log", default=None, help="JSON-lines log of improvements")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("catalog", parents=[common], help="list or print built-in codes")
    p.add_argument("name", nargs="?")
    p.set_defaults(handler=cmd_catalog)
    return parser


def _check_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "bound" and not args.table:
        missing = [f"--{name}" for name in ("n", "k", "d") if getattr(args, name) is None]
        if missing:
            parser.error(f"bound needs {', '.join(missing)} unless --table is given")


def emit(report: BaseModel, as_json: bool) -> None:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(report.render())


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the command and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_args(parser, args)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level, settings.log_json)
    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    try:
        report, code = handler(args)
    except (HybridCodeError, ValidationError, OSError) as e:
        logger.error("Command failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    emit(report, args.json)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
