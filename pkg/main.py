"""
group_decomposition - Main Entry Point
Theta, Suen bounds, decomposition sweeps and exact oracles from the command line.
"""

import sys
import argparse
import dataclasses
import json
import logging
from pathlib import Path
from typing import Any, Dict, Literal, Optional

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from pydantic import BaseModel, ConfigDict, ValidationError

from config.settings import settings
from src.group_decomposition import __version__
from src.group_decomposition.exceptions import DomainError, GroupDecompositionError, InputError
from src.group_decomposition.groups import catalog, parse_group_spec
from src.group_decomposition.structure import commute_probability, profile
from src.group_decomposition.theta import critical_size, solve_theta, solve_theta_precise, theta_bounds
from src.group_decomposition.suen import (
    delta_cap,
    miss_expectation_upper,
    pair_delta_cap,
    suen_pair,
    suen_point,
)
from src.group_decomposition.montecarlo import (
    SweepCurve,
    Variant,
    adaptive_crossing,
    miss_stats,
    sweep,
    window_sweep,
)
from src.group_decomposition.oracle import (
    exact_miss_distribution,
    exact_p,
    exact_pair_mean,
    exact_single_mean,
)
from src.group_decomposition.reporting import (
    ExactDistributionDocument,
    ExactValueDocument,
    GroupDocument,
    MissStatsDocument,
    RationalModel,
    SuenDocument,
    SweepRunOutput,
    ThetaDocument,
    sweep_csv_text,
    sweep_metadata,
)
from src.group_decomposition.utils import check_seed, entropy_seed

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger("group_decomposition.cli")


class RunConfig(BaseModel):
    """Fully resolved invocation; recorded in run metadata."""
    model_config = ConfigDict(extra="forbid")

    command: str
    group_spec: str
    parameters: Dict[str, Any] = {}
    output: Optional[str] = None
    format: Literal["json", "csv"] = "json"
    master_seed: Optional[int] = None


def configure_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """Log to stderr (data stays on stdout) and optionally to a file."""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = log_file or settings.logging.log_file
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    level = logging.DEBUG if verbose else getattr(logging, settings.logging.level.upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _emit_document(document: BaseModel, output: Optional[str]) -> None:
    _emit(document.model_dump_json(indent=2) + "\n", output)


def _resolve_seed(seed: Optional[int]) -> int:
    if seed is None:
        seed = entropy_seed()
        print(f"master seed: {seed}", file=sys.stderr)
    try:
        return check_seed(seed)
    except ValueError as e:
        raise InputError(str(e)) from e


def _check_element(n: int, x: int, flag: str) -> int:
    if not 0 <= x < n:
        raise InputError(f"{flag} must lie in [0, {n}), got {x}")
    return x


def _require_positive(value: int, flag: str) -> int:
    if value < 1:
        raise InputError(f"{flag} must be at least 1, got {value}")
    return value


def cmd_group(args: argparse.Namespace) -> int:
    """Order, validation and profile digest of a group."""
    group = parse_group_spec(args.spec)
    p = profile(group)
    sizes, counts = p.size_multiset()
    document = GroupDocument(
        spec=args.spec,
        order=group.order,
        backend=group.backend.value,
        identity=group.identity,
        class_count=p.class_count,
        center_size=p.center_size,
        class_sizes=[int(v) for v in p.class_sizes],
        centralizer_sizes={str(int(s)): int(c) for s, c in zip(sizes, counts)},
        commute_probability=RationalModel.from_fraction(commute_probability(group)),
        burnside_holds=p.burnside_sum() == group.order * p.class_count,
    )
    _emit_document(document, args.output)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    _emit(json.dumps(catalog(), indent=2) + "\n", args.output)
    return 0


def cmd_theta(args: argparse.Namespace) -> int:
    """Theta, its bounds and the critical size."""
    overrides = {}
    if args.residual_tol is not None:
        overrides["residual_tolerance"] = args.residual_tol
    if args.bracket_tol is not None:
        overrides["bracket_tolerance"] = args.bracket_tol
    if args.max_iterations is not None:
        overrides["max_iterations"] = _require_positive(args.max_iterations, "--max-iterations")
    tolerances = dataclasses.replace(settings.theta, **overrides)

    p = profile(parse_group_spec(args.spec))
    result = solve_theta(p, tolerances)
    bounds = theta_bounds(p)
    precise = None
    if args.precise:
        precise = str(solve_theta_precise(p, args.digits))
    document = ThetaDocument(
        spec=args.spec,
        n=p.order,
        result=result.to_dict(),
        bounds=bounds.to_dict(),
        critical_size=critical_size(p, result.theta),
        precise_theta=precise,
    )
    _emit_document(document, args.output)
    return 0


def cmd_suen(args: argparse.Namespace) -> int:
    """Suen bounds for one element (and optionally a second one)."""
    group = parse_group_spec(args.spec)
    p = profile(group)
    k = _require_positive(args.k, "--k")
    x = _check_element(group.order, args.element, "--element")
    report = suen_point(p, x, k)
    pair = None
    if args.pair_element is not None:
        y = _check_element(group.order, args.pair_element, "--pair-element")
        if y == x:
            raise InputError("--pair-element must differ from --element")
        pair = dict(suen_pair(p, x, y, k).to_dict(), delta_cap=pair_delta_cap(group.order, k))
    document = SuenDocument(
        spec=args.spec,
        n=group.order,
        element=x,
        element_label=group.label(x),
        k=k,
        delta=report.delta,
        delta_star=report.delta_star,
        upper=report.upper,
        lower=report.lower,
        baseline=report.baseline,
        delta_cap=delta_cap(group.order, k),
        moments=report.moments.to_dict(),
        expected_miss_upper=miss_expectation_upper(p, k),
        pair=pair,
    )
    _emit_document(document, args.output)
    return 0


def _emit_curve(curve: SweepCurve, config: RunConfig, save: bool) -> None:
    resolved = config.model_dump(mode="json")
    if config.format == "csv":
        _emit(sweep_csv_text(curve.points), config.output)
        if config.output:
            metadata_path = Path(config.output).with_suffix(".json")
            metadata_path.write_text(
                sweep_metadata(curve, resolved).model_dump_json(indent=2) + "\n", encoding="utf-8"
            )
            logger.info(f"Wrote {metadata_path}")
    else:
        _emit_document(sweep_metadata(curve, resolved, include_points=True), config.output)
    if save:
        settings.ensure_directories()
        SweepRunOutput(curve=curve, config=resolved).save()


def cmd_sweep(args: argparse.Namespace) -> int:
    """Success rate over a range of k and the located crossing."""
    _require_positive(args.kmin, "--kmin")
    _require_positive(args.step, "--step")
    _require_positive(args.trials, "--trials")
    if args.kmax < args.kmin:
        raise InputError(f"--kmax ({args.kmax}) must be at least --kmin ({args.kmin})")
    if args.m_ratio <= 0:
        raise InputError(f"--m-ratio must be positive, got {args.m_ratio}")
    seed = _resolve_seed(args.seed)
    config = RunConfig(
        command="sweep",
        group_spec=args.spec,
        parameters={
            "kmin": args.kmin,
            "kmax": args.kmax,
            "step": args.step,
            "trials": args.trials,
            "variant": args.variant,
            "m_ratio": args.m_ratio,
            "adaptive": args.adaptive,
        },
        output=args.output,
        format=args.format,
        master_seed=seed,
    )
    group = parse_group_spec(args.spec)
    if args.adaptive:
        if args.kmax == args.kmin:
            raise InputError("--adaptive needs --kmax > --kmin")
        curve = adaptive_crossing(group, args.kmin, args.kmax, seed, args.variant, args.m_ratio,
                                  trials_per_round=args.trials, workers=args.workers)
    else:
        ks = range(args.kmin, args.kmax + 1, args.step)
        curve = sweep(group, ks, args.trials, seed, args.variant, args.m_ratio, args.workers)
    _emit_curve(curve, config, args.save)
    return 0


def cmd_window(args: argparse.Namespace) -> int:
    """Step-1 sweep across the transition window."""
    if args.trials is not None:
        _require_positive(args.trials, "--trials")
    seed = _resolve_seed(args.seed)
    config = RunConfig(
        command="window",
        group_spec=args.spec,
        parameters={"trials": args.trials, "variant": args.variant, "m_ratio": args.m_ratio},
        output=args.output,
        format=args.format,
        master_seed=seed,
    )
    group = parse_group_spec(args.spec)
    curve = window_sweep(group, seed, args.trials, args.variant, args.m_ratio, args.workers)
    _emit_curve(curve, config, args.save)
    return 0


def cmd_miss_stats(args: argparse.Namespace) -> int:
    """Distribution of the miss set size over simulated trials."""
    k = _require_positive(args.k, "--k")
    m = _require_positive(args.m, "--m") if args.m is not None else k
    trials = _require_positive(args.trials, "--trials")
    seed = _resolve_seed(args.seed)
    group = parse_group_spec(args.spec)
    stats = miss_stats(group, k, trials, seed, m=m, variant=args.variant, workers=args.workers)
    expected_upper = None
    if args.variant == Variant.BOTH.value and m == k and group.order >= 3:
        expected_upper = miss_expectation_upper(profile(group), k)
    document = MissStatsDocument(
        spec=args.spec,
        k=k,
        m=m,
        variant=args.variant,
        trials=trials,
        master_seed=seed,
        mean=stats.mean,
        variance=stats.variance,
        histogram={str(size): count for size, count in stats.histogram.items()},
        expected_miss_upper=expected_upper,
    )
    _emit_document(document, args.output)
    return 0


def _exact_value(spec: str, quantity: str, parameters: Dict[str, Any], value) -> ExactValueDocument:
    return ExactValueDocument(
        spec=spec,
        quantity=quantity,
        parameters=parameters,
        value=RationalModel.from_fraction(value),
        approximate=float(value),
    )


def cmd_oracle(args: argparse.Namespace) -> int:
    """Exact values by exhaustive enumeration."""
    group = parse_group_spec(args.spec)
    n = group.order
    if args.oracle_command == "exact-single":
        x = _check_element(n, args.element, "--element")
        document = _exact_value(args.spec, "single_mean", {"element": x}, exact_single_mean(group, x))
    elif args.oracle_command == "exact-pair":
        x = _check_element(n, args.element, "--element")
        y = _check_element(n, args.pair_element, "--pair-element")
        value = exact_pair_mean(group, x, y, args.axis)
        document = _exact_value(args.spec, "pair_mean", {"element": x, "pair_element": y, "axis": args.axis}, value)
    else:
        k = _require_positive(args.k, "--k")
        m = _require_positive(args.m, "--m") if args.m is not None else k
        if args.oracle_command == "exact-p":
            value = exact_p(group, k, m, args.variant)
            document = _exact_value(args.spec, "p", {"k": k, "m": m, "variant": args.variant}, value)
        else:
            distribution = exact_miss_distribution(group, k, m, args.variant)
            document = ExactDistributionDocument(
                spec=args.spec,
                k=k,
                m=m,
                variant=args.variant,
                total=str(distribution.total),
                counts={str(v): str(c) for v, c in sorted(distribution.counts.items())},
                mean=RationalModel.from_fraction(distribution.mean()),
                success_probability=RationalModel.from_fraction(distribution.probability(0)),
            )
    _emit_document(document, args.output)
    return 0


def _add_spec(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", required=True,
                        help="Group spec, e.g. cyclic:8, dihedral:4, symmetric:3, product:(cyclic:2),(cyclic:2), table:PATH")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", "-o", help="Write to this file instead of standard output")


def _add_run_flags(parser: argparse.ArgumentParser, trials_default: Optional[int]) -> None:
    parser.add_argument("--trials", type=int, default=trials_default, help="Trials per k")
    parser.add_argument("--seed", type=int, help="64-bit master seed (drawn from system entropy if omitted)")
    parser.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.BOTH.value,
                        help="Success event: both (AB ∪ BA = G), ab-only (AB = G), aa (AA = G)")
    parser.add_argument("--workers", type=int, default=None,
                        help=f"Worker threads (default: {settings.montecarlo.workers}); never changes results")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Random subsets decomposing a finite group: theta, Suen bounds, sweeps, exact oracles",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py group --spec dihedral:4
  python main.py theta --spec symmetric:4 --precise
  python main.py suen --spec symmetric:3 --k 4 --element 1
  python main.py sweep --spec cyclic:1024 --kmin 40 --kmax 140 --step 4 --trials 400 --seed 7
  python main.py oracle exact-p --spec cyclic:2 --k 2
        """
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parser.add_argument("--log-file", help="Also log to this file")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    group_parser = subparsers.add_parser("group", help="Validate a group and summarize its classes")
    _add_spec(group_parser)
    _add_output(group_parser)

    catalog_parser = subparsers.add_parser("catalog", help="List the named group catalog")
    _add_output(catalog_parser)

    theta_parser = subparsers.add_parser("theta", help="Solve for theta and evaluate its bounds")
    _add_spec(theta_parser)
    theta_parser.add_argument("--residual-tol", type=float, help="Stop when |f| is below this")
    theta_parser.add_argument("--bracket-tol", type=float, help="Stop when the bracket is narrower than this")
    theta_parser.add_argument("--max-iterations", type=int, help="Bisection iteration cap")
    theta_parser.add_argument("--precise", action="store_true", help="Also run the high-precision solver")
    theta_parser.add_argument("--digits", type=int, default=None, help="Digits for --precise")
    _add_output(theta_parser)

    suen_parser = subparsers.add_parser("suen", help="Suen bounds on Pr[x not in AB ∪ BA]")
    _add_spec(suen_parser)
    suen_parser.add_argument("--k", type=int, required=True, help="Draws per subset")
    suen_parser.add_argument("--element", type=int, required=True, help="Element index x")
    suen_parser.add_argument("--pair-element", type=int, help="Second element y for the joint bound")
    _add_output(suen_parser)

    sweep_parser = subparsers.add_parser("sweep", help="Estimate P(G, k) over a range of k")
    _add_spec(sweep_parser)
    sweep_parser.add_argument("--kmin", type=int, required=True)
    sweep_parser.add_argument("--kmax", type=int, required=True)
    sweep_parser.add_argument("--step", type=int, default=1)
    _add_run_flags(sweep_parser, settings.montecarlo.default_trials)
    sweep_parser.add_argument("--m-ratio", type=float, default=1.0, help="B gets round(m_ratio * k) draws")
    sweep_parser.add_argument("--adaptive", action="store_true", help="Bisect on k instead of a full sweep")
    sweep_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep_parser.add_argument("--save", action="store_true", help="Also save CSV and metadata under the output dir")
    _add_output(sweep_parser)

    window_parser = subparsers.add_parser("window", help="Step-1 sweep across the transition window")
    _add_spec(window_parser)
    _add_run_flags(window_parser, None)
    window_parser.add_argument("--m-ratio", type=float, default=1.0)
    window_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    window_parser.add_argument("--save", action="store_true")
    _add_output(window_parser)

    miss_parser = subparsers.add_parser("miss-stats", help="Simulated distribution of |G minus (AB ∪ BA)|")
    _add_spec(miss_parser)
    miss_parser.add_argument("--k", type=int, required=True)
    miss_parser.add_argument("--m", type=int, help="Draws for B (default: k)")
    _add_run_flags(miss_parser, settings.montecarlo.default_trials)
    _add_output(miss_parser)

    oracle_parser = subparsers.add_parser("oracle", help="Exact values by enumeration")
    oracle_sub = oracle_parser.add_subparsers(dest="oracle_command", required=True)
    single = oracle_sub.add_parser("exact-single", help="E[I_v(x)] by counting pairs")
    _add_spec(single)
    single.add_argument("--element", type=int, required=True)
    _add_output(single)
    pair = oracle_sub.add_parser("exact-pair", help="E[I_v(x) I_u(y)] by counting triples")
    _add_spec(pair)
    pair.add_argument("--element", type=int, required=True)
    pair.add_argument("--pair-element", type=int, required=True)
    pair.add_argument("--axis", choices=["row", "column"], default="row")
    _add_output(pair)
    for name, help_text in (("exact-p", "P(G, k) over all draw tuples"),
                            ("miss-distribution", "Distribution of |S| over all draw tuples")):
        tuples = oracle_sub.add_parser(name, help=help_text)
        _add_spec(tuples)
        tuples.add_argument("--k", type=int, required=True)
        tuples.add_argument("--m", type=int)
        tuples.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.BOTH.value)
        _add_output(tuples)

    return parser


COMMANDS = {
    "group": cmd_group,
    "catalog": cmd_catalog,
    "theta": cmd_theta,
    "suen": cmd_suen,
    "sweep": cmd_sweep,
    "window": cmd_window,
    "miss-stats": cmd_miss_stats,
    "oracle": cmd_oracle,
}


def main(argv: Optional[list] = None) -> int:
    """Parse arguments, run one command and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.log_file)

    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    try:
        return COMMANDS[args.command](args)
    except GroupDecompositionError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        logger.debug("Invalid input", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return InputError.exit_code
    except ArithmeticError as e:
        logger.debug("Numeric failure", exc_info=True)
        print(f"error: numeric failure: {e}", file=sys.stderr)
        return DomainError.exit_code


if __name__ == "__main__":
    sys.exit(main())
