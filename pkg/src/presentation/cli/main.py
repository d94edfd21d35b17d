"""golaybeam command-line entry point.

Angles on the command line and in files are degrees; they are converted to
radians here, before anything reaches the domain layer.
"""
import argparse
import math
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from dotenv import find_dotenv, load_dotenv

from src.application.use_cases.sweep_pattern import SweepRequest
from src.di.container import DIContainer, get_container
from src.domain.entities.pattern import AngleGrid, Quantity, Scale
from src.domain.entities.sequence import Alphabet, SequencePair
from src.domain.exceptions import (
    InvalidInputError,
    ResourceLimitError,
    VerificationError,
)
from src.domain.services.golay_array import Layout
from src.domain.services.golay_core import DEFAULT_TOLERANCE
from src.domain.services.ris_model import db
from src.domain.services.sweep_engine import make_grid
from src.infrastructure.logging import get_logger, reconfigure_loggers

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_UNEXPECTED = 4

Handler = Callable[[argparse.Namespace, DIContainer], int]


def parse_grid(spec: str) -> AngleGrid:
    """Parse ``az0,az1,naz,el0,el1,nel`` (degrees, inclusive) into a radian grid."""
    parts = [p.strip() for p in spec.split(",")]
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            f"grid must be az0,az1,naz,el0,el1,nel; got {spec!r}"
        )
    try:
        az0, az1, el0, el1 = (float(parts[i]) for i in (0, 1, 3, 4))
        n_az, n_el = int(parts[2]), int(parts[5])
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad number in grid {spec!r}") from e
    try:
        return make_grid(
            math.radians(az0), math.radians(az1), n_az, math.radians(el0), math.radians(el1), n_el
        )
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _format_pair(pair: SequencePair, alphabet_size: int) -> str:
    def indices(phases: Sequence[float]) -> str:
        steps = (round(p * alphabet_size / (2 * math.pi)) % alphabet_size for p in phases)
        return "".join(str(s) for s in steps)

    return f"{indices(pair.u.phases)} {indices(pair.w.phases)}"


def cmd_construct(args: argparse.Namespace, container: DIContainer) -> int:
    result = container.construct_array_pair_use_case().execute(
        l1=args.l1,
        l2=args.l2,
        alphabet=args.alphabet,
        layout=args.layout,
        alphabet2=args.alphabet2,
        out_path=args.out,
    )
    n1, n2 = result.pair.dims
    print(f"verdict: {_verdict(result.report.is_complementary)}")
    print(f"dims: {n1}x{n2}")
    print(f"max_deviation: {result.report.max_deviation:.3e}")
    if result.path is not None:
        print(f"written: {result.path}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, container: DIContainer) -> int:
    result = container.verify_array_pair_use_case().execute(args.pair, args.tol)
    n1, n2 = result.dims
    report = result.report
    print(f"verdict: {_verdict(report.is_complementary)}")
    print(f"dims: {n1}x{n2}")
    print(f"max_off_peak: {report.max_off_peak:.3e}")
    print(f"peak_deviation: {report.peak_deviation:.3e}")
    print(f"tolerance: {report.tolerance:.3e}")
    if not report:
        raise VerificationError(
            f"{args.pair} is not a complementary pair at tol {args.tol:g} "
            f"(max deviation {report.max_deviation:.3e})"
        )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, container: DIContainer) -> int:
    figure = args.png or args.svg
    request = SweepRequest(
        quantity=Quantity(args.quantity),
        scenario_path=args.scenario,
        grid=args.grid,
        scale=Scale(args.scale),
        csv_path=args.csv,
        json_path=args.json,
        figure_path=figure,
        workers=args.threads,
    )
    result = container.sweep_pattern_use_case().execute(request)
    stats = result.stats
    n_el, n_az = result.pattern.grid.shape
    print(f"quantity: {result.pattern.quantity.value}")
    print(f"config: {result.pattern.config_id}")
    print(f"grid: {n_az} azimuths x {n_el} elevations")
    print(f"min_db: {db(stats.minimum):.6f}")
    print(f"max_db: {db(stats.maximum):.6f}")
    print(f"relative_ripple: {stats.relative_ripple:.3e}")
    print(f"flat_level_db: {db(result.flat_level):.6f}")
    for label, path in (("csv", args.csv), ("json", args.json), ("figure", figure)):
        if path is not None:
            print(f"written_{label}: {path}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace, container: DIContainer) -> int:
    pairs = container.search_golay_pairs_use_case().execute(
        length=args.length,
        alphabet_size=args.alphabet_size,
        out_path=args.out,
        budget=args.budget,
    )
    print(f"pairs: {len(pairs)}")
    for pair in pairs:
        print(_format_pair(pair, args.alphabet_size))
    return EXIT_OK


def cmd_info(args: argparse.Namespace, container: DIContainer) -> int:
    summary = container.describe_scenario_use_case().execute(args.scenario)
    scenario = summary.scenario
    geom = scenario.geometry
    az, el = scenario.aoa.degrees
    for alphabet, lengths in summary.catalog.items():
        print(f"catalog_{alphabet.value}: {' '.join(str(n) for n in lengths)}")
    print(
        f"geometry: {geom.n_y}x{geom.n_z} elements, spacing {geom.delta_y:g} m x "
        f"{geom.delta_z:g} m, wavelength {geom.wavelength:g} m"
    )
    n1, n2 = scenario.pair.dims
    print(f"config: {scenario.config_id} ({n1}x{n2} per polarization)")
    print(f"complementary: {_verdict(summary.report.is_complementary)}")
    print(f"aoa_deg: {az:g},{el:g}")
    print(f"flat_level_db: {summary.flat_level_db:.6f}")
    power = summary.boresight_received_power
    print(f"boresight_received_power_w: {power:.6e}")
    print(f"boresight_received_power_dbw: {db(power):.6f}")
    print(f"boresight_total_pattern_db: {summary.boresight_total_pattern_db:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golaybeam",
        description="Broad-beam reflecting-surface configurations from Golay complementary pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    alphabets = [a.value for a in (Alphabet.BINARY, Alphabet.QUATERNARY)]

    construct = sub.add_parser("construct", help="build and certify an array pair")
    construct.add_argument("--l1", type=int, required=True, help="first seed length")
    construct.add_argument("--l2", type=int, required=True, help="second seed length")
    construct.add_argument("--alphabet", choices=alphabets, default=Alphabet.BINARY.value)
    construct.add_argument(
        "--alphabet2", choices=alphabets, default=None, help="second seed alphabet"
    )
    construct.add_argument(
        "--layout", choices=[v.value for v in Layout], default=Layout.STACKED.value
    )
    construct.add_argument("--out", type=Path, default=None, help="array pair JSON")
    construct.set_defaults(handler=cmd_construct)

    verify = sub.add_parser("verify", help="check a pair file for complementarity")
    verify.add_argument("--pair", type=Path, required=True)
    verify.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    verify.set_defaults(handler=cmd_verify)

    sweep = sub.add_parser("sweep", help="evaluate a pattern over an angular grid")
    sweep.add_argument("--scenario", type=Path, default=None, help="scenario JSON")
    sweep.add_argument(
        "--quantity", choices=[q.value for q in Quantity], default=Quantity.TOTAL_AF.value
    )
    sweep.add_argument(
        "--grid", type=parse_grid, default=None, help="az0,az1,naz,el0,el1,nel in degrees"
    )
    sweep.add_argument("--scale", choices=[s.value for s in Scale], default=Scale.DB.value)
    sweep.add_argument("--csv", type=Path, default=None)
    sweep.add_argument("--json", type=Path, default=None)
    figure = sweep.add_mutually_exclusive_group()
    figure.add_argument("--png", type=Path, default=None)
    figure.add_argument("--svg", type=Path, default=None)
    sweep.add_argument(
        "--threads", type=positive_int, default=None, help="overrides GOLAYBEAM_THREADS"
    )
    sweep.set_defaults(handler=cmd_sweep)

    search = sub.add_parser("search", help="enumerate all Golay pairs of one length")
    search.add_argument("--length", type=int, required=True)
    search.add_argument("--alphabet-size", type=int, choices=[2, 4], default=2)
    search.add_argument("--out", type=Path, default=None)
    search.add_argument(
        "--budget", type=positive_int, default=None, help="overrides GOLAYBEAM_SEARCH_BUDGET"
    )
    search.set_defaults(handler=cmd_search)

    info = sub.add_parser("info", help="summarize the catalog and a scenario")
    info.add_argument("--scenario", type=Path, default=None)
    info.set_defaults(handler=cmd_info)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    load_dotenv(find_dotenv(usecwd=True))
    reconfigure_loggers()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID_INPUT

    handler: Handler = args.handler
    try:
        return handler(args, get_container())
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        print(f"unexpected error: {e}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
