import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from ..config import ConfigParser, OutputFormat, RunManifest
from ..dielectric import ZeroModePolicy, validity_warnings_once
from ..errors import CasimirError
from . import handlers  # noqa: F401  registers the subcommands
from .commands import RunContext, UsageError, command_map
from .handlers import MODEL_NAMES, float_list
from .output import write_report

logger = logging.getLogger(__name__)

LOG_LEVELS = ("debug", "info", "warning", "error")

# flag destination -> RunManifest field
MANIFEST_FLAGS = {
    "material": "material",
    "model": "model",
    "omega_p_rad_s": "omega_p_rad_s",
    "nu_rad_s": "nu_rad_s",
    "separations_nm": "separations_nm",
    "temperatures_K": "temperatures_K",
    "zero_mode": "zero_mode",
    "output": "output",
    "format": "format",
    "fixture": "fixture",
    "per_term_log": "per_term_log",
    "dT": "dT",
}

# flag destination -> NumericsSettings field
NUMERICS_FLAGS = {
    "ymax": "y_max",
    "int_tol": "integral_tol",
    "sum_tol": "sum_tol",
    "workers": "workers",
}


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    scenario = common.add_argument_group("scenario")
    scenario.add_argument("--manifest", type=Path, help="YAML run manifest; flags below override its values")
    scenario.add_argument("--material", type=Path, help="YAML material file")
    scenario.add_argument("--model", choices=MODEL_NAMES, help="dielectric model (overrides the material file)")
    scenario.add_argument("--omega-p-rad-s", type=float, help="plasma frequency in rad/s")
    scenario.add_argument("--nu-rad-s", type=float, help="Drude relaxation frequency in rad/s")
    scenario.add_argument("--separations-nm", type=float_list, help="comma-separated plate separations in nm")
    scenario.add_argument("--temperatures-K", type=float_list, help="comma-separated temperatures in K")
    scenario.add_argument(
        "--zero-mode",
        choices=[policy.value for policy in ZeroModePolicy],
        help="zero-frequency prescription (default: the model's own)",
    )
    scenario.add_argument("--dT", type=float, help="temperature step in K for entropy differences")

    numerics = common.add_argument_group("numerics")
    numerics.add_argument("--ymax", type=float, help="upper limit of the y integral (default: 30)")
    numerics.add_argument("--int-tol", type=float, help="relative tolerance of the y integral (default: 1e-12)")
    numerics.add_argument("--sum-tol", type=float, help="relative tolerance of the Matsubara sum (default: 1e-8)")
    numerics.add_argument("--workers", type=int, help="processes evaluating Matsubara terms (default: 1)")

    output = common.add_argument_group("output")
    output.add_argument("--output", type=Path, help="write results here instead of stdout")
    output.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        help="table: 4 significant digits, pressure magnitudes; csv: full precision, signed",
    )
    output.add_argument("--fixture", help="reference CSV path, or the name of a shipped fixture (table1..table4)")
    output.add_argument("--per-term-log", type=Path, help="write every Matsubara term to this CSV")
    output.add_argument("--log-level", choices=LOG_LEVELS, default="warning")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-lifshitz",
        description="Finite-temperature Casimir pressure between parallel plates from the Lifshitz formula.",
    )
    command_map.add_subparsers(parser, parents=[_common_arguments()])
    return parser


def build_manifest(args: argparse.Namespace, config_parser: ConfigParser) -> RunManifest:
    data: dict[str, Any] = config_parser.load_manifest(args.manifest) if args.manifest else {}
    for flag, key in MANIFEST_FLAGS.items():
        if (value := getattr(args, flag)) is not None:
            data[key] = value
    numerics = dict(data.get("numerics") or {})
    for flag, key in NUMERICS_FLAGS.items():
        if (value := getattr(args, flag)) is not None:
            numerics[key] = value
    data["numerics"] = numerics
    return config_parser.validate_manifest(data)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")

    config_parser = ConfigParser()
    ctx = RunContext(args, build_manifest(args, config_parser), config_parser)
    try:
        with validity_warnings_once():
            report = command_map.dispatch(ctx)
        if report is not None:
            with ctx.output_stream() as stream:
                write_report(report, ctx.manifest.format, stream)
    except UsageError as e:
        parser.error(str(e))
    except (CasimirError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
