import argparse
import logging
import math
from collections.abc import Callable
from pathlib import Path

from ..config import OutputFormat
from ..dielectric import DielectricModel, Drude, Plasma, Tabulated
from ..engine import PressureResult, casimir_pressure
from ..errors import CasimirError, ScenarioError
from ..optical import (
    MIN_POINTS,
    TableAxis,
    drude_loss_table,
    kramers_kronig_to_imaginary_axis,
    load_table_file,
    log_grid,
    write_table,
)
from ..physics import MPA, NM, GapConfig
from ..thermodynamics import entropy_scan
from .commands import RunContext, UsageError, command_map
from .fixtures import TEMPERATURE_COLUMN, load_reference_table
from .output import Column, ColumnKind, Report, write_report

logger = logging.getLogger(__name__)

MODEL_NAMES = ("drude", "plasma", "ideal", "mim", "tabulated", "vacuum")


def float_list(text: str) -> list[float]:
    """
    Comma-separated numbers, e.g. "160,200,250".
    """
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma-separated list of numbers") from None
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def name_list(choices: tuple[str, ...]) -> Callable[[str], list[str]]:
    def parse(text: str) -> list[str]:
        names = [item.strip() for item in text.split(",") if item.strip()]
        if not names:
            raise argparse.ArgumentTypeError("list must not be empty")
        if unknown := [name for name in names if choices and name not in choices]:
            raise argparse.ArgumentTypeError(f"unknown name(s) {', '.join(unknown)}; choose from {', '.join(choices)}")
        return names

    return parse


def describe_model(model: DielectricModel) -> str:
    match model:
        case Drude():
            return f"drude omega_p={model.omega_p:.4e} rad/s nu={model.nu:.4e} rad/s"
        case Plasma():
            return f"plasma omega_p={model.omega_p:.4e} rad/s"
        case Tabulated():
            return f"tabulated {model.table.provenance} ({model.table.axis.value}, extrapolation={model.extrapolation.value})"
        case _:
            return model.kind


def run_pressure(
    ctx: RunContext, model: DielectricModel, separation_nm: float, temperature: float, per_term_log: bool = False
) -> PressureResult:
    label = f"scenario a={separation_nm:g} nm, T={temperature:g} K, model={model.kind}"
    try:
        gap = GapConfig.from_nm(separation_nm, temperature)
        return casimir_pressure(gap, model, ctx.manifest.zero_mode, ctx.manifest.numerics, per_term_log)
    except CasimirError as e:
        raise ScenarioError(f"{label} failed: {e}") from e


def _run_comments(ctx: RunContext, model: DielectricModel) -> tuple[str, ...]:
    return (f"model: {describe_model(model)}", f"zero-mode policy: {ctx.manifest.zero_mode.value}")


PRESSURE_COLUMNS = (
    Column("separation_nm"),
    Column("temperature_K"),
    Column("pressure_mPa", ColumnKind.PRESSURE),
    Column("highest_frequency_rad_s"),
    Column("n_terms", ColumnKind.INTEGER),
)

TERM_LOG_COLUMNS = (
    Column("separation_nm"),
    Column("temperature_K"),
    Column("m", ColumnKind.INTEGER),
    Column("zeta_rad_s"),
    Column("term"),
)


@command_map.command(
    "pressure-table",
    help="pressure, highest Matsubara frequency and term count per (separation, temperature)",
)
def pressure_table(ctx: RunContext) -> Report:
    manifest = ctx.manifest
    model = ctx.model()
    log_terms = manifest.per_term_log is not None
    rows = []
    term_rows = []
    for temperature in manifest.temperatures_K:
        for separation_nm in manifest.separations_nm:
            result = run_pressure(ctx, model, separation_nm, temperature, log_terms)
            rows.append((separation_nm, temperature, result.pressure, result.highest_frequency, result.n_terms))
            for record in result.per_term_log or ():
                term_rows.append((separation_nm, temperature, record.m, record.zeta, record.term))
    if log_terms:
        with open(manifest.per_term_log, "w", encoding="utf-8", newline="") as stream:
            write_report(
                Report(columns=TERM_LOG_COLUMNS, rows=tuple(term_rows), comments=("per-term Matsubara contributions",)),
                OutputFormat.CSV,
                stream,
            )
    return Report(columns=PRESSURE_COLUMNS, rows=tuple(rows), comments=_run_comments(ctx, model))


def relative_difference(computed_mpa: float, reference_mpa: float) -> float:
    """
    (|computed| - |reference|) / |reference|; fixtures may hold magnitudes or signed values.
    """
    if reference_mpa == 0.0:
        return 0.0 if computed_mpa == 0.0 else math.inf
    return (abs(computed_mpa) - abs(reference_mpa)) / abs(reference_mpa)


def _compare_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--models",
        type=name_list(MODEL_NAMES),
        help="comma-separated models to compute (default: the material's model)",
    )
    parser.add_argument(
        "--columns",
        type=name_list(()),
        help="fixture columns to compare against (default: every *_mPa column)",
    )


@command_map.command(
    "compare-models",
    help="compare computed pressures with a reference fixture table",
    arguments=[_compare_arguments],
)
def compare_models(ctx: RunContext) -> Report:
    manifest = ctx.manifest
    if manifest.fixture is None:
        raise UsageError("compare-models needs --fixture")
    fixture = load_reference_table(manifest.fixture)
    columns = ctx.args.columns or fixture.pressure_columns
    if not columns:
        raise UsageError(f"{fixture.source} has no *_mPa columns to compare against")
    if missing := [name for name in columns if name not in fixture.columns]:
        raise UsageError(f"{fixture.source} has no column(s) {', '.join(missing)}")
    references = {name: fixture.column(name) for name in columns}

    if TEMPERATURE_COLUMN in fixture.columns:
        temperatures = fixture.column(TEMPERATURE_COLUMN)
    else:
        temperature = fixture.temperature or manifest.temperatures_K[0]
        temperatures = [temperature] * len(fixture.rows)

    names = ctx.args.models or [ctx.material.model]
    models = {name: ctx.model(name) for name in names}
    rows = []
    for index, separation_nm in enumerate(fixture.column("separation_nm")):
        for name, model in models.items():
            pressure = run_pressure(ctx, model, separation_nm, temperatures[index]).pressure
            for column in columns:
                reference = references[column][index]
                rows.append(
                    (separation_nm, name, column, reference, pressure, relative_difference(pressure / MPA, reference))
                )
    return Report(
        columns=(
            Column("separation_nm"),
            Column("model", ColumnKind.TEXT),
            Column("fixture_column", ColumnKind.TEXT),
            Column("fixture_mPa"),
            Column("computed_mPa", ColumnKind.PRESSURE),
            Column("relative_difference"),
        ),
        rows=tuple(rows),
        comments=(f"fixture: {fixture.source}", f"zero-mode policy: {manifest.zero_mode.value}"),
    )


@command_map.command(
    "temperature-sweep",
    help="pressure against temperature, with the ratio to the first temperature",
)
def temperature_sweep(ctx: RunContext) -> Report:
    manifest = ctx.manifest
    if len(manifest.temperatures_K) < 2:
        raise UsageError("temperature-sweep needs at least two temperatures")
    model = ctx.model()
    pressures = {
        (temperature, separation_nm): run_pressure(ctx, model, separation_nm, temperature).pressure
        for temperature in manifest.temperatures_K
        for separation_nm in manifest.separations_nm
    }
    reference_T = manifest.temperatures_K[0]
    rows = []
    for temperature in manifest.temperatures_K:
        for separation_nm in manifest.separations_nm:
            pressure = pressures[temperature, separation_nm]
            reference = pressures[reference_T, separation_nm]
            ratio = pressure / reference if reference != 0.0 else math.nan
            rows.append((temperature, separation_nm, pressure, ratio))
    return Report(
        columns=(
            Column("temperature_K"),
            Column("separation_nm"),
            Column("pressure_mPa", ColumnKind.PRESSURE),
            Column("ratio_to_first_T"),
        ),
        rows=tuple(rows),
        comments=(*_run_comments(ctx, model), f"reference temperature: {reference_T:g} K"),
    )


@command_map.command(
    "entropy-scan",
    help="Casimir entropy per unit area over the temperature grid",
)
def entropy_scan_command(ctx: RunContext) -> Report:
    manifest = ctx.manifest
    model = ctx.model()
    rows = []
    for separation_nm in manifest.separations_nm:
        try:
            scan = entropy_scan(
                separation_nm * NM,
                list(manifest.temperatures_K),
                model,
                manifest.zero_mode,
                manifest.numerics,
                manifest.dT,
            )
        except CasimirError as e:
            raise ScenarioError(f"entropy scan a={separation_nm:g} nm, model={model.kind} failed: {e}") from e
        rows.extend((separation_nm, T, S) for T, S in zip(scan.temperatures, scan.entropy))
    return Report(
        columns=(Column("separation_nm"), Column("T_K"), Column("S_J_per_K_m2")),
        rows=tuple(rows),
        comments=_run_comments(ctx, model),
    )


def _kk_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", type=Path, help="real-axis loss table: omega (rad/s), eps'' per line")
    parser.add_argument("--zeta-grid", type=float_list, help="comma-separated imaginary frequencies (rad/s)")
    parser.add_argument(
        "--points-per-decade",
        type=int,
        default=10,
        help="log grid density over the table range when --zeta-grid is not given (default: 10)",
    )
    parser.add_argument(
        "--drude-reference",
        action="store_true",
        help="add the analytic Drude eps(i zeta) of the material parameters and the relative difference",
    )


@command_map.command(
    "kk-transform",
    help="Kramers-Kronig transform of a loss table onto the imaginary axis",
    arguments=[_kk_arguments],
)
def kk_transform(ctx: RunContext) -> Report:
    args = ctx.args
    table = load_table_file(args.input, TableAxis.REAL_LOSS)
    if args.zeta_grid is not None:
        zetas = args.zeta_grid
    else:
        if args.points_per_decade <= 0:
            raise UsageError("--points-per-decade must be positive")
        zetas = [float(z) for z in log_grid(table.lower, table.upper, args.points_per_decade)]

    columns = [Column("zeta_rad_s"), Column("eps_imaginary")]
    reference: Drude | None = None
    if args.drude_reference:
        reference = Drude(omega_p=ctx.material.omega_p_rad_s, nu=ctx.material.nu_rad_s)
        columns += [Column("eps_drude"), Column("relative_difference")]
    rows = []
    for zeta in zetas:
        eps = kramers_kronig_to_imaginary_axis(table, zeta)
        if reference is None:
            rows.append((zeta, eps))
        else:
            exact = reference.permittivity(zeta)
            rows.append((zeta, eps, exact, (eps - exact) / exact))
    return Report(columns=tuple(columns), rows=tuple(rows), comments=(f"input: {table.provenance}",))


def _drude_table_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--omega-min", type=float, default=1e9, help="lowest frequency in rad/s (default: 1e9)")
    parser.add_argument("--omega-max", type=float, default=1e19, help="highest frequency in rad/s (default: 1e19)")
    parser.add_argument("--points", type=int, default=400, help="number of log-spaced points (default: 400)")


@command_map.command(
    "drude-table",
    help="write the Drude loss eps''(omega) of the material parameters as a real_loss table",
    arguments=[_drude_table_arguments],
)
def drude_table(ctx: RunContext) -> None:
    args = ctx.args
    if not 0.0 < args.omega_min < args.omega_max:
        raise UsageError("need 0 < --omega-min < --omega-max")
    if args.points < MIN_POINTS:
        raise UsageError(f"--points must be at least {MIN_POINTS}")
    table = drude_loss_table(ctx.material.omega_p_rad_s, ctx.material.nu_rad_s, args.omega_min, args.omega_max, args.points)
    with ctx.output_stream() as stream:
        write_table(table, stream)
