"""
Batch verification and export commands.

Reports go to stdout (or --output); the rich summary and all logging go to
stderr. Exit codes: 0 pass, 1 verification failure, 2 usage, 3 precondition.
"""

import functools
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from rich.markup import escape

from config.config import Config, OutputFormat
from config.loader import load_config
from g2module.chevalley import dump_matrices_json
from g2module.verify import module_suite
from geomcrystal.checks import (
    VERMA_PAIRS,
    VermaVariant,
    axioms_suite,
    lemma_suite,
    sigma_suite,
    theorem_suite,
    verma_suite,
)
from geomcrystal.formulas import get_formula
from ratfunc.serialize import rf_to_json
from tropical.graph import explore_crystal_graph
from tropical.ud_crystal import trop_suite, tropical_form, udcrystal_suite
from ui.console import get_console, render_counterexamples, render_suite
from utils.errors import (
    ConfigError,
    CrystalError,
    PositivityError,
    StructuralError,
    UnknownFormulaError,
)
from verification.identity import IdentityChecker
from verification.report import ReportMode, SuiteReport

console = get_console()
logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILED = 1
EXIT_PRECONDITION = 3

PRECONDITION_ERRORS = (PositivityError, UnknownFormulaError, ConfigError, StructuralError)

SUITES = ("module", "lemma51", "sigma", "theorem", "axioms", "verma", "trop", "udcrystal", "all")


def config_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    """Flags shared by every command; unset flags leave the config files in charge."""
    options = [
        click.option("--seed", type=int, default=None, help="Sampling seed"),
        click.option("--samples", type=click.IntRange(min=1), default=None, help="Points per sampled identity; see --sigma-samples and --ud-samples"),
        click.option("--coeff-bound", type=click.IntRange(min=1), default=None, help="Largest sampled numerator/denominator"),
        click.option("--term-budget", type=click.IntRange(min=1), default=None, help="Expansion budget for symbolic checks"),
        click.option("--workers", type=click.IntRange(min=1), default=None, help="Sampling pool size"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _load(ctx: click.Context, **overrides: Any) -> Config:
    try:
        config = load_config(cwd=ctx.obj.get("cwd"), overrides=overrides)
    except ConfigError as e:
        console.print(f"[error]Configuration Error: {escape(str(e))}[/error]")
        ctx.exit(EXIT_PRECONDITION)

    if config.debug or ctx.obj.get("debug"):
        logging.getLogger().setLevel(logging.DEBUG)

    for warning in config.validate():
        logger.warning(warning)

    return config


def _precondition(ctx: click.Context, error: CrystalError) -> None:
    logger.debug(f"Precondition failed: {error.to_dict()}")
    console.print(f"[error]{escape(str(error))}[/error]")
    ctx.exit(EXIT_PRECONDITION)


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


def _parse_pair(ctx: click.Context, param: click.Parameter, value: str | None) -> tuple[int, int] | None:
    if value is None:
        return None
    try:
        i, j = (int(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter("expected two indices such as 2,1") from None
    if (i, j) not in VERMA_PAIRS:
        raise click.BadParameter(f"pair must be one of {', '.join(f'{a},{b}' for a, b in VERMA_PAIRS)}")
    return i, j


def _parse_point(ctx: click.Context, param: click.Parameter, value: str) -> tuple[int, ...]:
    try:
        point = tuple(int(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter("expected six comma-separated integers") from None
    if len(point) != 6:
        raise click.BadParameter(f"expected six coordinates, got {len(point)}")
    return point


def run_suite(
    name: str,
    config: Config,
    checker: IdentityChecker,
    pair: tuple[int, int] | None = None,
    variant: VermaVariant | None = None,
) -> SuiteReport:
    if name == "all":
        combined = SuiteReport(suite="all")
        for part in SUITES[:-1]:
            combined.extend(run_suite(part, config, checker))
        return combined

    runners: dict[str, Callable[[], SuiteReport]] = {
        "module": functools.partial(module_suite, config.max_counterexamples),
        "lemma51": functools.partial(lemma_suite, checker),
        "sigma": functools.partial(sigma_suite, checker, config.sigma_samples),
        "theorem": functools.partial(theorem_suite, checker),
        "axioms": functools.partial(axioms_suite, checker),
        "verma": functools.partial(
            verma_suite,
            checker,
            (pair,) if pair else VERMA_PAIRS,
            (variant,) if variant else tuple(VermaVariant),
        ),
        "trop": functools.partial(trop_suite, checker, None, config.trop_bound, config.trop_n_bound),
        "udcrystal": functools.partial(
            udcrystal_suite, checker, config.ud_samples, config.ud_bound, config.trop_n_bound
        ),
    }
    logger.info(f"Running suite {name}")
    return runners[name]()


@click.command(name="verify", help="Run a certification suite")
@click.argument("suite", type=click.Choice(SUITES))
@config_options
@click.option(
    "--format",
    "output_format",
    type=click.Choice([OutputFormat.JSON.value, OutputFormat.TEXT.value]),
    default=None,
    help="json: report on stdout; text: summary table only",
)
@click.option(
    "--sigma-samples",
    type=click.IntRange(min=1),
    default=None,
    help="Points for the sigma suite (config: sigma_samples)",
)
@click.option(
    "--ud-samples",
    type=click.IntRange(min=1),
    default=None,
    help="Integer points for the udcrystal suite (config: ud_samples)",
)
@click.option("--pair", callback=_parse_pair, default=None, help="Verma pair, e.g. 2,1")
@click.option("--variant", type=click.Choice([v.value for v in VermaVariant]), default=None)
@click.option("--symbolic/--sampled", "symbolic", default=None, help="Force the certification mode")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    seed: int | None,
    samples: int | None,
    coeff_bound: int | None,
    term_budget: int | None,
    workers: int | None,
    output_format: str | None,
    sigma_samples: int | None,
    ud_samples: int | None,
    pair: tuple[int, int] | None,
    variant: str | None,
    symbolic: bool | None,
    output: Path | None,
):
    config = _load(
        ctx,
        seed=seed,
        samples=samples,
        coeff_bound=coeff_bound,
        term_budget=term_budget,
        workers=workers,
        output_format=output_format,
        sigma_samples=sigma_samples,
        ud_samples=ud_samples,
    )
    force_mode = None if symbolic is None else (ReportMode.SYMBOLIC if symbolic else ReportMode.SAMPLED)
    checker = IdentityChecker.from_config(config, force_mode=force_mode)

    try:
        report = run_suite(suite, config, checker, pair, VermaVariant(variant) if variant else None)
    except PRECONDITION_ERRORS as e:
        _precondition(ctx, e)

    report.suite = suite
    report.config = {**config.report_header(), "force_mode": force_mode.value if force_mode else None}

    if output is not None:
        _emit(report.to_json(), output)
    if config.output_format is OutputFormat.TEXT or output is not None:
        render_suite(report)
        for failed in report.reports:
            if not failed.acceptable:
                render_counterexamples(failed)
    if config.output_format is not OutputFormat.TEXT and output is None:
        _emit(report.to_json(), None)

    ctx.exit(EXIT_PASS if report.passed else EXIT_FAILED)


@click.command(name="tropicalize", help="Print the piecewise-linear form of a formula as JSON")
@click.argument("target")
@click.pass_context
def tropicalize_command(ctx: click.Context, target: str):
    _load(ctx)
    try:
        pl_map = tropical_form(target)
    except PRECONDITION_ERRORS as e:
        _precondition(ctx, e)
    _emit(pl_map.to_json(), None)


@click.command(name="explore", help="Export a fragment of the UD crystal graph")
@click.option("--radius", "-r", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--seed-point", callback=_parse_point, default="0,0,0,0,0,0", show_default=True)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([OutputFormat.DOT.value, OutputFormat.JSON.value]),
    default=OutputFormat.DOT.value,
    show_default=True,
)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def explore(
    ctx: click.Context,
    radius: int,
    seed_point: tuple[int, ...],
    output_format: str,
    workers: int | None,
    output: Path | None,
):
    config = _load(ctx, workers=workers)
    graph = explore_crystal_graph(seed_point, radius, config.workers)

    bad = graph.inconsistent_edges()
    if bad:
        logger.warning(f"{len(bad)} edges do not raise eps by one")

    text = graph.to_dot() if output_format == OutputFormat.DOT.value else graph.to_json()
    _emit(text, output)


@click.command(name="dump-module", help="Write the Chevalley generator matrices as JSON")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def dump_module(ctx: click.Context, output: Path | None):
    _load(ctx)
    _emit(dump_matrices_json(), output)


@click.command(name="dump-formula", help="Write a registered formula as expression JSON or text")
@click.argument("name")
@click.option(
    "--format",
    "output_format",
    type=click.Choice([OutputFormat.JSON.value, OutputFormat.TEXT.value]),
    default=OutputFormat.JSON.value,
    show_default=True,
)
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def dump_formula(ctx: click.Context, name: str, output_format: str, output: Path | None):
    _load(ctx)
    try:
        formula = get_formula(name)
    except UnknownFormulaError as e:
        _precondition(ctx, e)

    if output_format == OutputFormat.JSON.value:
        text = rf_to_json(formula.body, indent=2) + "\n"
    else:
        text = f"{formula.name} = {formula.body.to_sympy()}\n"
    _emit(text, output)


COMMANDS = [verify, tropicalize_command, explore, dump_module, dump_formula]
