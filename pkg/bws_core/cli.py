"""``bws`` – batch command line for Wright-Fisher fits and change-point searches.

Results go to standard output (or ``--out``); logs and progress bars go to
standard error. Exit code 1 means at least one item failed and is listed in
the report's ``errors``.
"""

from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Iterator, List, Optional

import typer
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from bws_core.exceptions import BwsError
from bws_core.pipeline import (
    change_points_frame,
    ellipse_frame,
    fit_results_frame,
    run_changepoint,
    run_ellipses,
    run_fit,
    run_gtest,
    run_simulate,
    run_sweep,
    sweep_frame,
)
from bws_core.schemas.config import (
    BootstrapInit,
    ChangepointConfig,
    Containment,
    EllipseConfig,
    FitConfig,
    GTestConfig,
    GTestMode,
    OutputFormat,
    SimulateConfig,
    SweepConfig,
)
from bws_core.storage.files import write_csv, write_json
from bws_core.utils.logger import level_from_name, set_log_level, setup_file_logging

load_dotenv()

app = typer.Typer(
    help="Fit the Wright-Fisher model to frequency time series and test for selection.",
    no_args_is_help=True,
    add_completion=False,
)
analyze_app = typer.Typer(help="Ellipses, G-test and approximation sweeps.", no_args_is_help=True)
app.add_typer(analyze_app, name="analyze")

console = Console(stderr=True)


# ---------------------------------------------------------------------------
# Helpers -------------------------------------------------------------------
# ---------------------------------------------------------------------------

def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise typer.BadParameter(f"expected comma-separated integers, got '{text}'") from exc


def _float_list(text: str) -> List[float]:
    try:
        return [float(v.replace("−", "-")) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise typer.BadParameter(f"expected comma-separated numbers, got '{text}'") from exc


def _table(text: str) -> List[List[int]]:
    """``"9,2,8;7,4,23"`` -> ``[[9, 2, 8], [7, 4, 23]]``."""
    return [_int_list(row) for row in text.split(";") if row.strip()]


def _build(model, **kwargs):
    try:
        return model(**{k: v for k, v in kwargs.items() if v is not None})
    except (ValidationError, BwsError) as exc:
        console.print(f"[red]invalid configuration:[/red] {exc}")
        raise typer.Exit(code=2)


def _finish(errors) -> None:
    if errors:
        console.print(f"[yellow]{len(errors)} item(s) failed[/yellow]")
        raise typer.Exit(code=1)


@contextmanager
def _progress(enabled: bool) -> Iterator[Callable[[str], Optional[Callable[[int, int], None]]]]:
    """Factory of per-item progress callbacks drawing on standard error."""
    if not enabled:
        yield lambda description: None
        return
    bar = Progress(
        TextColumn("{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    )
    with bar:
        def factory(description: str) -> Callable[[int, int], None]:
            task = bar.add_task(description, total=None)

            def update(done: int, total: int) -> None:
                bar.update(task, completed=done, total=total)

            return update

        yield factory


# ---------------------------------------------------------------------------
# Commands ------------------------------------------------------------------
# ---------------------------------------------------------------------------

@app.callback()
def _root(
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also write logs to this file."),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR."),
) -> None:
    if log_level is not None:
        level = level_from_name(log_level)
        if level is None:
            raise typer.BadParameter(f"unknown log level '{log_level}'")
        set_log_level(level)
    if log_file is not None:
        setup_file_logging(log_file, level_from_name(log_level) if log_level else None)


@app.command()
def simulate(
    x0: float = typer.Option(..., "--x0", help="Initial frequency."),
    popsize: float = typer.Option(..., "--popsize", "-N", help="Population size."),
    selstrength: float = typer.Option(0.0, "--selstrength", "-s", help="Selection strength."),
    schedule: Optional[str] = typer.Option(None, "--schedule", help='Piecewise s, e.g. "0:+0.2,100:-0.2".'),
    generations: int = typer.Option(..., "--generations", "-g"),
    generation_time: float = typer.Option(1.0, "--generation-time"),
    start_time: float = typer.Option(0.0, "--start-time"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    out: Optional[Path] = typer.Option(None, "--out"),
) -> None:
    """Simulate one Wright-Fisher trajectory (CSV ``time,frequency``)."""
    config = _build(
        SimulateConfig,
        x0=x0,
        popsize=popsize,
        selstrength=selstrength,
        schedule=schedule,
        generations=generations,
        generation_time=generation_time,
        start_time=start_time,
        seed=seed,
        out=None if out is None else str(out),
    )
    try:
        frame = run_simulate(config)
    except BwsError as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(code=2)
    write_csv(frame, config.out, config.model_dump(mode="json"), float_format="%.10g")


@app.command()
def fit(
    inputs: List[Path] = typer.Argument(..., help="Series CSVs, or count CSVs with --counts."),
    counts: bool = typer.Option(False, "--counts", help="Inputs are year,count_focal,count_other files."),
    bin_widths: str = typer.Option("10,20,40", "--bin-widths", help="Bin widths in years (with --counts)."),
    origin_year: Optional[int] = typer.Option(None, "--origin-year"),
    generation_time: Optional[float] = typer.Option(None, "--generation-time"),
    replicates: Optional[int] = typer.Option(None, "--replicates"),
    bootstrap_init: BootstrapInit = typer.Option(BootstrapInit.OBSERVED_START, "--bootstrap-init"),
    min_tokens: Optional[int] = typer.Option(None, "--min-tokens"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    workers: Optional[int] = typer.Option(None, "--workers"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format"),
) -> None:
    """Fit selection and drift models and bootstrap the drift p-value."""
    config = _build(
        FitConfig,
        inputs=[str(p) for p in inputs],
        counts=counts,
        bin_widths=_int_list(bin_widths),
        origin_year=origin_year,
        generation_time=generation_time,
        replicates=replicates,
        bootstrap_init=bootstrap_init,
        min_tokens=min_tokens,
        seed=seed,
        workers=workers,
        out=None if out is None else str(out),
        format=fmt,
    )
    with _progress(config.replicates > 0) as progress:
        report = run_fit(config, progress)
    if config.format == OutputFormat.CSV:
        write_csv(fit_results_frame(report.results), config.out, report.config)
    else:
        write_json(report, config.out)
    _finish(report.errors)


@app.command()
def changepoint(
    inputs: Optional[List[Path]] = typer.Argument(None, help="Series CSVs, or count CSVs with --counts."),
    counts: bool = typer.Option(False, "--counts"),
    manifest: Optional[Path] = typer.Option(None, "--manifest", help="Word-set manifest (YAML)."),
    word_set: Optional[str] = typer.Option(None, "--word-set"),
    bin_width: int = typer.Option(5, "--bin-width", "--bin-widths"),
    origin_year: Optional[int] = typer.Option(None, "--origin-year"),
    generation_time: Optional[float] = typer.Option(None, "--generation-time"),
    replicates: Optional[int] = typer.Option(None, "--replicates"),
    p_threshold: float = typer.Option(0.05, "--p-threshold"),
    max_depth: int = typer.Option(3, "--max-depth"),
    equalize: bool = typer.Option(False, "--equalize", help="Downsample every bin to the smallest token count."),
    token_weighted: bool = typer.Option(False, "--token-weighted"),
    min_tokens: Optional[int] = typer.Option(None, "--min-tokens"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    workers: Optional[int] = typer.Option(None, "--workers"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format"),
) -> None:
    """Detect change points in (N, s) by recursive bootstrap-tested splits."""
    config = _build(
        ChangepointConfig,
        inputs=[str(p) for p in inputs or []],
        counts=counts,
        manifest=None if manifest is None else str(manifest),
        word_set=word_set,
        bin_width=bin_width,
        origin_year=origin_year,
        generation_time=generation_time,
        replicates=replicates,
        p_threshold=p_threshold,
        max_depth=max_depth,
        equalize=equalize,
        token_weighted=token_weighted,
        min_tokens=min_tokens,
        seed=seed,
        workers=workers,
        out=None if out is None else str(out),
        format=fmt,
    )
    with _progress(config.replicates > 0) as progress:
        report = run_changepoint(config, progress("bootstrap"))
    if config.format == OutputFormat.CSV:
        write_csv(change_points_frame(report.change_points), config.out, report.config)
    else:
        write_json(report, config.out)
    _finish(report.errors)


@analyze_app.command("ellipses")
def analyze_ellipses(
    inputs: List[Path] = typer.Argument(..., help="Fit reports (JSON or CSV), one or more binnings."),
    p_threshold: float = typer.Option(0.05, "--p-threshold"),
    containment: Containment = typer.Option(Containment.BBOX, "--containment"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
) -> None:
    """Ellipse per label across binnings, with its region class."""
    config = _build(
        EllipseConfig,
        inputs=[str(p) for p in inputs],
        p_threshold=p_threshold,
        containment=containment,
        out=None if out is None else str(out),
        format=fmt,
    )
    report = run_ellipses(config)
    if config.format == OutputFormat.CSV:
        write_csv(ellipse_frame(report), config.out, report.config)
    else:
        write_json(report, config.out)
    _finish(report.errors)


@analyze_app.command("gtest")
def analyze_gtest(
    counts: str = typer.Option("9,2,8;7,4,23", "--counts", help='Rows separated by ";".'),
    mode: GTestMode = typer.Option(GTestMode.GOODNESS_OF_FIT, "--mode"),
    out: Optional[Path] = typer.Option(None, "--out"),
) -> None:
    """G-test of a contingency table of behaviour classes."""
    config = _build(GTestConfig, counts=_table(counts), mode=mode, out=None if out is None else str(out))
    report = run_gtest(config)
    write_json(report, config.out)
    _finish(report.errors)


@analyze_app.command("sweep")
def analyze_sweep(
    popsize: int = typer.Option(50, "--popsize", "-N"),
    selstrengths: str = typer.Option("0,0.5", "--selstrengths"),
    generations: int = typer.Option(1, "--generations", "-k"),
    grid_points: int = typer.Option(21, "--grid-points"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
) -> None:
    """Distances of the BwS and normal approximations to the exact transition."""
    config = _build(
        SweepConfig,
        popsize=popsize,
        selstrengths=_float_list(selstrengths),
        generations=generations,
        grid_points=grid_points,
        out=None if out is None else str(out),
        format=fmt,
    )
    try:
        report = run_sweep(config)
    except BwsError as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(code=2)
    if config.format == OutputFormat.CSV:
        write_csv(sweep_frame(report), config.out, report.config)
    else:
        write_json(report, config.out)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
