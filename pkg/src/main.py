# Import required modules
import functools
import sys
from pathlib import Path

import click
import orjson

from src.central.functional_equation import root_number
from src.central.report import central_report
from src.character.canonical import make_character
from src.charsum.sums import char_sum, reduction_identity_check
from src.charsum.survey import burgess_ratio_survey, write_survey_csv, write_survey_summary
from src.config import appconfig
from src.config.settings import get_setting
from src.exceptions import HeckeError
from src.logger.operationshandler import system_logger
from src.selftest import run_selftest
from src.sweep import run_sweep
from src.utilities.Printer import print_report, print_table, printer
from src.utilities.helpers import ensure_cache_dir, load_defaults

# Get application settings
settings = get_setting()

if appconfig.ENV == "development":
    running_mode = "development mode"
else:
    running_mode = "production mode"


def handle_errors(command):
    """Map HeckeError to its exit code with a one-line diagnostic."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except HeckeError as e:
            system_logger.error("%s failed: %s", command.__name__, e.detail, exc_info=1)
            printer(f"error: {e}", "bold_red")
            if e.witness is not None:
                printer(f"witness: {e.witness}", "red")
            sys.exit(e.exit_code)

    return wrapper


def case_options(command):
    options = [
        click.option("--disc", "D", type=int, required=True, help="D, with -D the field discriminant"),
        click.option("--twist", "d", type=int, default=1, show_default=True, help="fundamental discriminant d, or 1"),
        click.option("--weight", "k", type=int, default=1, show_default=True, help="k, character weight 2k-1"),
        click.option("--variant", type=int, default=0, show_default=True, help="index of the canonical character"),
        click.option("--tol", type=float, default=settings.tol, show_default=True),
        click.option("--threads", type=int, default=settings.threads, show_default=True),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="write the JSON report here"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _write_json(path: Path, payload: dict) -> None:
    path.write_bytes(orjson.dumps(payload, option=orjson.OPT_INDENT_2))
    printer(f"wrote {path}", "teal")


@click.group()
@click.version_option(settings.VERSION, prog_name=settings.PROJECT_NAME)
def cli():
    """Central values and derivatives of Hecke L-functions of imaginary quadratic fields."""
    if settings.VERBOSE:
        printer(f"{settings.PROJECT_NAME} {settings.VERSION}, running in {running_mode}", "purple")


def _central(route, D, d, k, variant, tol, threads, out):
    char = make_character(D, d, k, variant, cache_dir=str(ensure_cache_dir()))
    report = central_report(D, d, k, variant, tol=tol, threads=threads, route=route, char=char)
    print_report(report)
    if out is not None:
        _write_json(out, report.model_dump())


@cli.command()
@case_options
@handle_errors
def value(D, d, k, variant, tol, threads, out):
    """L(k, chi, p) = 2(I1 + I2), meaningful when the root number is +1."""
    _central("value", D, d, k, variant, tol, threads, out)


@cli.command()
@case_options
@handle_errors
def derivative(D, d, k, variant, tol, threads, out):
    """L'(k, chi, p) = 2(Rk + C), meaningful when the root number is -1."""
    _central("derivative", D, d, k, variant, tol, threads, out)


@cli.command()
@case_options
@handle_errors
def rootnumber(D, d, k, variant, tol, threads, out):
    """Root number from the smoothed functional equation."""
    char = make_character(D, d, k, variant, cache_dir=str(ensure_cache_dir()))
    rn = root_number(D, d, k, char, tol, threads)
    rows = {
        "W": rn.W,
        "W_solved": rn.W_solved,
        "W_residual": rn.W_residual,
        "afe_value": rn.afe_value,
        "afe_residual": rn.afe_residual,
        "scale": rn.scale,
        "norm_bound": rn.norm_bound,
    }
    print_table(f"root number  D={D} d={d} k={k} variant={variant}", rows)
    if out is not None:
        _write_json(out, {"D": D, "d": d, "k": k, "variant_index": variant, **rows})


@cli.command()
@click.option("--disc", "D", type=int, required=True)
@click.option("--twist", "d", type=int, default=1, show_default=True)
@click.option("--variant", type=int, default=0, show_default=True)
@click.option("--v", "v", type=int, required=True, help="imaginary coordinate v")
@click.option("--M", "M", type=int, required=True, help="first u of the range")
@click.option("--w", "w", type=int, required=True, help="end of the u range (exclusive)")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@handle_errors
def charsum(D, d, variant, v, M, w, out):
    """S_v(w) directly and through the eps0 eps1 reduction."""
    char = make_character(D, d, 1, variant)
    record = char_sum(D, d, char, v, M, w)
    check = reduction_identity_check(D, d, char, v, M, w)
    print_table(f"S_v(w)  D={D} d={d} v={v} M={M} w={w}", {**record.model_dump(), "reduction_identity": check.passed})
    if not check.passed:
        printer(f"reduction identity failed, witness (j, u) = {check.witness}", "bold_red")
    if out is not None:
        _write_json(out, {**record.model_dump(), "reduction": check.model_dump()})
    if not check.passed:
        sys.exit(1)


@cli.command()
@click.option("--dmax", "D_max", type=int, default=None, help="largest D (defaults.yaml when omitted)")
@click.option("--dmin", "D_min", type=int, default=5, show_default=True)
@click.option("--twist", "twists", type=int, multiple=True)
@click.option("--weight", "weights", type=int, multiple=True)
@click.option("--tol", type=float, default=settings.tol, show_default=True)
@click.option("--threads", type=int, default=settings.threads, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=Path("sweep.jsonl"), show_default=True)
@click.option("--resume", is_flag=True, help="skip records already in --out")
@click.option("--timings", is_flag=True, help="record wall time per case")
@handle_errors
def sweep(D_max, D_min, twists, weights, tol, threads, out, resume, timings):
    """One JSON line per admissible (D, d, k, variant)."""
    defaults = load_defaults("SWEEP")
    summary = run_sweep(
        D_max or defaults["D_max"],
        twists or defaults["twists"],
        weights or defaults["weights"],
        out,
        tol,
        threads=threads,
        resume=resume,
        timings=timings,
        D_min=D_min,
    )
    printer(summary.line(), "bold_green" if summary.errors == 0 else "bold_red")
    if summary.errors:
        sys.exit(1)


@cli.command()
@click.option("--seed", type=int, default=None)
@click.option("--suite", "suites", multiple=True, help="run only these suites")
def selftest(seed, suites):
    """Invariant suites of every module, with timings."""
    outcomes = run_selftest(seed, list(suites) or None)
    for o in outcomes:
        status = "pass" if o.passed else "FAIL"
        printer(f"{o.name:<20} {status:<5} {o.seconds:8.2f}s", "green" if o.passed else "bold_red")
        if not o.passed:
            printer(f"  witness: {o.witness}", "red")
    if not all(o.passed for o in outcomes):
        sys.exit(1)


@cli.command()
@click.option("--dmin", "D_min", type=int, default=None)
@click.option("--dmax", "D_max", type=int, default=None)
@click.option("--twist", "twists", type=int, multiple=True)
@click.option("--samples", type=int, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--threads", type=int, default=settings.threads, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=Path("survey.csv"), show_default=True)
@handle_errors
def survey(D_min, D_max, twists, samples, seed, threads, out):
    """Burgess-ratio survey of S_v(w); CSV rows plus a JSON summary."""
    defaults = load_defaults("SURVEY")
    lo, hi = defaults["D_range"]
    table = burgess_ratio_survey(
        (D_min or lo, D_max or hi),
        twists or defaults["twists"],
        samples or defaults["sample_size"],
        seed,
        threads,
    )
    write_survey_csv(table, out)
    summary_path = out.with_suffix(".json")
    write_survey_summary(table, summary_path)
    print_table("survey", table.summary(), ["samples", "max_ratio", "median_ratio", "p90_ratio", "p99_ratio", "exponent", "seed"])
    printer(f"wrote {out} and {summary_path}", "teal")


if __name__ == "__main__":
    cli()
