# kanenobu_cli.py
import functools, json, logging, sys

import click

from .app import Caps, build_report, compute_invariant
from .algebra import LaurentPoly1, breadth
from .audit import default_cache
from .config import settings
from .diagram import kanenobu_diagram, read_pd, write_pd
from .errors import CapExceededError, DiagramError, PdParseError
from .execution.executor import SUITES, all_passed, run_suite
from .kanenobu import crossing_number, khovanov_distinction
from .khovanov import BigradedDims
from .utils.formatting import distinction_table, homology_table, report_table, steps_table

logger = logging.getLogger(__name__)

# lets "-1" through as a positional integer
NUMERIC_ARGS = {"ignore_unknown_options": True}


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, str(settings.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def handle_errors(f):
    """Map library errors onto exit codes: 1 for bad input, 2 for cap overruns."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (PdParseError, DiagramError) as e:
            _fail(str(e), 1)
        except CapExceededError as e:
            _fail(f"{e} (raise it with --max-crossings)", 2)

    return wrapper


def input_options(f):
    f = click.option("--no-cache", is_flag=True, help="Ignore KANENOBU_CACHE for this run.")(f)
    f = click.option("--max-crossings", type=int, default=None,
                     help="Override every crossing cap for this run.")(f)
    f = click.option("--pd", "pd_file", type=click.Path(exists=True, dir_okay=False),
                     help="Read the diagram from a pdcode v1 file.")(f)
    f = click.option("--kanenobu", "pq", type=int, nargs=2, default=None, metavar="P Q",
                     help="Use the generated diagram of K(P, Q).")(f)
    return f


def _load_input(pq, pd_file):
    if (pq is None) == (pd_file is None):
        raise click.UsageError("give exactly one of --kanenobu P Q or --pd FILE")
    if pq is not None:
        p, q = pq
        return kanenobu_diagram(p, q), {"kind": "kanenobu", "p": p, "q": q}, (p, q)
    return read_pd(pd_file), {"kind": "pd", "path": pd_file}, None


def _caps(max_crossings):
    return Caps() if max_crossings is None else Caps.uniform(max_crossings)


@click.group("kanenobu")
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
def main(verbose):
    """Exact invariants of Kanenobu knots and planar diagrams."""
    _configure_logging(verbose)


@main.command("gen", context_settings=NUMERIC_ARGS)
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("out", type=click.Path(dir_okay=False))
@handle_errors
def gen(p, q, out):
    """Write the generated diagram of K(P, Q) to OUT."""
    d = kanenobu_diagram(p, q)
    try:
        write_pd(d, out, comments=[f"kanenobu: {p} {q}", f"writhe: {d.writhe}"])
    except OSError as e:
        _fail(f"cannot write {out}: {e}", 1)
    click.echo(f"{out}: K({p},{q}), {d.n} crossings")


@main.command("invariants")
@input_options
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True)
@click.option("--timing", is_flag=True, help="Include wall_time in the report.")
@handle_errors
def invariants(pq, pd_file, max_crossings, no_cache, fmt, timing):
    """Compute the full invariant report for one diagram."""
    d, descriptor, pq = _load_input(pq, pd_file)
    report = build_report(d, descriptor, pq=pq, caps=_caps(max_crossings),
                          cache=default_cache(not no_cache), timing=timing)
    if fmt == "json":
        click.echo(report.model_dump_json(indent=2, exclude_none=True))
    else:
        click.echo(report_table(report))


@main.command("khovanov")
@input_options
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="table", show_default=True)
@handle_errors
def khovanov(pq, pd_file, max_crossings, no_cache, fmt):
    """Khovanov homology dimensions, rows i and columns j."""
    d, _, pq = _load_input(pq, pd_file)
    rows, source = compute_invariant("khovanov", d, pq, _caps(max_crossings), default_cache(not no_cache))
    dims = BigradedDims.from_rows(rows, d.component_count)
    if fmt == "json":
        click.echo(json.dumps({"khovanov": rows, "source": source}))
        return
    click.echo(homology_table(dims))
    click.echo(f"total dimension {dims.total} ({source})")


@main.command("qpoly")
@input_options
@handle_errors
def qpoly(pq, pd_file, max_crossings, no_cache):
    """The Brandt-Lickorish-Millett-Ho polynomial Q(x)."""
    d, _, pq = _load_input(pq, pd_file)
    pairs, source = compute_invariant("q_poly", d, pq, _caps(max_crossings), default_cache(not no_cache))
    qx = LaurentPoly1.from_pairs(pairs, "x")
    click.echo(f"Q = {qx}")
    click.echo(f"deg Q = {qx.max_exponent} ({source})")


@main.command("jones")
@input_options
@handle_errors
def jones_cmd(pq, pd_file, max_crossings, no_cache):
    """The Jones polynomial V(t) and its breadth."""
    d, _, pq = _load_input(pq, pd_file)
    pairs, source = compute_invariant("jones", d, pq, _caps(max_crossings), default_cache(not no_cache))
    v = LaurentPoly1.from_pairs(pairs, "t")
    click.echo(f"V = {v}")
    click.echo(f"breadth = {breadth(v)} ({source})")


@main.command("crossing", context_settings=NUMERIC_ARGS)
@click.argument("p", type=int)
@click.argument("q", type=int)
def crossing(p, q):
    """Crossing number of K(P, Q), exact or as an interval."""
    result = crossing_number(p, q)
    click.echo(str(result))
    click.echo(result.provenance)


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES + ("all",)), default="all", show_default=True)
@click.option("--max", "max_abs", type=int, default=None, help="Grid radius |p|, |q| <= N.")
@click.option("--sum-max", type=int, default=None, help="Khovanov grid limit |p + q| <= N.")
@click.option("--workers", type=int, default=settings.WORKERS, show_default=True)
@click.option("--summary", is_flag=True, help="Print a table of every step at the end.")
def verify(suite, max_abs, sum_max, workers, summary):
    """Run oracle checks; exit 0 iff every check passes."""
    steps = run_suite(suite, max_abs, sum_max, workers, echo=click.echo)
    if summary:
        click.echo(steps_table(steps))
    failed = [s for s in steps if s["status"] != "success"]
    click.echo(f"{len(steps) - len(failed)}/{len(steps)} checks passed")
    if not all_passed(steps):
        sys.exit(1)


@main.command("distinguish")
@click.option("--max", "max_abs", type=int, default=3, show_default=True)
def distinguish(max_abs):
    """Group K(p, q) by Khovanov homology and count the Q polynomials inside each group."""
    click.echo(distinction_table(khovanov_distinction(max_abs)))


if __name__ == "__main__":
    main()
