from __future__ import annotations
import functools
import logging
import sys
from typing import Callable, List, Optional

import click
from tabulate import tabulate

from . import __version__
from .api import EXAMPLES, VERIFIERS, QuiverPhi
from .config import RunConfig, config_from_cli
from .decomp import decompose
from .errors import ConfigError, QuiverPhiError
from .homology import Finite, global_dimension
from .html_report import render_report
from .igusa import PhiReport
from .model import ReportDocument, ResultRow
from .parsers.detect import REGISTRY, detect_format
from .parsers.qa import SourceDocument, parse_document
from .parsers.serialize import algebra_decl, render

log = logging.getLogger(__name__)

DEFAULT_REPORT = "qa_report.html"


def _source_options(f: Callable) -> Callable:
    opts = [
        click.option("--algebra", type=click.Path(dir_okay=False), default=None, help=".qa document to read."),
        click.option("--name", default=None, help="Algebra or gluing in the document (default: the last one)."),
        click.option("--example", type=click.Choice(EXAMPLES), default=None, help="Use a built-in example instead."),
        click.option("--field", type=int, default=None, help="0 for Q, else a prime p for GF(p) (examples only)."),
        click.option("--m", type=int, default=None, help="Chain length m of the cpq example."),
        click.option("--p", default=None, help="Parameter p of the cpq example."),
        click.option("--q", default=None, help="Parameter q of the cpq example."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _run_options(f: Callable) -> Callable:
    opts = [
        click.option("--cutoff", type=int, default=None, help="Syzygy steps before pd/id give up (default 40)."),
        click.option("--horizon", type=int, default=None, help="Rank levels computed for uncertified phi (default 10)."),
        click.option("--h4-cutoff", type=int, default=None, help="Syzygy rounds of the orbit closures (default 8)."),
        click.option("--closure-cutoff", type=int, default=None, help="Classes an orbit closure may hold (default 200)."),
        click.option("--lambdas", default=None, help="Eigenvalue sample, e.g. '0,1,2'."),
        click.option("--nmax", type=int, default=None, help="Largest family size n in samples (default 2)."),
        click.option("--bound", type=int, default=None, help="Coefficient bound of the eta witness search (default 3)."),
        click.option("--registry", type=click.Path(dir_okay=False), default=None,
                     help="Registry file (QA_REGISTRY overrides)."),
        click.option("--format", "output_format", type=click.Choice(["table", "json", "html"]), default=None,
                     help="Output format."),
        click.option("--out", type=click.Path(dir_okay=False), default=DEFAULT_REPORT, show_default=True,
                     help="Where --format html writes."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _guarded(f: Callable) -> Callable:
    """Library errors become a message on stderr and their exit code."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except QuiverPhiError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def _config(command: str) -> RunConfig:
    return config_from_cli(click.get_current_context().params, command)


def _session(cfg: RunConfig) -> QuiverPhi:
    params = click.get_current_context().params
    if params.get("example"):
        return QuiverPhi.example(params["example"], cfg)
    if not params.get("algebra"):
        raise ConfigError("give --algebra FILE or --example NAME")
    return QuiverPhi.from_file(params["algebra"], params.get("name"), cfg)


def _phi_value(r: PhiReport) -> str:
    return str(r.value) if r.certified else f"unknown(>={r.value})"


def _phi_note(r: PhiReport) -> Optional[str]:
    ranks = ",".join(str(x) for x in r.ranks)
    if r.certified:
        return None if not ranks else f"ranks {ranks}"
    return f"lower bound, horizon {r.horizon}; ranks {ranks}"


def _emit(doc: ReportDocument, cfg: RunConfig) -> None:
    fmt = cfg.output_format
    if fmt == "json":
        click.echo(doc.model_dump_json(indent=2))
    elif fmt == "html":
        out = click.get_current_context().params.get("out") or DEFAULT_REPORT
        click.echo(f"Report written: {render_report(doc, out)}")
    elif len(doc.results) == 1 and not doc.reports:
        r = doc.results[0]
        click.echo(r.value)
        if r.note:
            click.echo(f"({r.note})", err=True)
    else:
        if doc.results:
            rows = [[r.item, r.value, r.note or ""] for r in doc.results]
            click.echo(tabulate(rows, headers=["Item", "Value", "Note"], tablefmt="github"))
        for c in doc.reports:
            click.echo(f"\n{c.check}: {c.status.upper()}")
            for d in c.details:
                click.echo(f"  {d}")
            for w in c.witnesses:
                click.echo(f"  witness: {w}")
    sys.exit(doc.exit_status())


def _report(command: str, qp: QuiverPhi, results: List[ResultRow] = (), reports=()) -> ReportDocument:
    return ReportDocument(command=command, algebra=qp.algebra.name, results=list(results), reports=list(reports))


@click.group()
@click.version_option(__version__, prog_name="qa")
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debug output.")
def cli(verbose):
    """
    Syzygies, projective/injective dimensions and the Igusa-Todorov phi function
    of bound quiver algebras, with checks for gluings along connecting arrows.
    """
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "output_format", type=click.Choice(["table", "json"]), default=None)
@_guarded
def check(path, output_format):
    """Parse a .qa document and summarize what it declares."""
    cfg = config_from_cli({"output_format": output_format}, "check")
    with open(path, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    rows = []
    for name, a in doc.algebras.items():
        kind = f"gluing ({a.gluing.mode})" if name in doc.gluings else "algebra"
        rows.append(ResultRow(item=name, value=f"dim {a.dim}",
                              note=f"{kind} over {a.field.label}, {len(a.vertices)} vertices, "
                                   f"{len(a.quiver.arrows)} arrows, Loewy length {a.loewy_length}"))
    for name, M in doc.modules.items():
        rows.append(ResultRow(item=name, value=f"dims {list(M.dimension_vector)}", note=f"over {M.algebra.name}"))
    _emit(ReportDocument(command="check", results=rows), cfg)


@cli.command()
@_source_options
@_run_options
@_guarded
def basis(**_):
    """List the path-class basis of the algebra."""
    cfg = _config("basis")
    qp = _session(cfg)
    rows = [ResultRow(item=str(i), value=str(p), note=f"{p.source}->{p.target}")
            for i, p in enumerate(qp.algebra.basis)]
    _emit(_report("basis", qp, rows), cfg)


@cli.command()
@_source_options
@_run_options
@_guarded
def projectives(**_):
    """Dimension vectors of the indecomposable projectives and injectives."""
    cfg = _config("projectives")
    qp = _session(cfg)
    rows = []
    for v in qp.algebra.vertices:
        rows.append(ResultRow(item=f"P{v}", value=str(list(qp.named_module(f"P{v}").dimension_vector))))
        rows.append(ResultRow(item=f"I{v}", value=str(list(qp.named_module(f"I{v}").dimension_vector))))
    gd = global_dimension(qp.algebra, cfg.pd_cutoff)
    rows.append(ResultRow(item="gldim", value=str(gd)))
    _emit(_report("projectives", qp, rows), cfg)


@cli.command()
@_source_options
@_run_options
@click.option("--module", "module_expr", required=True, help="Module expression, e.g. 'S1+S2'.")
@click.option("-k", "steps", type=int, default=1, show_default=True, help="Number of syzygies.")
@click.option("--stable", is_flag=True, help="Drop projective summands at every step.")
@_guarded
def syzygy(module_expr, steps, stable, **_):
    """Omega^i of a module for i <= k."""
    cfg = _config("syzygy")
    qp = _session(cfg)
    if steps < 0:
        raise ConfigError("-k must be non-negative")
    chain = qp.syzygies(qp.module(module_expr), steps, stable)
    rows = []
    for i, X in enumerate(chain):
        summands = len(decompose(X)) if not X.is_zero() else 0
        rows.append(ResultRow(item=f"Omega^{i}", value=str(list(X.dimension_vector)),
                              note=f"{summands} indecomposable summand(s)"))
    _emit(_report("syzygy", qp, rows), cfg)


def _dimension_command(which: str):
    @cli.command(name=which, help=f"{'Projective' if which == 'pd' else 'Injective'} dimension of a module.")
    @_source_options
    @_run_options
    @click.option("--module", "module_expr", required=True, help="Module expression, e.g. 'S1+S2'.")
    @_guarded
    def command(module_expr, **_):
        cfg = _config(which)
        qp = _session(cfg)
        M = qp.module(module_expr)
        result = qp.pd(M) if which == "pd" else qp.id(M)
        _emit(_report(which, qp, [ResultRow(item=module_expr, value=str(result))]), cfg)

    return command


pd = _dimension_command("pd")
id_ = _dimension_command("id")


@cli.command()
@_source_options
@_run_options
@click.option("--module", "module_expr", required=True, help="Module expression, e.g. 'S1+S2'.")
@_guarded
def phi(module_expr, **_):
    """The Igusa-Todorov phi of a module."""
    cfg = _config("phi")
    qp = _session(cfg)
    r = qp.phi(qp.module(module_expr))
    _emit(_report("phi", qp, [ResultRow(item=module_expr, value=_phi_value(r), note=_phi_note(r))]), cfg)


@cli.command(name="phidim-suite")
@_source_options
@_run_options
@_guarded
def phidim_suite(**_):
    """phi of the standard suite: a lower bound for phidim of the algebra."""
    cfg = _config("phidim-suite")
    qp = _session(cfg)
    suite = qp.suite()
    r = qp.phidim_suite()
    _emit(_report("phidim-suite", qp, [ResultRow(item=f"suite of {len(suite)} modules", value=_phi_value(r),
                                                 note=_phi_note(r))]), cfg)


@cli.command()
@_source_options
@_run_options
@click.option("--emit", is_flag=True, help="Print the glued algebra as a plain .qa algebra.")
@_guarded
def glue(emit, **_):
    """Show the block decomposition of a gluing declared in a document."""
    cfg = _config("glue")
    qp = _session(cfg)
    g = qp.gluing
    if emit:
        click.echo(render(SourceDocument((algebra_decl(g.algebra),))), nl=False)
        return
    rows = [ResultRow(item=b.name, value=f"dim {b.dim}", note=f"vertices {' '.join(b.vertices)}") for b in g.blocks]
    rows += [ResultRow(item=a.label, value=f"{a.source}->{a.target}", note="connector") for a in g.connectors]
    expected = sum(b.dim for b in g.blocks) + g.connector_classes
    rows.append(ResultRow(item=g.algebra.name, value=f"dim {g.algebra.dim}",
                          note=f"{g.mode}; blocks + {g.connector_classes} connector classes = {expected}"))
    _emit(_report("glue", qp, rows), cfg)


@cli.command()
@_source_options
@_run_options
@_guarded
def opposite(**_):
    """Print the opposite algebra as a .qa document."""
    cfg = _config("opposite")
    qp = _session(cfg)
    click.echo(render(SourceDocument((algebra_decl(qp.algebra.opposite()),))), nl=False)


@cli.command()
@_source_options
@_run_options
@_guarded
def hypotheses(**_):
    """Check H1-H4 on a gluing."""
    cfg = _config("hypotheses")
    qp = _session(cfg)
    _emit(_report("hypotheses", qp, reports=[qp.hypotheses().as_check()]), cfg)


@cli.command()
@click.argument("names", nargs=-1, required=True, type=click.Choice(VERIFIERS))
@_source_options
@_run_options
@_guarded
def verify(names, **_):
    """Run one or more verifiers on a gluing."""
    cfg = _config("verify")
    qp = _session(cfg)
    _emit(_report("verify", qp, reports=[qp.verify(n) for n in names]), cfg)


_EXAMPLE_CHECKS = {
    "cpq": {"none": [], "table": ["cpq"], "claims": ["cpq-claims"], "all": ["cpq", "cpq-claims"]},
    "bm1": {"none": ["bm1"], "table": ["bm1"], "claims": ["bm1"], "all": ["bm1"]},
    "fix5": {"none": [], "table": ["lemma3.1"], "claims": ["prop3.5"], "all": ["lemma3.1", "prop3.5"]},
}


@cli.command()
@click.argument("which", type=click.Choice(EXAMPLES))
@click.option("--field", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--p", default=None)
@click.option("--q", default=None)
@click.option("--verify", "verify_level", type=click.Choice(["none", "table", "claims", "all"]), default="all",
              show_default=True, help="Which checks to run on the example.")
@_run_options
@_guarded
def example(which, verify_level, **_):
    """Build a worked example and run its checks."""
    cfg = _config("example")
    qp = QuiverPhi.example(which, cfg)
    a = qp.algebra
    rows = [ResultRow(item=a.name, value=f"dim {a.dim}",
                      note=f"{len(a.vertices)} vertices, {len(a.quiver.arrows)} arrows, Loewy length {a.loewy_length}")]
    if which == "cpq":
        ident = qp.id(qp.named_module("Sc1"))
        rows.append(ResultRow(item="id(S_c1)", value=str(ident), note=f"m = {cfg.m}"))
    reports = [qp.verify(n) for n in _EXAMPLE_CHECKS[which][verify_level]]
    _emit(_report(f"example {which}", qp, rows, reports), cfg)


@cli.group()
def registry():
    """Save or inspect isomorphism-class registries."""


@registry.command()
@_source_options
@_run_options
@_guarded
def save(**_):
    """Register the summands of the standard suite and its syzygies, then save."""
    cfg = _config("registry save")
    qp = _session(cfg)
    r = qp.phidim_suite()
    path = qp.save_registry()
    _emit(_report("registry save", qp, [ResultRow(item=path, value=f"{len(qp.registry)} classes",
                                                  note=f"suite phi {r.value}")]), cfg)


@registry.command()
@_source_options
@_run_options
@_guarded
def load(**_):
    """List the classes stored in a registry file."""
    cfg = _config("registry load")
    qp = _session(cfg)
    if detect_format(cfg.registry_path) != REGISTRY:
        raise ConfigError(f"{cfg.registry_path} is not a registry file")
    reg = qp.load_registry()
    rows = [ResultRow(item=str(cid), value=str(list(rep.dimension_vector)), note=rep.name) for cid, rep in reg]
    _emit(_report("registry load", qp, rows), cfg)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=DEFAULT_REPORT, show_default=True)
@_guarded
def report(path, out):
    """Render a JSON report (from --format json) as HTML."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = ReportDocument.model_validate_json(fh.read())
        except ValueError as e:
            raise ConfigError(f"{path} is not a qa JSON report: {e}") from None
    click.echo(f"Report written: {render_report(doc, out)}")


def main():
    cli()


if __name__ == "__main__":
    main()
