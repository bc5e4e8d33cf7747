import json
import os
import sys
from fractions import Fraction

import click
import halo
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from click.shell_completion import CompletionItem

from impartial.control.verifier import Verifier, resolve_workers
from impartial.corpus.registry import get_example, list_examples
from impartial.graphs.core import Digraph, UndirectedGraph
from impartial.graphs.textio import ParseError, format_graph, load_graph
from impartial.structure.cutting import format_trace
from impartial.tourneyon.probe import DEFAULT_BLOCKS, DEFAULT_ITERS, DEFAULT_RESTARTS, DEFAULT_SEED, DEFAULT_STEP
from impartial.tourneyon.step import StepTourneyon
from impartial.verdicts.census import DEFAULT_SAMPLES, EXACT_PAIR_LIMIT
from impartial.verdicts.formulas import random_expected_count, transitive_count
from impartial.verdicts.records import Verdict

console = Console(soft_wrap=True)
err_console = Console(stderr=True, soft_wrap=True)

PROGRESS_MODE = "steps"  # "steps", "plain", or "quiet"

EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class StepProgress:
    """Progress on stderr so stdout stays a clean payload.

    Modes:
        "steps"  - halo spinner, checkmark/cross per step
        "plain"  - one line per step (debug runs)
        "quiet"  - nothing (stderr is not a terminal)
    """

    def __init__(self, mode="steps"):
        self._mode = mode
        self._spinner = None

    def update(self, message):
        if self._mode == "steps":
            if self._spinner:
                self._spinner.succeed()
            self._spinner = halo.Halo(text=message, spinner="bouncingBar", stream=sys.stderr)
            self._spinner.start()
        elif self._mode == "plain":
            click.echo(message, err=True)

    def finish(self):
        if self._mode == "steps" and self._spinner:
            self._spinner.succeed()
            self._spinner = None

    def fail(self, message=None):
        if self._mode == "steps":
            if self._spinner:
                self._spinner.fail(message)
                self._spinner = None
        elif self._mode == "plain":
            click.echo(message or "Failed", err=True)


def _progress_mode(ctx):
    debug = ctx.obj.get("debug", False) if ctx.obj else False
    if debug:
        return "plain"
    if not sys.stderr.isatty():
        return "quiet"
    return PROGRESS_MODE


def _load_corpus():
    """Register the bundled examples."""
    from impartial.corpus.bundled import register_bundled
    register_bundled()


def _complete_source(ctx, param, incomplete):
    _load_corpus()
    return [
        CompletionItem(e.name, help=e.description)
        for e in list_examples()
        if e.name.startswith(incomplete)
    ]


def _complete_command(ctx, param, incomplete):
    return [
        CompletionItem(name, help=(cli.get_command(ctx, name).get_short_help_str(80) or ""))
        for name in cli.list_commands(ctx)
        if name.startswith(incomplete)
    ]


def _make_verifier(ctx, **kwargs):
    """Create a Verifier with worker count and debug wiring from the CLI context."""
    debug = ctx.obj.get("debug", False) if ctx.obj else False
    threads = ctx.obj.get("threads") if ctx.obj else None
    try:
        workers = resolve_workers(threads)
    except ValueError as e:
        _fail(e)
    v = Verifier(workers=workers, debug=debug, **kwargs)
    if debug:
        v.on_debug = lambda msg: err_console.log(f"[dim]{escape(msg)}[/]")
    return v


def _fail(error, code=EXIT_ERROR):
    console.print(f"[bold red]Error:[/] {escape(str(error))}")
    raise SystemExit(code)


def _load(source, kind=Digraph):
    """Read a graph from a file path or a bundled corpus name."""
    _load_corpus()
    try:
        if os.path.exists(source):
            g = load_graph(source)
        elif get_example(source):
            g = get_example(source).load()
        else:
            _fail(f"No such file or corpus example: {source}")
    except ParseError as e:
        _fail(f"{source}: {e}")
    except OSError as e:
        _fail(e)
    if kind is Digraph and not isinstance(g, Digraph):
        _fail(f"{source}: expected a digraph")
    if kind is UndirectedGraph and isinstance(g, Digraph):
        g = g.underlying()
    return g


def _run(ctx, verifier, action):
    progress = StepProgress(mode=_progress_mode(ctx))
    verifier.on_status = progress.update
    try:
        result = action()
        progress.finish()
    except KeyboardInterrupt:
        progress.fail("Interrupted")
        console.print("\n[yellow]Interrupted.[/]")
        raise SystemExit(130)
    except Exception as e:
        progress.fail(str(e))
        _fail(e)
    return result


def _echo_json(data):
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _print_verdict(verdict: Verdict, as_json: bool):
    if as_json:
        _echo_json(verdict.to_dict())
    elif verdict.impartial:
        console.print(f"[green]impartial[/] ({verdict.route} route)")
    else:
        console.print(f"[red]not impartial[/] ({verdict.route} route)")
        console.print(f"witness: {escape(verdict.witness.describe())}")
    if not verdict.impartial:
        raise SystemExit(EXIT_NEGATIVE)


class HelpfulCommand(click.Command):
    """Show full help text when a command is invoked incorrectly."""

    def parse_args(self, ctx, args):
        try:
            return super().parse_args(ctx, args)
        except click.UsageError as e:
            click.echo(ctx.get_help())
            click.echo()
            console.print(f"[bold red]Error:[/] {escape(e.format_message())}")
            ctx.exit(EXIT_ERROR)


class HelpfulGroup(click.Group):
    command_class = HelpfulCommand


json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text")


@click.group(cls=HelpfulGroup)
@click.version_option(version="0.1.0", prog_name="impartial")
@click.option("--debug", is_flag=True, help="Show per-step timing and search details on stderr")
@click.option("--threads", type=int, default=None,
              help="Worker processes for census and probe (default: all cores; IMPARTIAL_THREADS overrides)")
@click.pass_context
def cli(ctx, debug, threads):
    """Impartial digraphs - decide tournament-count invariance and probe tourneyon densities."""
    ctx.ensure_object(dict)
    ctx.obj["debug"] = debug
    ctx.obj["threads"] = threads


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("command", required=False, default=None, shell_complete=_complete_command)
@click.pass_context
def help(ctx, command):
    """Show help for a command."""
    if command:
        cmd = cli.get_command(ctx, command)
        if cmd is None:
            console.print(f"[red]Unknown command: {escape(command)}[/]")
            raise SystemExit(EXIT_ERROR)
        click.echo(cmd.get_help(ctx))
    else:
        click.echo(ctx.parent.get_help())


@cli.command()
@click.argument("shell", type=click.Choice(["bash", "zsh", "fish"]))
def completion(shell):
    """Generate shell completion script."""
    from click.shell_completion import get_completion_class
    comp_cls = get_completion_class(shell)
    comp = comp_cls(cli, {}, "impartial", "_IMPARTIAL_COMPLETE")
    click.echo(comp.source())


@cli.command()
@click.option("--show", default=None, shell_complete=_complete_source, help="Print one example file")
def corpus(show):
    """List the bundled examples."""
    _load_corpus()
    if show:
        example = get_example(show)
        if not example:
            _fail(f"Unknown corpus example: {show}")
        click.echo(example.read_text(), nl=False)
        return

    table = Table(title="Bundled Examples")
    table.add_column("Name", style="cyan")
    table.add_column("Kind", style="blue")
    table.add_column("Impartial", style="green")
    table.add_column("Description")
    for e in sorted(list_examples(), key=lambda x: x.name):
        verdict = "-" if e.impartial is None else ("yes" if e.impartial else "no")
        table.add_row(e.name, e.kind, verdict, e.description)
    console.print(table)


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--route", type=click.Choice(["structural", "signsum", "census"]), default="structural",
              help="Decision route")
@click.option("--samples", type=int, default=DEFAULT_SAMPLES, help="Sample count when the census cannot be exhaustive")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Sampling seed")
@json_option
@click.pass_context
def recognize(ctx, source, route, samples, seed, as_json):
    """Decide whether a digraph is impartial."""
    h = _load(source)
    verifier = _make_verifier(ctx)
    route = "sign-sum" if route == "signsum" else route
    verdict = _run(ctx, verifier, lambda: verifier.recognize(h, route, samples=samples, seed=seed))
    _print_verdict(verdict, as_json)


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--n", "order", type=int, default=None, help="Tournament order (default: vertex count)")
@click.option("--exact", is_flag=True, help="Enumerate every labeled tournament (the default)")
@click.option("--samples", type=int, default=None, help="Count over this many seeded random tournaments")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Sampling seed")
@json_option
@click.pass_context
def census(ctx, source, order, exact, samples, seed, as_json):
    """Distribution of labeled copy counts over tournaments."""
    if exact and samples is not None:
        raise click.UsageError("--exact and --samples are mutually exclusive")
    h = _load(source)
    n = h.n if order is None else order
    if samples is None and n * (n - 1) // 2 > EXACT_PAIR_LIMIT:
        _fail(f"Exact census is limited to 8 vertices, got --n {n}; pass --samples")
    verifier = _make_verifier(ctx)
    report = _run(ctx, verifier, lambda: verifier.census(h, n, samples=samples, seed=seed))
    if as_json:
        click.echo(report.to_json())
    else:
        title = f"{n}-vertex tournaments ({report.mode}"
        title += f", seed {seed})" if report.mode == "sampled" else ")"
        table = Table(title=title)
        table.add_column("Copies", style="cyan", justify="right")
        table.add_column("Tournaments", style="green", justify="right")
        for count, freq in report.distribution.items():
            table.add_row(str(count), str(freq))
        console.print(table)
        console.print(f"constant: {'yes' if report.is_constant else 'no'}")
    if not report.is_constant:
        raise SystemExit(EXIT_NEGATIVE)


@cli.command()
@click.option("--k", "k", type=int, required=True, help="Generate trees on 2**k vertices (k <= 4)")
@click.option("--undirected", is_flag=True, help="Generate undirected trees")
@json_option
@click.pass_context
def generate(ctx, k, undirected, as_json):
    """Generate recursively bridge-mirrored trees."""
    verifier = _make_verifier(ctx)
    found = _run(ctx, verifier, lambda: verifier.generate(k, undirected=undirected))
    if as_json:
        _echo_json({"k": k, "undirected": undirected, "count": len(found),
                    "graphs": [format_graph(g) for g in found]})
        return
    click.echo("---\n".join(format_graph(g) for g in found), nl=False)
    click.echo(len(found))


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@json_option
@click.pass_context
def cut(ctx, source, as_json):
    """Recursively cut mirror-bridges from a forest."""
    f = _load(source, kind=None)
    verifier = _make_verifier(ctx)
    trace = _run(ctx, verifier, lambda: verifier.cut(f))
    if as_json:
        _echo_json({"stages": [format_graph(s) for s in trace.stages],
                    "removed": [[list(e) for e in r] for r in trace.removed]})
        return
    click.echo(format_trace(trace), nl=False)


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@json_option
@click.pass_context
def signsum(ctx, source, as_json):
    """Check the sign-sum certificate over every even spanning subgraph."""
    h = _load(source)
    verifier = _make_verifier(ctx)
    verdict = _run(ctx, verifier, lambda: verifier.recognize(h, "sign-sum"))
    _print_verdict(verdict, as_json)


@cli.command()
@click.argument("host", shell_complete=_complete_source)
@click.argument("pattern", shell_complete=_complete_source)
@json_option
@click.pass_context
def subf(ctx, host, pattern, as_json):
    """List the subgraphs of HOST isomorphic to PATTERN with their signs."""
    h = _load(host)
    f = _load(pattern, kind=UndirectedGraph)
    verifier = _make_verifier(ctx)
    signed = _run(ctx, verifier, lambda: verifier.subgraphs(h, f))
    if as_json:
        _echo_json({"count": len(signed),
                    "members": [{"edges": [list(e) for e in m.edges], "sign": s} for m, s in signed]})
        return
    for member, sign in signed:
        click.echo(f"{sign:+d} " + " ".join(f"{u}->{v}" for u, v in member.edges))
    click.echo(f"count: {len(signed)}")


def _read_tourneyon(path, exact):
    if path is None:
        return StepTourneyon.constant(1)
    try:
        with open(path) as fh:
            data = json.load(fh)
        if exact:
            data = {"a": [Fraction(str(x)) for x in data["a"]],
                    "b": [[Fraction(str(x)) for x in row] for row in data["b"]]}
        return StepTourneyon.from_dict(data)
    except (OSError, KeyError, TypeError, ValueError) as e:
        _fail(f"{path}: {e}")


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--tourneyon", "wfile", default=None, type=click.Path(exists=True, dir_okay=False),
              help="Step tourneyon JSON {\"a\": [...], \"b\": [[...]]} (default: constant 1/2)")
@click.option("--exact", is_flag=True, help="Read the tourneyon as exact decimals and print a fraction")
@json_option
@click.pass_context
def density(ctx, source, wfile, exact, as_json):
    """Density of a digraph in a step tourneyon."""
    h = _load(source)
    w = _read_tourneyon(wfile, exact)
    if not exact:
        w = StepTourneyon.from_arrays(*w.as_arrays())
    verifier = _make_verifier(ctx)
    value = _run(ctx, verifier, lambda: verifier.density(h, w))
    shown = str(Fraction(value)) if exact else repr(float(value))
    if as_json:
        _echo_json({"density": shown if exact else float(value), "edges": len(h.edges)})
    else:
        click.echo(shown)


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--blocks", type=int, default=DEFAULT_BLOCKS, help="Number of tourneyon blocks")
@click.option("--restarts", type=int, default=DEFAULT_RESTARTS, help="Independent random starts")
@click.option("--iters", type=int, default=DEFAULT_ITERS, help="Gradient steps per start")
@click.option("--step", type=float, default=DEFAULT_STEP, help="Initial step size")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Seed for the starting points")
@click.option("--direction", type=click.Choice(["min", "max"]), default="min", help="Minimize or maximize")
@json_option
@click.pass_context
def probe(ctx, source, blocks, restarts, iters, step, seed, direction, as_json):
    """Search step tourneyons for the extreme density of a digraph."""
    h = _load(source)
    verifier = _make_verifier(ctx)
    report = _run(ctx, verifier, lambda: verifier.probe(
        h, direction=direction, blocks=blocks, restarts=restarts, iters=iters, step=step, seed=seed,
    ))
    if as_json:
        click.echo(report.to_json())
        return
    baseline = 2.0 ** -len(h.edges)
    console.print(f"[bold]{direction} density:[/] {report.best_value:.9f}")
    console.print(f"constant tourneyon: {baseline:.9f}")
    console.print(
        f"blocks {report.blocks}, restarts {report.restarts}, iterations {report.iterations}, "
        f"seed {report.seed}, best restart {report.best_restart}"
    )


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--trials", type=int, default=100, help="Random points to test")
@click.option("--seed", type=int, default=0, help="Seed for the random points")
@click.option("--float", "use_float", is_flag=True, help="Floating point instead of exact rationals")
@click.option("--tol", type=float, default=1e-9, help="Relative tolerance in floating point mode")
@click.pass_context
def identity(ctx, source, trials, seed, use_float, tol):
    """Test P(a; b) = (a_1 + ... + a_n)^|V| at random points."""
    h = _load(source)
    verifier = _make_verifier(ctx)
    holds = _run(ctx, verifier, lambda: verifier.identity(h, trials=trials, seed=seed, exact=not use_float, tol=tol))
    if holds:
        console.print(f"[green]identity holds[/] at {trials} points")
    else:
        console.print("[red]identity fails[/]")
        raise SystemExit(EXIT_NEGATIVE)


@cli.command()
@click.argument("source", shell_complete=_complete_source)
@click.option("--n", "order", type=int, default=None, help="Tournament order (default: vertex count)")
@json_option
def counts(source, order, as_json):
    """Closed-form copy counts in transitive and random tournaments."""
    h = _load(source)
    n = h.n if order is None else order
    try:
        transitive = transitive_count(h, n)
        expected = random_expected_count(h, n)
    except ValueError as e:
        _fail(e)
    agree = transitive == expected
    if as_json:
        _echo_json({"n": n, "transitive": transitive, "random": str(expected), "agree": agree})
    else:
        console.print(f"transitive: {transitive}")
        console.print(f"random:     {expected}")
        console.print(f"agree:      {'yes' if agree else 'no'}")
    if not agree:
        raise SystemExit(EXIT_NEGATIVE)
