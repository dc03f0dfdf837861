"""Command dispatch for the diagramrep CLI: parse inputs, call the library, print."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import typer
from rich.console import Console
from rich.table import Table

from . import diagrams, formats, linear, rep, verify
from .config import Settings
from .diagrams import Family, Partition, TwistedElement
from .errors import (
    DiagramError,
    DiagramParseError,
    RepresentationInapplicableError,
    ShapeMismatchError,
    SizeGuardError,
)
from .matrices import IndexedMatrix, OrderKind
from .semiring import Semiring, get_semiring, integer_mod

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_INAPPLICABLE = 4
EXIT_SHAPE = 5

SUBCOMMANDS = ("compose", "rep", "reduce", "mu", "rho", "linear", "enumerate", "verify", "render")


@dataclass(frozen=True)
class Command:
    subcommand: str
    inputs: Tuple[str, ...] = ()
    settings: Settings = field(default_factory=Settings)
    options: Dict[str, Any] = field(default_factory=dict)

    def option(self, key: str, default: Any = None) -> Any:
        value = self.options.get(key)
        return default if value is None else value


def _semiring(cmd: Command, fallback: Optional[str] = None) -> Semiring:
    return get_semiring(cmd.option("semiring") or fallback or cmd.settings.semiring)


def _diagram(text: str) -> Partition:
    return formats.parse_partition(text)


def _emit_matrix(M: IndexedMatrix, fmt: str) -> None:
    typer.echo(formats.format_matrix(M, fmt))


def _emit_json(obj: Any) -> None:
    typer.echo(json.dumps(obj))


# Subcommands
def compose(cmd: Command) -> int:
    if len(cmd.inputs) < 2:
        raise DiagramParseError("compose needs at least two diagrams", 0)
    depth = cmd.option("depth")
    twisted = depth is not None or any(t.lstrip().startswith(("(", "zero")) for t in cmd.inputs)
    if twisted:
        xs = [formats.parse_twisted(t) for t in cmd.inputs]
        out = xs[0]
        for x in xs[1:]:
            out = diagrams.twisted_compose(out, x, depth)
        if cmd.settings.format == "json":
            payload: Dict[str, Any] = {"zero": True, "m": out.m, "n": out.n}
            if isinstance(out, TwistedElement):
                payload = {"twist": out.twist, "product": formats.partition_to_json(out.diagram)}
            _emit_json(payload)
        else:
            typer.echo(formats.format_twisted(out))
        return EXIT_OK

    parts = [_diagram(t) for t in cmd.inputs]
    product, floats = parts[0], 0
    for b in parts[1:]:
        step = diagrams.compose(product, b)
        product, floats = step.product, floats + step.floats
    if cmd.settings.format == "json":
        _emit_json({"product": formats.partition_to_json(product), "phi": floats})
    else:
        typer.echo(str(product))
        typer.echo(f"phi={floats}")
    return EXIT_OK


def rep_command(cmd: Command) -> int:
    a = _diagram(cmd.inputs[0])
    M = rep.phi(a, _semiring(cmd), OrderKind(cmd.settings.order))
    _emit_matrix(M, cmd.settings.format)
    return EXIT_OK


def reduce_command(cmd: Command) -> int:
    a = _diagram(cmd.inputs[0])
    _emit_matrix(rep.reduced(a, cmd.option("parity", rep.ODD), _semiring(cmd)), cmd.settings.format)
    return EXIT_OK


def mu_command(cmd: Command) -> int:
    a = _diagram(cmd.inputs[0])
    S = _semiring(cmd)
    M = rep.mu_even(a, S) if cmd.option("even", False) else rep.mu(a, S)
    _emit_matrix(M, cmd.settings.format)
    return EXIT_OK


def rho_command(cmd: Command) -> int:
    x = formats.parse_twisted(cmd.inputs[0])
    depth, parity = cmd.option("depth"), cmd.option("parity")
    # rho needs characteristic 0 and rho_d needs Z/2^(d+1), so the boolean default never applies.
    S = get_semiring(cmd.option("semiring")) if cmd.option("semiring") else (
        integer_mod(2 ** (depth + 1)) if depth is not None else get_semiring("int")
    )
    if parity:
        M = rep.rho_reduced(x, parity, S, depth)
    elif depth is not None:
        M = rep.rho_d(x, depth, S)
    else:
        M = rep.rho(x, S)
    _emit_matrix(M, cmd.settings.format)
    return EXIT_OK


def _delta(text: Any) -> Fraction:
    try:
        return Fraction(str(text).replace(" ", ""))
    except (ValueError, ZeroDivisionError) as e:
        raise DiagramParseError(f"Invalid delta {text!r}", 0) from e


def linear_command(cmd: Command) -> int:
    combos = [formats.parse_linear(t) for t in cmd.inputs]
    delta = _delta(cmd.option("delta", "2"))
    out = combos[0]
    for v in combos[1:]:
        out = linear.linear_compose(out, v, delta)
    if cmd.option("phi", False):
        _emit_matrix(linear.phi_linear(out, _semiring(cmd, "rational")), cmd.settings.format)
    elif cmd.settings.format == "json":
        _emit_json(formats.linear_to_json(out))
    else:
        typer.echo(formats.format_linear(out))
    return EXIT_OK


def enumerate_command(cmd: Command) -> int:
    family = Family.parse(cmd.inputs[0])
    m, n = int(cmd.inputs[1]), int(cmd.inputs[2])
    hom = diagrams.enumerate_diagrams(family, m, n, cmd.settings.max_size)
    if cmd.option("count", False):
        typer.echo(str(len(hom)))
    elif cmd.settings.format == "json":
        _emit_json([formats.partition_to_json(a) for a in hom])
    else:
        for a in hom:
            typer.echo(str(a))
    return EXIT_OK


def render_command(cmd: Command) -> int:
    typer.echo(formats.render_ascii(_diagram(cmd.inputs[0])))
    return EXIT_OK


def list_suites() -> None:
    console = Console()
    table = Table(title="Verification Suites")
    table.add_column("Suite", style="cyan", no_wrap=True)
    table.add_column("Needs", style="magenta")
    table.add_column("Description")
    for suite in verify.SUITES.values():
        table.add_row(suite.name, suite.requires or "", suite.description)
    console.print(table)


def _print_reports(reports: List[verify.VerificationReport]) -> None:
    console = Console()
    table = Table(title="Verification Results")
    table.add_column("Suite", style="cyan", no_wrap=True)
    table.add_column("Status", no_wrap=True)
    table.add_column("Cases", justify="right")
    table.add_column("Failures", justify="right", style="red")
    table.add_column("Time", justify="right", style="dim")
    table.add_column("Seed", justify="right", style="dim")
    styles = {"pass": "green", "fail": "bold red", "inapplicable": "yellow"}
    for r in reports:
        table.add_row(
            r.suite,
            f"[{styles[r.status]}]{r.status}[/]",
            str(r.cases),
            str(r.failure_count),
            f"{r.wall_time:.2f}s",
            str(r.seed),
        )
    console.print(table)

    for r in reports:
        if r.inapplicable:
            typer.secho(f"{r.suite}: inapplicable ({r.inapplicable})", fg="yellow")
        for f in r.failures:
            typer.secho(f"{r.suite} #{f.case}: {f.message}: {f.counterexample}", fg="red", err=True)
        for note in r.notes:
            typer.echo(f"{r.suite}: {note}")


def verify_command(cmd: Command) -> int:
    if cmd.option("list", False):
        list_suites()
        return EXIT_OK
    names = list(cmd.inputs) or list(cmd.settings.suites)
    reports = verify.run_suites(names, cmd.settings, cmd.option("semiring"), cmd.settings.jobs)
    if cmd.settings.format == "json":
        _emit_json([r.to_dict() for r in reports])
    else:
        _print_reports(reports)
    if any(r.status == "fail" for r in reports):
        return EXIT_VERIFY_FAILED
    if any(r.status == "inapplicable" for r in reports):
        return EXIT_INAPPLICABLE
    typer.secho(f"All {len(reports)} suites passed.", fg="bright_green", bold=True)
    return EXIT_OK


HANDLERS: Dict[str, Callable[[Command], int]] = {
    "compose": compose,
    "rep": rep_command,
    "reduce": reduce_command,
    "mu": mu_command,
    "rho": rho_command,
    "linear": linear_command,
    "enumerate": enumerate_command,
    "verify": verify_command,
    "render": render_command,
}

# Most specific first: DiagramParseError and friends are all ValueErrors.
ERROR_CODES: Tuple[Tuple[type, int], ...] = (
    (DiagramParseError, EXIT_PARSE),
    (SizeGuardError, EXIT_GUARD),
    (RepresentationInapplicableError, EXIT_INAPPLICABLE),
    (ShapeMismatchError, EXIT_SHAPE),
    (DiagramError, EXIT_PARSE),
    (KeyError, EXIT_PARSE),
    (ValueError, EXIT_PARSE),
)


def exit_code_for(error: Exception) -> int:
    for kind, code in ERROR_CODES:
        if isinstance(error, kind):
            return code
    raise error


def run(cmd: Command) -> int:
    """Execute a command and return its exit status; errors are printed, not raised."""
    if cmd.subcommand not in HANDLERS:
        typer.secho(f"Error: Unknown subcommand '{cmd.subcommand}'.", fg="red", err=True)
        return EXIT_PARSE
    try:
        return HANDLERS[cmd.subcommand](cmd)
    except (ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        typer.secho(f"Error: {message}", fg="red", err=True)
        return exit_code_for(e)
