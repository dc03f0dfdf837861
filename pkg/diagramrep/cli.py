# diagramrep/cli.py
import importlib.metadata
from typing import Annotated, Any, List, Optional

import typer

from . import core, verify
from .config import load_settings

app = typer.Typer(
    name="diagramrep",
    help="Compose partition, Brauer and Temperley-Lieb diagrams and compute their matrix representations.",
)

DiagramArg = Annotated[str, typer.Argument(help="Diagram in text form, e.g. \"2,2:{1,1'}{2,2'}\".")]
SemiringOpt = Annotated[
    Optional[str],
    typer.Option("--semiring", "-s", help="boolean, nat, int, rational, tropical or mod:2^k."),
]
OrderOpt = Annotated[
    Optional[str],
    typer.Option("--order", "-o", help="Subset ordering for rows and columns: binary, parity or evengap."),
]
FormatOpt = Annotated[
    Optional[str],
    typer.Option("--format", "-f", help="Output format: text, json, csv (matrices) or relation (zero-one pairs)."),
]
MaxSizeOpt = Annotated[
    Optional[int],
    typer.Option("--max-size", help="Enumeration guard on m+n (overrides DIAGRAMREP_MAX_SIZE)."),
]
SeedOpt = Annotated[Optional[int], typer.Option("--seed", help="Seed for random sampling.")]


def get_suite_names() -> List[str]:
    """Suite names for autocomplete."""
    return list(verify.SUITES)


def version_callback(value: bool):
    if value:
        try:
            version = importlib.metadata.version("diagramrep")
        except importlib.metadata.PackageNotFoundError:
            version = "unknown (not installed)"
        typer.echo(f"diagramrep version: {version}")
        raise typer.Exit()


@app.callback()
def main_callback(
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            "-v",
            callback=version_callback,
            is_eager=True,
            help="Show version and exit.",
        ),
    ] = False,
):
    """
    diagramrep: exact diagram categories and their semiring representations
    """
    pass


def _run(subcommand: str, inputs: List[str], options: Optional[dict] = None, **overrides: Any) -> None:
    settings = load_settings().with_overrides(**overrides)
    code = core.run(core.Command(subcommand, tuple(inputs), settings, options or {}))
    if code:
        raise typer.Exit(code)


@app.command()
def compose(
    diagrams: Annotated[
        List[str],
        typer.Argument(help="Two or more diagrams, composed left to right. Twisted forms: '(i, m,n:...)' or 'zero:m,n'."),
    ],
    depth: Annotated[
        Optional[int],
        typer.Option("--depth", "-d", help="Truncation depth d: twists above d become zero."),
    ] = None,
    fmt: FormatOpt = None,
):
    """
    Compose diagrams and report the product with the number of floating components.
    """
    _run("compose", diagrams, {"depth": depth}, format=fmt)


@app.command()
def rep(
    diagram: DiagramArg,
    semiring: SemiringOpt = None,
    order: OrderOpt = None,
    fmt: FormatOpt = None,
):
    """
    Emit the 2^m x 2^n matrix of a partition diagram.
    """
    _run("rep", [diagram], {"semiring": semiring}, order=order, format=fmt)


@app.command(name="reduce")
def reduce_(
    diagram: DiagramArg,
    parity: Annotated[str, typer.Option("--parity", "-p", help="odd or even cardinality subsets.")] = "odd",
    semiring: SemiringOpt = None,
    fmt: FormatOpt = None,
):
    """
    Emit the odd or even block of the matrix of a Brauer diagram.
    """
    _run("reduce", [diagram], {"semiring": semiring, "parity": parity}, format=fmt)


@app.command()
def mu(
    diagram: DiagramArg,
    even: Annotated[bool, typer.Option("--even", help="Use all even-cardinality subsets instead of even-gap ones.")] = False,
    semiring: SemiringOpt = None,
    fmt: FormatOpt = None,
):
    """
    Emit the Fibonacci-dimensional matrix of a Temperley-Lieb diagram.
    """
    _run("mu", [diagram], {"semiring": semiring, "even": even}, format=fmt)


@app.command()
def rho(
    element: Annotated[str, typer.Argument(help="Twisted element '(i, m,n:...)', 'zero:m,n' or a bare diagram.")],
    depth: Annotated[
        Optional[int],
        typer.Option("--depth", "-d", help="Truncation depth d (uses Z/2^(d+1) unless --semiring is given)."),
    ] = None,
    parity: Annotated[
        Optional[str],
        typer.Option("--parity", "-p", help="Reduce a twisted Brauer element to its odd or even block."),
    ] = None,
    semiring: SemiringOpt = None,
    fmt: FormatOpt = None,
):
    """
    Emit 2^i times the matrix of a twisted element (integers by default).
    """
    _run("rho", [element], {"semiring": semiring, "depth": depth, "parity": parity}, format=fmt)


@app.command()
def linear(
    combinations: Annotated[
        List[str],
        typer.Argument(help="Linear combinations such as \"2,2: 3*{1,2}{1',2'} + -1*{1,1'}{2,2'}\", composed left to right."),
    ],
    delta: Annotated[str, typer.Option("--delta", help="Value of a floating component, an integer or a fraction such as 1/2.")] = "2",
    phi: Annotated[bool, typer.Option("--phi", help="Emit the matrix of the result instead.")] = False,
    semiring: SemiringOpt = None,
    fmt: FormatOpt = None,
):
    """
    Compose linear combinations of partition diagrams.
    """
    _run("linear", combinations, {"delta": delta, "phi": phi, "semiring": semiring}, format=fmt)


@app.command(name="enumerate")
def enumerate_(
    family: Annotated[str, typer.Argument(help="P, B or TL.")],
    m: Annotated[int, typer.Argument(help="Upper row size.")],
    n: Annotated[int, typer.Argument(help="Lower row size.")],
    count: Annotated[bool, typer.Option("--count", "-c", help="Only print the number of diagrams.")] = False,
    max_size: MaxSizeOpt = None,
    fmt: FormatOpt = None,
):
    """
    List every diagram of a hom-set in canonical order.
    """
    _run("enumerate", [family, str(m), str(n)], {"count": count}, max_size=max_size, format=fmt)


@app.command(name="verify")
def verify_(
    suites: Annotated[
        Optional[List[str]],
        typer.Argument(help="Suites to run (all when omitted).", autocompletion=get_suite_names),
    ] = None,
    list_: Annotated[bool, typer.Option("--list", "-l", help="List the available suites.")] = False,
    jobs: Annotated[Optional[int], typer.Option("--jobs", "-j", help="Worker processes.")] = None,
    random_cases: Annotated[
        Optional[int], typer.Option("--random-cases", help="Random samples per randomized check.")
    ] = None,
    semiring: SemiringOpt = None,
    seed: SeedOpt = None,
    fmt: FormatOpt = None,
):
    """
    Run verification suites and print a summary.
    Exits 1 if any suite fails and 4 if a suite does not apply to --semiring.
    """
    _run(
        "verify",
        suites or [],
        {"list": list_, "semiring": semiring},
        jobs=jobs,
        random_cases=random_cases,
        seed=seed,
        format=fmt,
    )


@app.command()
def render(diagram: DiagramArg):
    """
    Draw a diagram as two labelled rows with a letter per block.
    """
    _run("render", [diagram])


# This is for `python -m diagramrep`
if __name__ == "__main__":
    app()
