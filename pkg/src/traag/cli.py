"""Command-line interface.

Exit codes: ``decide`` returns 0 when A(Gamma) embeds and 1 when it does not;
``verify-embed`` returns 0 when the relators hold and the ball has no kernel
element, 1 otherwise.  Every command returns 2 on bad input.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import amalgam, embedding
from .decision import decide as decide_verdict
from .decision import triangle_notes
from .knot_jsj import JsjError, parse_jsj
from .mixed_graph import GraphError, connected_components, graph_shape, parse_graph
from .presentation import abelianization, traag_presentation


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}")
        raise  # unreachable


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        _fail(f"{path}: {exc}")


def _load_jsj(path: str):
    try:
        return parse_jsj(_read(path))
    except JsjError as exc:
        _fail(f"{path}: {exc}")


machine_option = click.option(
    "--machine", is_flag=True, default=False, help="Line-oriented key=value output."
)


@click.group()
@click.option("--machine", "machine_all", is_flag=True, default=False,
              help="Machine mode for every command.")
@click.pass_context
def main(ctx: click.Context, machine_all: bool) -> None:
    """Embeddings of twisted right-angled Artin groups into knot groups."""
    ctx.obj = {"machine": machine_all}


def _machine(ctx: click.Context, flag: bool) -> bool:
    return flag or bool(ctx.obj and ctx.obj.get("machine"))


@main.command()
@click.argument("graph", type=click.Path())
@machine_option
@click.pass_context
def classify(ctx: click.Context, graph: str, machine: bool) -> None:
    """Classify the components of a mixed graph."""
    g = _load_graph(graph)
    shape = graph_shape(g)
    comps = connected_components(g)
    notes = triangle_notes(g)
    if _machine(ctx, machine):
        click.echo(f"shape={shape.render()}")
        click.echo(f"components={shape.component_count}")
        click.echo(f"isolated={shape.isolated_count}")
        click.echo(f"stars={','.join(map(str, shape.star_sizes))}")
        click.echo(f"sink_stars={','.join(map(str, shape.sink_star_sizes))}")
        click.echo(f"other_trees={shape.other_tree_count}")
        click.echo(f"directed_other={shape.directed_other_count}")
        click.echo(f"cyclic={shape.cyclic_count}")
        for comp, cls in zip(comps, shape.classes):
            click.echo(f"component={cls} vertices={','.join(comp.vertices)}")
        for note in notes:
            click.echo(f"diagnostic={note}")
        return
    if shape.is_empty:
        click.echo("empty")
        return
    click.echo(f"shape: {shape.render()}")
    for comp, cls in zip(comps, shape.classes):
        click.echo(f"  {cls}: {{{', '.join(comp.vertices)}}}")
    for note in notes:
        click.echo(f"  note: {note}")


@main.command()
@click.argument("graph", type=click.Path())
@click.argument("jsj", type=click.Path())
@machine_option
@click.pass_context
def decide(ctx: click.Context, graph: str, jsj: str, machine: bool) -> None:
    """Decide whether A(GRAPH) embeds in the knot group described by JSJ."""
    g = _load_graph(graph)
    j = _load_jsj(jsj)
    try:
        verdict = decide_verdict(g, j)
    except JsjError as exc:
        _fail(f"{jsj}: {exc}")
    text = verdict.render_machine() if _machine(ctx, machine) else verdict.render_human()
    click.echo(text, nl=False)
    sys.exit(0 if verdict.embeds else 1)


@main.command()
@click.argument("word")
@click.option("--group", "selector", required=True, help="torus:r,s or cable:r,s")
@machine_option
@click.pass_context
def nf(ctx: click.Context, word: str, selector: str, machine: bool) -> None:
    """Normal form of WORD in a torus knot or cable space group."""
    try:
        spec = amalgam.parse_group(selector)
        w = amalgam.parse_word(word, spec)
    except amalgam.EngineError as exc:
        _fail(str(exc))
    form = amalgam.normal_form(w)
    if _machine(ctx, machine):
        click.echo(f"group={spec.selector}")
        click.echo(f"central_exp={form.central_exp}")
        click.echo(f"syllables={amalgam.syllable_length(form)}")
        click.echo(f"identity={'true' if form.is_identity else 'false'}")
        click.echo("nf=" + " ".join(amalgam.format_letters(s) for s in form.syllables))
    else:
        click.echo(str(form))


@main.command("verify-embed")
@click.option("--n", "n", type=int, required=True, help="Number of sink-star leaves.")
@click.option("--group", "selector", required=True, help="torus:r,s or cable:r,s")
@click.option("--bound", type=int, required=True, help="Ball radius |k| + len(f).")
@machine_option
@click.pass_context
def verify_embed(ctx: click.Context, n: int, selector: str, bound: int, machine: bool) -> None:
    """Check the sink-star embedding: relators exactly, injectivity on a ball."""
    if bound < 0:
        _fail("bound must be non-negative")
    try:
        spec = amalgam.parse_group(selector)
        asg = embedding.build_assignment(n, spec)
    except (amalgam.EngineError, embedding.EmbeddingError) as exc:
        _fail(f"{type(exc).__name__}: {exc}")
    relators_ok = embedding.verify_relators(asg, embedding.sink_star_graph(n))
    mach = _machine(ctx, machine)
    if not relators_ok:
        click.echo("relators=fail" if mach else "relators: FAIL")
        sys.exit(1)
    report = embedding.verify_injectivity_bounded(asg, n, bound)
    if mach:
        click.echo(f"group={spec.selector}")
        click.echo(f"n={n}")
        click.echo(f"bound={bound}")
        click.echo("relators=pass")
        click.echo(f"checked={report.checked}")
        click.echo(f"violations={len(report.violations)}")
        for v in report.violations:
            click.echo(f"violation={v}")
    else:
        click.echo(f"A(S_{n}) -> {spec.selector}: a -> x^{spec.r // 2}, b_i -> [x^{spec.r // 2}, (yxy)^i]")
        click.echo("relators: pass")
        click.echo(report.render(), nl=False)
    sys.exit(0 if report.ok else 1)


@main.command()
@click.argument("graph", type=click.Path())
@machine_option
@click.pass_context
def abelianize(ctx: click.Context, graph: str, machine: bool) -> None:
    """Abelianization of A(GRAPH)."""
    g = _load_graph(graph)
    inv = abelianization(traag_presentation(g))
    if _machine(ctx, machine):
        click.echo(f"free_rank={inv.free_rank}")
        click.echo(f"torsion={','.join(map(str, inv.torsion))}")
    else:
        click.echo(str(inv))


if __name__ == "__main__":
    main()
