"""Decide whether A(Γ) embeds in the group of a knot with a given JSJ descriptor.

Graphs without directed edges are ordinary RAAGs and follow the known
classification for right-angled Artin groups; graphs with a directed edge
follow the twisted classification. Both are encoded as predicates on the
component shape of Γ together with the case of the knot exterior (and, for
twisted groups, whether some Seifert piece is of even type).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .knot_jsj import (
    CableSpace,
    KnotCase,
    KnotJsj,
    TorusKnotExterior,
    even_seifert_pieces,
    has_even_seifert_piece,
    knot_case,
)
from .mixed_graph import (
    ComponentKind,
    GraphShape,
    MixedGraph,
    connected_components,
    find_triangle,
    graph_shape,
)


class DecisionError(ValueError):
    pass


class HasDirectedEdges(DecisionError):
    pass


class NoDirectedEdges(DecisionError):
    pass


class Rule(str, enum.Enum):
    TRIVIAL_GROUP = "TrivialGroup"
    UNKNOT = "Unknot"
    RAAG_HYPERBOLIC = "Thm1.1(1)"
    RAAG_TORUS = "Thm1.1(2)"
    RAAG_MIXED = "Thm1.1(3)"
    RAAG_SS = "Thm1.1(4)"
    TRAAG_HYPERBOLIC = "Thm1.2(1)"
    TRAAG_TORUS = "Thm1.2(2)"
    TRAAG_MIXED = "Thm1.2(3)"
    TRAAG_SS = "Thm1.2(4)"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    embeds: bool
    rule: Rule
    diagnostics: tuple[str, ...] = ()
    witness_available: bool = False
    # group selector of the engine that realises the sink-star embedding
    witness_group: str | None = None

    def render_machine(self) -> str:
        lines = [
            f"embeds={'true' if self.embeds else 'false'}",
            f"rule={self.rule.value}",
            f"witness={self.witness_group or 'none'}",
        ]
        lines += [f"diagnostic={d}" for d in self.diagnostics]
        return "\n".join(lines) + "\n"

    def render_human(self) -> str:
        head = "embeds" if self.embeds else "does not embed"
        lines = [f"A(Gamma) {head} in G(K)  [{self.rule.value}]"]
        lines += [f"  - {d}" for d in self.diagnostics]
        return "\n".join(lines) + "\n"


_KIND_NAMES = {
    ComponentKind.SINGLE_VERTEX: "a single vertex",
    ComponentKind.STAR: "a star",
    ComponentKind.SINK_STAR: "a sink star",
    ComponentKind.OTHER_TREE: "a tree that is not a star",
    ComponentKind.DIRECTED_OTHER: "a tree with a directed edge that is not a sink star",
    ComponentKind.CYCLIC: "not a tree",
}


def _component_notes(shape: GraphShape, bad: set[ComponentKind], why: str) -> list[str]:
    notes = []
    if shape.classes:
        for i, c in enumerate(shape.classes, start=1):
            if c.kind in bad:
                notes.append(f"component #{i} is {c} ({_KIND_NAMES[c.kind]}): {why}")
    else:
        for kind in sorted(bad, key=lambda k: k.value):
            count = _count(shape, kind)
            if count:
                notes.append(f"{count} component(s) of class {kind.value}: {why}")
    return notes


def _count(shape: GraphShape, kind: ComponentKind) -> int:
    return {
        ComponentKind.SINGLE_VERTEX: shape.isolated_count,
        ComponentKind.STAR: len(shape.star_sizes),
        ComponentKind.SINK_STAR: len(shape.sink_star_sizes),
        ComponentKind.OTHER_TREE: shape.other_tree_count,
        ComponentKind.DIRECTED_OTHER: shape.directed_other_count,
        ComponentKind.CYCLIC: shape.cyclic_count,
    }[kind]


def _kinds_outside(shape: GraphShape, allowed: set[ComponentKind]) -> set[ComponentKind]:
    return {k for k in ComponentKind if k not in allowed and _count(shape, k)}


CYCLE_NOTE = "underlying graph has a cycle, but it must be a forest"


def decide_raag(shape: GraphShape, kase: KnotCase) -> Verdict:
    if shape.has_directed_edge:
        raise HasDirectedEdges("graph has directed edges; use decide_traag")
    if shape.is_empty:
        return Verdict(True, Rule.TRIVIAL_GROUP, ("the empty graph gives the trivial group",))

    K = ComponentKind
    if kase is KnotCase.UNKNOT:
        ok = shape.component_count == 1 and shape.isolated_count == 1
        notes = [] if ok else ["the unknot group is Z; only a single vertex embeds"]
        return Verdict(ok, Rule.UNKNOT, tuple(notes))

    if kase is KnotCase.HYPERBOLIC_ONLY:
        notes = []
        bad_stars = [n for n in shape.star_sizes if n > 1]
        if bad_stars:
            notes.append(
                f"star(s) T{','.join(map(str, bad_stars))}: only isolated vertices "
                "and single edges embed"
            )
        notes += _component_notes(
            shape, _kinds_outside(shape, {K.SINGLE_VERTEX, K.STAR}),
            "only isolated vertices and single edges embed",
        )
        return Verdict(not notes, Rule.RAAG_HYPERBOLIC, tuple(notes))

    if kase is KnotCase.TORUS_KNOT:
        only_points = shape.isolated_count == shape.component_count
        single_star = shape.component_count == 1 and len(shape.star_sizes) == 1
        notes = []
        if not (only_points or single_star):
            notes.append(
                f"shape {shape.render()} is neither isolated vertices alone "
                "nor a single star"
            )
        return Verdict(not notes, Rule.RAAG_TORUS, tuple(notes))

    if kase is KnotCase.MIXED_NO_SS:
        notes = _component_notes(
            shape, _kinds_outside(shape, {K.SINGLE_VERTEX, K.STAR}),
            "every component must be a single vertex or a star",
        )
        return Verdict(not notes, Rule.RAAG_MIXED, tuple(notes))

    notes = _component_notes(shape, _kinds_outside(shape, {K.SINGLE_VERTEX, K.STAR, K.OTHER_TREE}), CYCLE_NOTE)
    return Verdict(not notes, Rule.RAAG_SS, tuple(notes))


_TRAAG_RULES = {
    KnotCase.UNKNOT: Rule.UNKNOT,
    KnotCase.HYPERBOLIC_ONLY: Rule.TRAAG_HYPERBOLIC,
    KnotCase.TORUS_KNOT: Rule.TRAAG_TORUS,
    KnotCase.MIXED_NO_SS: Rule.TRAAG_MIXED,
    KnotCase.SS_GLUING: Rule.TRAAG_SS,
}


def decide_traag(
    shape: GraphShape,
    kase: KnotCase,
    even: bool,
    witness_group: str | None = None,
) -> Verdict:
    """Verdict for a graph with at least one directed edge.

    ``witness_group`` names an engine group (``torus:r,s`` or ``cable:r,s``)
    in which the sink-star part can be realised explicitly; it is reported
    only when the verdict is positive.
    """
    if not shape.has_directed_edge:
        raise NoDirectedEdges("graph has no directed edge; use decide_raag")
    K = ComponentKind
    rule = _TRAAG_RULES[kase]
    notes: list[str] = []
    notes += _component_notes(shape, {K.CYCLIC}, CYCLE_NOTE)
    notes += _component_notes(
        shape, {K.DIRECTED_OTHER},
        "every component with a directed edge must be a sink star",
    )

    if kase is KnotCase.UNKNOT:
        notes.append("the unknot group is Z and contains no Klein bottle group")
    elif kase is KnotCase.HYPERBOLIC_ONLY:
        notes.append("no Seifert fibered piece, so no Klein bottle subgroup")
    else:
        if not even:
            notes.append("no Seifert fibered piece of even type")
        if kase is KnotCase.TORUS_KNOT:
            if not (shape.component_count == 1 and len(shape.sink_star_sizes) == 1):
                notes.append(f"shape {shape.render()} is not a single sink star")
        elif kase is KnotCase.MIXED_NO_SS:
            notes += _component_notes(
                shape, {K.OTHER_TREE},
                "without a Seifert-Seifert gluing only vertices, stars and sink stars embed",
            )

    embeds = not notes
    witness = embeds and witness_group is not None
    if witness:
        notes.append(f"witness: sink-star embedding constructible in {witness_group}")
    return Verdict(embeds, rule, tuple(notes), witness, witness_group if witness else None)


def witness_group_for(j: KnotJsj, kase: KnotCase) -> str | None:
    """Engine selector for the explicit sink-star embedding, if one applies."""
    for p in even_seifert_pieces(j):
        if kase is KnotCase.TORUS_KNOT and isinstance(p, TorusKnotExterior):
            r, s = (p.r, p.s) if p.r % 2 == 0 else (p.s, p.r)
            return f"torus:{r},{s}"
        if kase in (KnotCase.MIXED_NO_SS, KnotCase.SS_GLUING) and isinstance(p, CableSpace):
            return f"cable:{p.winding},{p.slope}"
    return None


def decide(g: MixedGraph, j: KnotJsj) -> Verdict:
    shape = graph_shape(g)
    kase = knot_case(j)
    if shape.is_empty:
        return Verdict(True, Rule.TRIVIAL_GROUP, ("the empty graph gives the trivial group",))
    if not g.has_directed_edge:
        verdict = decide_raag(shape, kase)
    else:
        verdict = decide_traag(
            shape, kase, has_even_seifert_piece(j), witness_group_for(j, kase)
        )
    extra = triangle_notes(g)
    if extra and not verdict.embeds:
        verdict = Verdict(False, verdict.rule, verdict.diagnostics + tuple(extra))
    return verdict


def triangle_notes(g: MixedGraph) -> list[str]:
    notes = []
    for comp in connected_components(g):
        tri = find_triangle(comp)
        if tri:
            notes.append(
                "triangle {} in the underlying graph: no knot group contains "
                "A(Gamma) for a triangle of any orientation type".format("-".join(tri))
            )
    return notes
