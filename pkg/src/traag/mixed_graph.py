"""Mixed graphs: vertices, undirected edges and directed edges.

A directed edge ``(x, y)`` has tail ``x`` and head ``y``.  Graphs are
immutable; edges are kept in a canonical order derived from the vertex order
so that equal graphs compare equal and render identically.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for mixed-graph errors."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class UndeclaredVertex(GraphError):
    pass


class GraphSyntaxError(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class NotConnected(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


@dataclass(frozen=True)
class MixedGraph:
    vertices: tuple[str, ...] = ()
    undirected_edges: tuple[tuple[str, str], ...] = ()
    directed_edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("repeated vertex label")
        index = {v: i for i, v in enumerate(verts)}
        seen: set[frozenset[str]] = set()

        def check(a: str, b: str) -> None:
            for v in (a, b):
                if v not in index:
                    raise UndeclaredVertex(f"edge endpoint {v!r} is not a vertex")
            if a == b:
                raise LoopEdge(f"loop at {a!r}")
            key = frozenset((a, b))
            if key in seen:
                raise DuplicateEdge(f"more than one edge joins {a!r} and {b!r}")
            seen.add(key)

        und = []
        for a, b in self.undirected_edges:
            check(a, b)
            und.append((a, b) if index[a] < index[b] else (b, a))
        dirs = []
        for a, b in self.directed_edges:
            check(a, b)
            dirs.append((a, b))
        und.sort(key=lambda e: (index[e[0]], index[e[1]]))
        dirs.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "undirected_edges", tuple(und))
        object.__setattr__(self, "directed_edges", tuple(dirs))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.undirected_edges) + len(self.directed_edges)

    @property
    def has_directed_edge(self) -> bool:
        return bool(self.directed_edges)

    def neighbors(self, v: str) -> list[str]:
        out = []
        for a, b in self.undirected_edges + self.directed_edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.undirected_edges + self.directed_edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def __str__(self) -> str:
        return serialize_graph(self)


def parse_graph(text: str, strict: bool = False) -> MixedGraph:
    """Parse the line format ``vertex a`` / ``a -- b`` / ``a -> b``.

    With ``strict`` every edge endpoint must be declared by an earlier or
    later ``vertex`` line.
    """
    vertices: list[str] = []
    declared: set[str] = set()
    undirected: list[tuple[str, str]] = []
    directed: list[tuple[str, str]] = []
    seen: dict[frozenset[str], int] = {}
    edge_lines: list[tuple[int, str, str]] = []

    def add_vertex(v: str) -> None:
        if v not in declared:
            declared.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise GraphSyntaxError(f"expected 'vertex <label>', got {line!r}", lineno)
            add_vertex(tokens[1])
            continue
        if len(tokens) != 3 or tokens[1] not in ("--", "->"):
            raise GraphSyntaxError(f"cannot parse {line!r}", lineno)
        a, arrow, b = tokens
        if a == b:
            raise LoopEdge(f"loop at {a!r}", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(
                f"{a!r} and {b!r} are already joined (line {seen[key]})", lineno
            )
        seen[key] = lineno
        edge_lines.append((lineno, a, b))
        if not strict:
            add_vertex(a)
            add_vertex(b)
        (directed if arrow == "->" else undirected).append((a, b))

    if strict:
        for lineno, a, b in edge_lines:
            for v in (a, b):
                if v not in declared:
                    raise UndeclaredVertex(f"vertex {v!r} is not declared", lineno)
    return MixedGraph(tuple(vertices), tuple(undirected), tuple(directed))


def serialize_graph(g: MixedGraph) -> str:
    # declaring every vertex keeps first-appearance order on re-parse
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{a} -- {b}" for a, b in g.undirected_edges]
    lines += [f"{a} -> {b}" for a, b in g.directed_edges]
    return "\n".join(lines) + ("\n" if lines else "")


def underlying_graph(g: MixedGraph) -> MixedGraph:
    """Forget the orientation of every directed edge."""
    return MixedGraph(g.vertices, g.undirected_edges + g.directed_edges, ())


def induced_subgraph(g: MixedGraph, u: Iterable[str]) -> MixedGraph:
    keep = set(u)
    unknown = keep.difference(g.vertices)
    if unknown:
        raise UnknownVertex(f"not vertices of the graph: {sorted(unknown)}")
    return MixedGraph(
        tuple(v for v in g.vertices if v in keep),
        tuple(e for e in g.undirected_edges if e[0] in keep and e[1] in keep),
        tuple(e for e in g.directed_edges if e[0] in keep and e[1] in keep),
    )


def _components_vertex_sets(g: MixedGraph) -> Iterator[list[str]]:
    adj = g.adjacency()
    seen: set[str] = set()
    # vertices come in first-appearance order, so each component is emitted
    # when its earliest vertex is reached
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = []
        stack = [start]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        yield comp


def connected_components(g: MixedGraph) -> list[MixedGraph]:
    """Components in order of their least vertex (by vertex order)."""
    return [induced_subgraph(g, comp) for comp in _components_vertex_sets(g)]


def is_connected(g: MixedGraph) -> bool:
    return len(list(_components_vertex_sets(g))) == 1


class ComponentKind(enum.Enum):
    SINGLE_VERTEX = "single_vertex"
    STAR = "star"
    SINK_STAR = "sink_star"
    OTHER_TREE = "other_tree"
    DIRECTED_OTHER = "directed_other"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class ComponentClass:
    kind: ComponentKind
    size: int = 0  # leaf count for stars and sink stars, 0 otherwise
    # only informative for cyclic components, which may or may not carry arcs
    directed: bool = field(default=False, compare=False)

    def __str__(self) -> str:
        if self.kind in (ComponentKind.STAR, ComponentKind.SINK_STAR):
            return f"{self.kind.value}({self.size})"
        return self.kind.value

    @property
    def has_directed_edge(self) -> bool:
        return self.directed or self.kind in (ComponentKind.SINK_STAR, ComponentKind.DIRECTED_OTHER)


SINGLE_VERTEX = ComponentClass(ComponentKind.SINGLE_VERTEX)
OTHER_TREE = ComponentClass(ComponentKind.OTHER_TREE)
DIRECTED_OTHER = ComponentClass(ComponentKind.DIRECTED_OTHER)
CYCLIC = ComponentClass(ComponentKind.CYCLIC)


def Star(n: int) -> ComponentClass:
    return ComponentClass(ComponentKind.STAR, n)


def SinkStar(n: int) -> ComponentClass:
    return ComponentClass(ComponentKind.SINK_STAR, n)


def classify_component(g: MixedGraph) -> ComponentClass:
    n_vertices = len(g)
    if n_vertices == 0:
        raise EmptyGraph("cannot classify the empty graph")
    if not is_connected(g):
        raise NotConnected("graph has more than one component")
    if n_vertices == 1:
        return SINGLE_VERTEX
    if g.edge_count >= n_vertices:
        return ComponentClass(ComponentKind.CYCLIC, directed=g.has_directed_edge)
    # connected with |E| = |V| - 1: a tree
    leaves = n_vertices - 1
    if not g.directed_edges:
        degrees = Counter(v for e in g.undirected_edges for v in e)
        if max(degrees.values()) == leaves:
            return Star(leaves)
        return OTHER_TREE
    if not g.undirected_edges:
        heads = {h for _, h in g.directed_edges}
        if len(heads) == 1:
            return SinkStar(leaves)
    return DIRECTED_OTHER


@dataclass(frozen=True)
class GraphShape:
    isolated_count: int = 0
    star_sizes: tuple[int, ...] = ()
    sink_star_sizes: tuple[int, ...] = ()
    other_tree_count: int = 0
    directed_other_count: int = 0
    cyclic_count: int = 0
    # cyclic components carrying a directed edge (already counted in cyclic_count)
    directed_cyclic_count: int = 0
    # per-component classes in component order; empty when built from counts
    classes: tuple[ComponentClass, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "star_sizes", tuple(sorted(self.star_sizes)))
        object.__setattr__(self, "sink_star_sizes", tuple(sorted(self.sink_star_sizes)))

    @property
    def component_count(self) -> int:
        return (
            self.isolated_count
            + len(self.star_sizes)
            + len(self.sink_star_sizes)
            + self.other_tree_count
            + self.directed_other_count
            + self.cyclic_count
        )

    @property
    def is_empty(self) -> bool:
        return self.component_count == 0

    @property
    def has_directed_edge(self) -> bool:
        return (
            bool(self.sink_star_sizes)
            or self.directed_other_count > 0
            or self.directed_cyclic_count > 0
        )

    @property
    def is_forest(self) -> bool:
        return self.cyclic_count == 0

    def render(self) -> str:
        """Disjoint-union notation, e.g. ``2P1 + T2 + S3``."""
        if self.is_empty:
            return "empty"
        parts = []
        if self.isolated_count:
            parts.append(f"{self.isolated_count if self.isolated_count > 1 else ''}P1")
        parts += [f"T{n}" for n in self.star_sizes]
        parts += [f"S{n}" for n in self.sink_star_sizes]
        parts += ["other_tree"] * self.other_tree_count
        parts += ["directed_other"] * self.directed_other_count
        parts += ["cyclic"] * self.cyclic_count
        return " + ".join(parts)


def shape_from_classes(classes: Iterable[ComponentClass]) -> GraphShape:
    classes = tuple(classes)
    by_kind = Counter(c.kind for c in classes)
    return GraphShape(
        isolated_count=by_kind[ComponentKind.SINGLE_VERTEX],
        star_sizes=tuple(c.size for c in classes if c.kind is ComponentKind.STAR),
        sink_star_sizes=tuple(c.size for c in classes if c.kind is ComponentKind.SINK_STAR),
        other_tree_count=by_kind[ComponentKind.OTHER_TREE],
        directed_other_count=by_kind[ComponentKind.DIRECTED_OTHER],
        cyclic_count=by_kind[ComponentKind.CYCLIC],
        directed_cyclic_count=sum(
            1 for c in classes if c.kind is ComponentKind.CYCLIC and c.directed
        ),
        classes=classes,
    )


def graph_shape(g: MixedGraph) -> GraphShape:
    return shape_from_classes(classify_component(c) for c in connected_components(g))


def find_triangle(g: MixedGraph) -> tuple[str, str, str] | None:
    """First triangle of the underlying graph, in vertex order, if any."""
    adj = g.adjacency()
    order = {v: i for i, v in enumerate(g.vertices)}
    for a in g.vertices:
        for b in sorted(adj[a], key=order.__getitem__):
            if order[b] <= order[a]:
                continue
            for c in sorted(adj[a] & adj[b], key=order.__getitem__):
                if order[c] > order[b]:
                    return (a, b, c)
    return None
