"""JSJ descriptors of knot exteriors.

A descriptor lists the pieces of the torus decomposition, the tree of
gluings between them and the piece that contains the knot's boundary torus.
Nothing here checks that a descriptor is realised by an actual knot; only the
combinatorial constraints the embedding theorems read are validated.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Union


class JsjError(ValueError):
    pass


class NotATree(JsjError):
    pass


class BadParameters(JsjError):
    pass


class MissingBoundary(JsjError):
    pass


class JsjSyntaxError(JsjError):
    pass


class NotSeifert(JsjError):
    pass


class Inconsistent(JsjError):
    pass


@dataclass(frozen=True)
class Hyperbolic:
    def describe(self) -> str:
        return "hyperbolic"


@dataclass(frozen=True)
class TorusKnotExterior:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2 or math.gcd(self.r, self.s) != 1:
            raise BadParameters(f"torus knot ({self.r},{self.s}) needs r,s >= 2 and gcd 1")

    def describe(self) -> str:
        return f"torus {self.r} {self.s}"


@dataclass(frozen=True)
class CableSpace:
    winding: int
    slope: int

    def __post_init__(self):
        if self.winding < 2 or self.slope == 0 or math.gcd(self.winding, self.slope) != 1:
            raise BadParameters(
                f"cable ({self.winding},{self.slope}) needs winding >= 2, "
                "nonzero slope and gcd 1"
            )

    def describe(self) -> str:
        return f"cable {self.winding} {self.slope}"


@dataclass(frozen=True)
class ComposingSpace:
    boundary_count: int

    def __post_init__(self):
        if self.boundary_count < 3:
            raise BadParameters("a composing space has at least 3 boundary tori")

    def describe(self) -> str:
        return f"composing {self.boundary_count}"


Piece = Union[Hyperbolic, TorusKnotExterior, CableSpace, ComposingSpace]


def is_seifert(p: Piece) -> bool:
    return not isinstance(p, Hyperbolic)


def is_even_type(p: Piece) -> bool:
    if isinstance(p, Hyperbolic):
        raise NotSeifert("a hyperbolic piece has no Seifert fibration")
    if isinstance(p, TorusKnotExterior):
        return p.r % 2 == 0 or p.s % 2 == 0
    if isinstance(p, CableSpace):
        return p.winding % 2 == 0
    return False  # composing spaces have no exceptional fiber


@dataclass(frozen=True)
class KnotJsj:
    pieces: tuple[Piece, ...] = ()
    gluings: tuple[tuple[int, int], ...] = ()
    boundary_piece: int | None = None
    unknot: bool = False

    def __post_init__(self):
        pieces = tuple(self.pieces)
        glue = sorted({(min(e), max(e)) for e in self.gluings})
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "gluings", tuple(glue))
        if self.unknot:
            if pieces or glue or self.boundary_piece is not None:
                raise JsjError("the unknot descriptor carries no pieces")
            return
        if not pieces:
            raise JsjError("a nontrivial knot exterior needs at least one piece")
        if self.boundary_piece is None:
            if len(pieces) > 1:
                raise MissingBoundary("several pieces but no 'boundary' statement")
            object.__setattr__(self, "boundary_piece", 0)
        if not 0 <= self.boundary_piece < len(pieces):
            raise MissingBoundary(f"boundary piece {self.boundary_piece} does not exist")
        for i, j in glue:
            if i == j or not (0 <= i < len(pieces) and 0 <= j < len(pieces)):
                raise NotATree(f"bad gluing {i} {j}")
        if len(glue) != len(pieces) - 1 or not _connected(len(pieces), glue):
            raise NotATree("gluing graph is not a tree on the pieces")
        deg = self.degrees()
        for i, p in enumerate(pieces):
            if isinstance(p, ComposingSpace):
                expected = p.boundary_count - (1 if i == self.boundary_piece else 0)
                if deg[i] != expected:
                    raise BadParameters(
                        f"composing space #{i} has {p.boundary_count} boundary tori "
                        f"but {deg[i]} gluings"
                    )

    def degrees(self) -> list[int]:
        deg = [0] * len(self.pieces)
        for i, j in self.gluings:
            deg[i] += 1
            deg[j] += 1
        return deg

    def serialize(self) -> str:
        if self.unknot:
            return "unknot\n"
        lines = [p.describe() for p in self.pieces]
        lines += [f"glue {i} {j}" for i, j in self.gluings]
        if len(self.pieces) > 1:
            lines.append(f"boundary {self.boundary_piece}")
        return "\n".join(lines) + "\n"


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return len({find(v) for v in range(n)}) == 1


_INT = r"[+-]?\d+"
_STATEMENTS = {
    "torus": re.compile(rf"torus\s+({_INT})\s+({_INT})"),
    "cable": re.compile(rf"cable\s+({_INT})\s+({_INT})"),
    "composing": re.compile(rf"composing\s+({_INT})"),
    "hyperbolic": re.compile(r"hyperbolic"),
    "glue": re.compile(rf"glue\s+({_INT})\s+({_INT})"),
    "boundary": re.compile(rf"boundary\s+({_INT})"),
    "unknot": re.compile(r"unknot"),
}


def parse_jsj(text: str) -> KnotJsj:
    pieces: list[Piece] = []
    gluings: list[tuple[int, int]] = []
    boundary = None
    unknot = False
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            keyword = stmt.split()[0]
            pattern = _STATEMENTS.get(keyword)
            m = pattern.fullmatch(stmt) if pattern else None
            if m is None:
                raise JsjSyntaxError(f"cannot parse statement {stmt!r}")
            args = [int(a) for a in m.groups()]
            if keyword == "torus":
                pieces.append(TorusKnotExterior(*args))
            elif keyword == "cable":
                pieces.append(CableSpace(*args))
            elif keyword == "composing":
                pieces.append(ComposingSpace(*args))
            elif keyword == "hyperbolic":
                pieces.append(Hyperbolic())
            elif keyword == "glue":
                pair = (args[0], args[1])
                if pair in gluings or pair[::-1] in gluings:
                    raise NotATree(f"pieces {pair[0]} and {pair[1]} glued twice")
                gluings.append(pair)
            elif keyword == "boundary":
                if boundary is not None:
                    raise JsjSyntaxError("more than one 'boundary' statement")
                boundary = args[0]
            else:
                unknot = True
    if unknot and (pieces or gluings or boundary is not None):
        raise JsjSyntaxError("'unknot' cannot be combined with other statements")
    if not unknot and not pieces:
        raise JsjSyntaxError("empty descriptor")
    return KnotJsj(tuple(pieces), tuple(gluings), boundary, unknot)


class KnotCase(enum.Enum):
    UNKNOT = "unknot"
    HYPERBOLIC_ONLY = "hyperbolic_only"
    TORUS_KNOT = "torus_knot"
    MIXED_NO_SS = "mixed_no_ss"
    SS_GLUING = "ss_gluing"


def has_ss_gluing(j: KnotJsj) -> bool:
    return any(is_seifert(j.pieces[a]) and is_seifert(j.pieces[b]) for a, b in j.gluings)


def has_even_seifert_piece(j: KnotJsj) -> bool:
    return any(is_seifert(p) and is_even_type(p) for p in j.pieces)


def even_seifert_pieces(j: KnotJsj) -> list[Piece]:
    return [p for p in j.pieces if is_seifert(p) and is_even_type(p)]


def _check_boundary_counts(j: KnotJsj) -> None:
    # torus knot exteriors have one boundary torus, cable spaces two
    deg = j.degrees()
    for i, p in enumerate(j.pieces):
        tori = {TorusKnotExterior: 1, CableSpace: 2}.get(type(p))
        if tori is None:
            continue
        used = deg[i] + (1 if i == j.boundary_piece else 0)
        if used != tori:
            raise Inconsistent(
                f"{p.describe()} (piece {i}) has {tori} boundary tori but "
                f"{used} are glued or on the knot boundary"
            )


def knot_case(j: KnotJsj) -> KnotCase:
    if j.unknot:
        return KnotCase.UNKNOT
    _check_boundary_counts(j)
    if len(j.pieces) == 1 and isinstance(j.pieces[0], TorusKnotExterior):
        return KnotCase.TORUS_KNOT
    if all(isinstance(p, Hyperbolic) for p in j.pieces):
        return KnotCase.HYPERBOLIC_ONLY
    if has_ss_gluing(j):
        return KnotCase.SS_GLUING
    return KnotCase.MIXED_NO_SS
