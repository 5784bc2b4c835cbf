"""TRAAG presentations and their abelianizations.

A word is a tuple of ``(generator index, sign)`` letters.  Undirected edges
contribute commutators; a directed edge with tail ``x`` and head ``y``
contributes the Klein relator ``x y x y^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .mixed_graph import MixedGraph

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for rel in self.relators:
            for gen, sign in rel:
                if not 0 <= gen < n or sign not in (1, -1):
                    raise PresentationError(f"bad letter {(gen, sign)} in relator")

    def format_word(self, w: Word) -> str:
        return " ".join(
            self.generators[g] if s == 1 else f"{self.generators[g]}^-1" for g, s in w
        )

    def serialize(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [self.format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("gens:"):
        raise PresentationError("first line must be 'gens: ...'")
    gens = tuple(lines[0][len("gens:"):].split())
    index = {g: i for i, g in enumerate(gens)}
    relators = []
    for ln in lines[1:]:
        word = []
        for tok in ln.split():
            name, _, exp = tok.partition("^")
            if name not in index or exp not in ("", "1", "-1"):
                raise PresentationError(f"bad letter {tok!r}")
            word.append((index[name], -1 if exp == "-1" else 1))
        relators.append(tuple(word))
    return Presentation(gens, tuple(relators))


def traag_presentation(g: MixedGraph) -> Presentation:
    index = {v: i for i, v in enumerate(g.vertices)}
    relators: list[Word] = []
    for a, b in g.undirected_edges:
        x, y = index[a], index[b]
        relators.append(((x, 1), (y, 1), (x, -1), (y, -1)))
    for tail, head in g.directed_edges:
        x, y = index[tail], index[head]
        relators.append(((x, 1), (y, 1), (x, 1), (y, -1)))
    return Presentation(g.vertices, tuple(relators))


def free_reduce(w: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for gen, sign in w:
        if out and out[-1] == (gen, -sign):
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


def smith_normal_form(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        done = True
        p = a[t][t]
        for i in range(t + 1, rows):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                done = False
        for j in range(t + 1, cols):
            q = a[t][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                done = False
        if not done:
            continue  # a smaller remainder exists, pick it as the next pivot
        bad = next(
            (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
            None,
        )
        if bad is not None:
            # fold the offending row into row t so the remainder surfaces
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        diag.append(abs(p))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} < 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError("torsion coefficients must form a divisor chain")

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            d = self.torsion[i]
            k = self.torsion.count(d)
            parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
            i += k
        return " + ".join(parts) if parts else "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    matrix = []
    for rel in p.relators:
        row = [0] * len(p.generators)
        for gen, sign in rel:
            row[gen] += sign
        matrix.append(row)
    return matrix


def abelianization(p: Presentation) -> AbelianInvariants:
    diag = smith_normal_form(relation_matrix(p))
    return AbelianInvariants(
        free_rank=len(p.generators) - len(diag),
        torsion=tuple(d for d in diag if d > 1),
    )
