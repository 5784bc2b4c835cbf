"""The sink-star group A(S_n) and its explicit embedding into even-type pieces.

``A(S_n) = <a, b_1..b_n | b_i a b_i = a>``.  The relations say that
conjugation by the head ``a`` inverts every leaf, so every element is
uniquely ``a^k f`` with ``f`` a freely reduced word in the leaves.

For a torus knot group or cable space group whose ``x``-exponent ``r = 2p``
is even, ``a -> x^p`` and ``b_i -> [x^p, (yxy)^i]`` is an embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .amalgam import GroupSpec, GroupWord, commutator, gen, identity, is_identity, parse_group
from .mixed_graph import MixedGraph
from .presentation import free_reduce, traag_presentation


class EmbeddingError(ValueError):
    pass


class BadGeneratorIndex(EmbeddingError):
    pass


class RankMismatch(EmbeddingError):
    pass


class NotEvenType(EmbeddingError):
    pass


class MissingGenerator(EmbeddingError):
    pass


class RelatorsNotVerified(EmbeddingError):
    pass


FreeWord = tuple[tuple[int, int], ...]  # (leaf index 1..n, sign)


@dataclass(frozen=True, order=True)
class SinkStarElement:
    """``a^a_exp * free_word`` in A(S_n)."""

    n: int
    a_exp: int
    free_word: FreeWord = ()

    def __mul__(self, other: "SinkStarElement") -> "SinkStarElement":
        return sinkstar_multiply(self, other)

    def __invert__(self) -> "SinkStarElement":
        # (a^k f)^-1 = f^-1 a^-k = a^-k phi^k(f^-1)
        inv = tuple((i, -e) for i, e in reversed(self.free_word))
        return SinkStarElement(self.n, -self.a_exp, _twist(inv, self.a_exp))

    @property
    def is_identity(self) -> bool:
        return self.a_exp == 0 and not self.free_word

    def length(self) -> int:
        return abs(self.a_exp) + len(self.free_word)

    def format_word(self) -> str:
        if not self.free_word:
            return "1"
        return " ".join(f"b{i}" if e == 1 else f"b{i}^-1" for i, e in self.free_word)

    def __str__(self) -> str:
        return f"({self.a_exp}, {self.format_word()})"


def _twist(f: Sequence[tuple[int, int]], k: int) -> FreeWord:
    # phi = conjugation by a inverts each leaf letter; an involution
    if k % 2 == 0:
        return tuple(f)
    return tuple((i, -e) for i, e in f)


def sinkstar_normalize(n: int, k: int, w: Sequence[tuple[int, int]]) -> SinkStarElement:
    if n < 1:
        raise BadGeneratorIndex("a sink star has at least one leaf")
    for i, e in w:
        if not 1 <= i <= n or e not in (1, -1):
            raise BadGeneratorIndex(f"letter {(i, e)} is not a leaf letter of S_{n}")
    return SinkStarElement(n, k, free_reduce(w))


def sinkstar_multiply(u: SinkStarElement, v: SinkStarElement) -> SinkStarElement:
    if u.n != v.n:
        raise RankMismatch(f"S_{u.n} vs S_{v.n}")
    return SinkStarElement(u.n, u.a_exp + v.a_exp, free_reduce(_twist(u.free_word, v.a_exp) + v.free_word))


def sinkstar_generator(n: int, name: str) -> SinkStarElement:
    """``a`` or ``b<i>`` as an element."""
    if name == "a":
        return SinkStarElement(n, 1)
    if name.startswith("b") and name[1:].isdigit() and 1 <= int(name[1:]) <= n:
        return SinkStarElement(n, 0, ((int(name[1:]), 1),))
    raise BadGeneratorIndex(f"{name!r} is not a generator of A(S_{n})")


def sinkstar_from_letters(n: int, letters: Sequence[tuple[str, int]]) -> SinkStarElement:
    """Multiply out a word in the generators ``a, b1..bn`` (exponents ±1)."""
    result = SinkStarElement(n, 0)
    for name, e in letters:
        g = sinkstar_generator(n, name)
        result = result * (g if e == 1 else ~g)
    return result


def sink_star_graph(n: int, head: str = "a", leaves: Sequence[str] | None = None) -> MixedGraph:
    leaves = tuple(leaves) if leaves is not None else tuple(f"b{i}" for i in range(1, n + 1))
    return MixedGraph((head,) + leaves, (), tuple((b, head) for b in leaves))


@dataclass(frozen=True)
class Assignment:
    spec: GroupSpec
    head: str
    leaves: tuple[str, ...]
    images: dict[str, GroupWord]

    def __hash__(self):
        return hash((self.spec, self.head, self.leaves))

    @property
    def n(self) -> int:
        return len(self.leaves)


def build_assignment(n: int, spec: GroupSpec | str) -> Assignment:
    if isinstance(spec, str):
        spec = parse_group(spec)
    if n < 1:
        raise BadGeneratorIndex("n must be at least 1")
    if spec.r % 2:
        raise NotEvenType(f"{spec.selector}: the x-exponent {spec.r} is odd")
    p = spec.r // 2
    xp = gen(spec, "x", p)
    yxy = gen(spec, "y") * gen(spec, "x") * gen(spec, "y")
    images = {"a": xp}
    leaves = tuple(f"b{i}" for i in range(1, n + 1))
    for i, name in enumerate(leaves, start=1):
        images[name] = commutator(xp, yxy**i)
    return Assignment(spec, "a", leaves, images)


def image_of_relator(asg: Assignment, g: MixedGraph, relator) -> GroupWord:
    w = identity(asg.spec)
    for idx, sign in relator:
        w = w * (asg.images[g.vertices[idx]] if sign == 1 else ~asg.images[g.vertices[idx]])
    return w


def verify_relators(asg: Assignment, g: MixedGraph, spec: GroupSpec | None = None) -> bool:
    if spec is not None and spec != asg.spec:
        raise EmbeddingError(f"assignment lives in {asg.spec.selector}, not {spec.selector}")
    missing = [v for v in g.vertices if v not in asg.images]
    if missing:
        raise MissingGenerator(f"no image for {missing}")
    pres = traag_presentation(g)
    return all(is_identity(image_of_relator(asg, g, rel)) for rel in pres.relators)


def evaluate(asg: Assignment, e: SinkStarElement) -> GroupWord:
    if e.n != asg.n:
        raise RankMismatch(f"element of A(S_{e.n}) but assignment has {asg.n} leaves")
    for name in (asg.head,) + asg.leaves:
        if name not in asg.images:
            raise MissingGenerator(f"no image for {name!r}")
    w = asg.images[asg.head] ** e.a_exp
    for i, sign in e.free_word:
        img = asg.images[asg.leaves[i - 1]]
        w = w * (img if sign == 1 else ~img)
    return w


def reduced_words(n: int, length: int) -> Iterator[FreeWord]:
    """Freely reduced words of the given length in lexicographic order."""
    letters = [(i, e) for i in range(1, n + 1) for e in (1, -1)]

    def extend(prefix: list[tuple[int, int]]) -> Iterator[FreeWord]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for letter in letters:
            if prefix and prefix[-1] == (letter[0], -letter[1]):
                continue
            prefix.append(letter)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def ball(n: int, bound: int) -> Iterator[SinkStarElement]:
    """Nonidentity elements with ``|a_exp| + len(free_word) <= bound``."""
    for length in range(bound + 1):
        slack = bound - length
        for f in reduced_words(n, length):
            for k in range(-slack, slack + 1):
                if length == 0 and k == 0:
                    continue
                yield SinkStarElement(n, k, f)


@dataclass(frozen=True)
class InjectivityReport:
    checked: int
    violations: tuple[SinkStarElement, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = [f"checked={self.checked} violations={len(self.violations)}"]
        lines += [str(v) for v in self.violations]
        return "\n".join(lines) + "\n"


def verify_injectivity_bounded(
    asg: Assignment, n: int, bound: int, spec: GroupSpec | None = None
) -> InjectivityReport:
    if n != asg.n:
        raise RankMismatch(f"n={n} but assignment has {asg.n} leaves")
    if not verify_relators(asg, sink_star_graph(n, asg.head, asg.leaves), spec):
        raise RelatorsNotVerified("the assignment does not respect the Klein relations")
    checked = 0
    violations = []
    for e in ball(n, bound):
        checked += 1
        if is_identity(evaluate(asg, e)):
            violations.append(e)
    return InjectivityReport(checked, tuple(sorted(violations)))


def ball_size(n: int, bound: int) -> int:
    """Closed-form count of :func:`ball`, used as a cross-check."""
    total = 0
    for length in range(bound + 1):
        words = 1 if length == 0 else 2 * n * (2 * n - 1) ** (length - 1)
        total += words * (2 * (bound - length) + 1)
    return total - 1
