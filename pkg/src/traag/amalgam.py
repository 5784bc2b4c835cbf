"""Exact word problem for torus-knot groups and cable-space groups.

Both groups split as amalgamated products ``<x> *_H B`` over the infinite
cyclic central subgroup ``H = <h>``:

* torus knot group ``<x, y | x^r = y^s>``: ``B = <y>``, ``h = x^r = y^s``;
* cable space group ``<x, y, t | x^r = t^r y^s, [y, t] = 1>``:
  ``B = <y, t> = Z^2``, ``h = x^r = y^s t^r``.

Because ``h`` is central, every element is uniquely ``h^k c_1 ... c_m`` with
the ``c_i`` nontrivial coset representatives taken alternately from the two
factors.  For the cable group, B-cosets mod ``H`` are indexed by one integer
``v``: with a transversal vector ``(c, d)`` completing ``(s, r)`` to a basis of
``Z^2``, the element ``y^a t^b`` equals ``h^u (y^c t^d)^v``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


class EngineError(ValueError):
    pass


class UnknownGenerator(EngineError):
    pass


class ZeroExponent(EngineError):
    pass


class WordSyntaxError(EngineError):
    pass


class SpecMismatch(EngineError):
    pass


@dataclass(frozen=True)
class TorusKnotGroup:
    r: int
    s: int

    alphabet = ("x", "y")

    def __post_init__(self):
        if self.r < 2 or self.s < 2 or math.gcd(self.r, self.s) != 1:
            raise EngineError(f"torus:{self.r},{self.s} needs r,s >= 2 and gcd 1")

    @property
    def selector(self) -> str:
        return f"torus:{self.r},{self.s}"

    def b_vector(self, letter: str, exp: int) -> tuple[int, ...]:
        return (exp,)

    def reduce_b(self, vec: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        u, e = divmod(vec[0], self.s)
        return u, (e,)

    def spell_b(self, vec: tuple[int, ...]) -> tuple[tuple[str, int], ...]:
        return (("y", vec[0]),)

    def abelian_image(self, letters: Iterable[tuple[str, int]]) -> int:
        # H_1 = Z with x -> s, y -> r
        return sum(e * (self.s if g == "x" else self.r) for g, e in letters)


def _canonical_transversal(r: int, s: int) -> tuple[int, int]:
    # s*d - r*c = 1 with 0 <= c < |s|
    if abs(s) == 1:
        c = 0
    else:
        c = pow(-r, -1, abs(s))
    d, rem = divmod(1 + r * c, s)
    assert rem == 0
    return c, d


@dataclass(frozen=True)
class CableGroup:
    r: int
    s: int
    transversal: tuple[int, int] | None = field(default=None, compare=False)

    alphabet = ("x", "y", "t")

    def __post_init__(self):
        if self.r < 2 or self.s == 0 or math.gcd(self.r, self.s) != 1:
            raise EngineError(f"cable:{self.r},{self.s} needs r >= 2, s != 0 and gcd 1")
        if self.transversal is None:
            object.__setattr__(self, "transversal", _canonical_transversal(self.r, self.s))
        c, d = self.transversal
        if abs(self.s * d - self.r * c) != 1:
            raise EngineError(f"transversal {self.transversal} does not complete ({self.s},{self.r}) to a basis")

    @property
    def selector(self) -> str:
        return f"cable:{self.r},{self.s}"

    def b_vector(self, letter: str, exp: int) -> tuple[int, ...]:
        return (exp, 0) if letter == "y" else (0, exp)

    def reduce_b(self, vec: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        a, b = vec
        c, d = self.transversal
        det = self.s * d - self.r * c
        u = (d * a - c * b) * det
        v = (self.s * b - self.r * a) * det
        return u, (v * c, v * d)

    def spell_b(self, vec: tuple[int, ...]) -> tuple[tuple[str, int], ...]:
        return tuple((g, e) for g, e in zip(("y", "t"), vec) if e)

    def abelian_image(self, letters: Iterable[tuple[str, int]]) -> tuple[int, int]:
        # (a_x, a_y, a_t) -> (s a_x + r a_y, a_x + a_t) identifies
        # Z^3 / (r, -s, -r) with Z^2 since gcd(r, s) = 1
        sx = sy = st = 0
        for g, e in letters:
            if g == "x":
                sx += e
            elif g == "y":
                sy += e
            else:
                st += e
        return (self.s * sx + self.r * sy, sx + st)


GroupSpec = Union[TorusKnotGroup, CableGroup]


def parse_group(selector: str) -> GroupSpec:
    m = re.fullmatch(r"\s*(torus|cable)\s*:\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*", selector)
    if not m:
        raise EngineError(f"bad group selector {selector!r}; expected torus:r,s or cable:r,s")
    kind, r, s = m.group(1), int(m.group(2)), int(m.group(3))
    return TorusKnotGroup(r, s) if kind == "torus" else CableGroup(r, s)


def _merge(letters: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for g, e in letters:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    spec: GroupSpec
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for g, _ in self.letters:
            if g not in self.spec.alphabet:
                raise UnknownGenerator(f"{g!r} is not a generator of {self.spec.selector}")
        object.__setattr__(self, "letters", _merge(self.letters))

    def _check(self, other: "GroupWord") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec.selector} vs {other.spec.selector}")

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        self._check(other)
        return GroupWord(self.spec, self.letters + other.letters)

    def __invert__(self) -> "GroupWord":
        return GroupWord(self.spec, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else ~self
        return GroupWord(self.spec, base.letters * abs(n))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)


def format_letters(letters: Sequence[tuple[str, int]]) -> str:
    if not letters:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in letters)


_TOKEN = re.compile(r"([A-Za-z_]\w*)(?:\^([+-]?\d+))?")


def parse_word(text: str, spec: GroupSpec) -> GroupWord:
    letters = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise WordSyntaxError(f"cannot parse token {tok!r}")
        g, exp = m.group(1), int(m.group(2)) if m.group(2) is not None else 1
        if g not in spec.alphabet:
            raise UnknownGenerator(f"{g!r} is not a generator of {spec.selector}")
        if exp == 0:
            raise ZeroExponent(f"zero exponent in {tok!r}")
        letters.append((g, exp))
    return GroupWord(spec, tuple(letters))


def gen(spec: GroupSpec, g: str, exp: int = 1) -> GroupWord:
    return GroupWord(spec, ((g, exp),))


def identity(spec: GroupSpec) -> GroupWord:
    return GroupWord(spec, ())


def central(spec: GroupSpec, k: int = 1) -> GroupWord:
    """The central element ``h^k`` spelled as ``x^(r k)``."""
    return GroupWord(spec, (("x", spec.r * k),)) if k else identity(spec)


@dataclass(frozen=True)
class AmalgamNormalForm:
    spec: GroupSpec
    central_exp: int
    # each syllable is spelled as letters; x-syllables come from <x>,
    # the others from the second factor
    syllables: tuple[tuple[tuple[str, int], ...], ...]

    @property
    def is_identity(self) -> bool:
        return self.central_exp == 0 and not self.syllables

    def to_word(self) -> GroupWord:
        letters = list(central(self.spec, self.central_exp).letters)
        for syl in self.syllables:
            letters.extend(syl)
        return GroupWord(self.spec, tuple(letters))

    def __str__(self) -> str:
        if self.is_identity:
            return "identity"
        parts = [f"h^{self.central_exp}"] if self.central_exp else []
        parts += [format_letters(s) for s in self.syllables]
        return " . ".join(parts)


def normal_form(w: GroupWord) -> AmalgamNormalForm:
    spec = w.spec
    k = 0
    # stack of ("A", (e,)) / ("B", vec) with every entry a reduced nontrivial rep
    stack: list[tuple[str, tuple[int, ...]]] = []
    for g, e in w.letters:
        if g == "x":
            side, vec = "A", (e,)
        else:
            side, vec = "B", spec.b_vector(g, e)
        if stack and stack[-1][0] == side:
            top = stack.pop()[1]
            vec = tuple(p + q for p, q in zip(top, vec))
        if side == "A":
            u, rem = divmod(vec[0], spec.r)
            rep = (rem,)
        else:
            u, rep = spec.reduce_b(vec)
        k += u
        if any(rep):
            stack.append((side, rep))
    syllables = tuple(
        (("x", vec[0]),) if side == "A" else spec.spell_b(vec) for side, vec in stack
    )
    return AmalgamNormalForm(spec, k, syllables)


def is_identity(w: GroupWord) -> bool:
    return normal_form(w).is_identity


def equal(u: GroupWord, v: GroupWord) -> bool:
    u._check(v)
    return normal_form(u) == normal_form(v)


def multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    return u * v


def inverse(u: GroupWord) -> GroupWord:
    return ~u


def conjugate(u: GroupWord, g: GroupWord) -> GroupWord:
    """``u^g = g^-1 u g``."""
    return ~g * u * g


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    """``[u, v] = u^-1 v^-1 u v``."""
    return ~u * ~v * u * v


def syllable_length(nf: AmalgamNormalForm) -> int:
    return len(nf.syllables)
