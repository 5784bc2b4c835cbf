import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import RewriteOracle, burau_is_identity, letters_to_string, rng
from traag.amalgam import (
    AmalgamNormalForm,
    CableGroup,
    GroupWord,
    SpecMismatch,
    TorusKnotGroup,
    UnknownGenerator,
    WordSyntaxError,
    ZeroExponent,
    central,
    commutator,
    conjugate,
    equal,
    gen,
    identity,
    inverse,
    is_identity,
    multiply,
    normal_form,
    parse_group,
    parse_word,
    syllable_length,
)

T23 = TorusKnotGroup(2, 3)

# z_1 = [x, yxy] in <x, y | x^2 = y^3>, frozen from RewriteOracle(2, 3)
# (and confirmed nontrivial by the Burau oracle)
Z1_CENTRAL = -4
Z1_SYLLABLES = ((("x", 1),), (("y", 2),), (("x", 1),), (("y", 2),),
                (("x", 1),), (("y", 1),), (("x", 1),), (("y", 1),))


def random_word(r, spec, length):
    letters = []
    for _ in range(length):
        g = r.choice(spec.alphabet)
        e = r.choice([-3, -2, -1, 1, 2, 3])
        letters.append((g, e))
    return GroupWord(spec, tuple(letters))


SPECS = [TorusKnotGroup(2, 3), TorusKnotGroup(4, 3), TorusKnotGroup(2, 5), TorusKnotGroup(6, 5),
         CableGroup(2, 1), CableGroup(2, 3), CableGroup(4, 3), CableGroup(3, -2)]


class TestParse:
    def test_two_letters(self):
        w = parse_word("x^2 y^-3", T23)
        assert w.letters == (("x", 2), ("y", -3))

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            parse_word("t", T23)

    def test_merge(self):
        assert parse_word("x^1 x^1", T23).letters == (("x", 2),)

    def test_merge_to_nothing(self):
        assert parse_word("x x^-1 y", T23).letters == (("y", 1),)

    def test_zero_exponent(self):
        with pytest.raises(ZeroExponent):
            parse_word("x^0", T23)

    def test_syntax(self):
        with pytest.raises(WordSyntaxError):
            parse_word("x^^2", T23)

    def test_cable_alphabet(self):
        assert parse_word("x t^2 y^-1", CableGroup(2, 3)).letters == (("x", 1), ("t", 2), ("y", -1))

    def test_group_selectors(self):
        assert parse_group("torus:2,3") == T23
        assert parse_group("cable:4,3") == CableGroup(4, 3)
        with pytest.raises(ValueError):
            parse_group("torus:2,4")
        with pytest.raises(ValueError):
            parse_group("knot:2,3")


class TestNormalForm:
    def test_defining_relation(self):
        nf = normal_form(parse_word("x^2 y^-3", T23))
        assert nf.is_identity and str(nf) == "identity"

    def test_empty(self):
        assert normal_form(identity(T23)).is_identity

    def test_z1(self):
        xp, yxy = gen(T23, "x"), parse_word("y x y", T23)
        z1 = commutator(xp, yxy)
        assert z1.letters == (("x", -1), ("y", -1), ("x", -1), ("y", -1),
                              ("x", 1), ("y", 1), ("x", 1), ("y", 1))
        nf = normal_form(z1)
        assert nf.central_exp == Z1_CENTRAL
        assert nf.syllables == Z1_SYLLABLES
        assert syllable_length(nf) == 8

    def test_z1_matches_oracles(self):
        w = "XYXYxyxy"
        assert RewriteOracle(2, 3).normal_form(w) == (Z1_CENTRAL, tuple(s[0] for s in Z1_SYLLABLES))
        assert not burau_is_identity(w)

    def test_syllable_length(self):
        assert syllable_length(normal_form(identity(T23))) == 0
        assert syllable_length(normal_form(gen(T23, "x"))) == 1

    def test_residues(self):
        nf = normal_form(parse_word("x^5 y^-1", TorusKnotGroup(4, 3)))
        # x^5 = h x, y^-1 = h^-1 y^2
        assert nf.central_exp == 0
        assert nf.syllables == ((("x", 1),), (("y", 2),))

    def test_cascade(self):
        # x (y y^2) x^-1: the middle collapses to h, then x x^-1 cancels
        nf = normal_form(parse_word("x y y^2 x^-1", T23))
        assert nf.central_exp == 1 and nf.syllables == ()

    def test_cable_relation(self):
        spec = CableGroup(2, 3)
        assert is_identity(parse_word("x^2 y^-3 t^-2", spec))
        assert is_identity(parse_word("y t y^-1 t^-1", spec))
        assert not is_identity(parse_word("x t x^-1 t^-1", spec))

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.selector)
    def test_round_trip(self, spec):
        r = rng(30)
        for _ in range(500):
            w = random_word(r, spec, r.randint(0, 12))
            nf = normal_form(w)
            assert normal_form(nf.to_word()) == nf

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.selector)
    def test_syllables_are_reduced(self, spec):
        r = rng(31)
        for _ in range(300):
            nf = normal_form(random_word(r, spec, r.randint(0, 12)))
            sides = ["A" if syl[0][0] == "x" else "B" for syl in nf.syllables]
            assert all(a != b for a, b in zip(sides, sides[1:]))
            for syl in nf.syllables:
                if syl[0][0] == "x":
                    assert 0 < syl[0][1] < spec.r
                elif isinstance(spec, TorusKnotGroup):
                    assert 0 < syl[0][1] < spec.s


class TestArithmetic:
    def test_xr_equals_ys(self):
        assert equal(gen(T23, "x", 2), gen(T23, "y", 3))

    def test_x_equals_x(self):
        assert equal(gen(T23, "x"), gen(T23, "x"))

    def test_xy_not_yx(self):
        xy = parse_word("x y", T23)
        yx = parse_word("y x", T23)
        assert not equal(xy, yx)
        assert not RewriteOracle(2, 3).is_identity("xyXY")
        assert not burau_is_identity("xyXY")

    def test_inverse_empty(self):
        assert inverse(identity(T23)) == identity(T23)

    def test_spec_mismatch(self):
        with pytest.raises(SpecMismatch):
            multiply(gen(T23, "x"), gen(TorusKnotGroup(2, 5), "x"))
        with pytest.raises(SpecMismatch):
            equal(gen(T23, "x"), gen(CableGroup(2, 3), "x"))

    def test_commutator_convention(self):
        a, b = gen(T23, "x"), gen(T23, "y")
        assert commutator(a, b).letters == (("x", -1), ("y", -1), ("x", 1), ("y", 1))
        assert conjugate(a, b).letters == (("y", -1), ("x", 1), ("y", 1))

    def test_klein_image(self):
        # z_1 x z_1 = x in the trefoil group
        x = gen(T23, "x")
        z1 = commutator(x, parse_word("y x y", T23))
        assert is_identity(z1 * x * z1 * ~x)
        assert not is_identity(x)

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.selector)
    def test_central_commutes(self, spec):
        r = rng(32)
        h = central(spec)
        for _ in range(300):
            g = random_word(r, spec, r.randint(1, 10))
            assert is_identity(commutator(h, g))

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.selector)
    def test_abelian_image_vanishes_on_identities(self, spec):
        r = rng(33)
        relator = parse_word("x^{} y^{}".format(spec.r, -spec.s), spec) if isinstance(spec, TorusKnotGroup) \
            else parse_word("x^{} y^{} t^{}".format(spec.r, -spec.s, -spec.r), spec)
        zero = spec.abelian_image(())
        for _ in range(500):
            u = random_word(r, spec, r.randint(0, 8))
            v = random_word(r, spec, r.randint(0, 8))
            w = u * (relator ** r.choice([-1, 1])) * ~u * v * ~v
            assert is_identity(w)
            assert spec.abelian_image(w.letters) == zero

    def test_abelian_image_detects(self):
        # a nonidentity word with nonzero image
        assert T23.abelian_image((("x", 1),)) != 0


@pytest.mark.parametrize("r, s", [(2, 3), (2, 5), (4, 3), (3, 4)])
def test_engine_matches_rewrite_oracle(r, s):
    spec = TorusKnotGroup(r, s)
    oracle = RewriteOracle(r, s)
    rnd = rng(34)
    for _ in range(1000):
        w = random_word(rnd, spec, rnd.randint(0, 10))
        k, runs = oracle.normal_form(letters_to_string(w.letters))
        nf = normal_form(w)
        assert (nf.central_exp, tuple(syl[0] for syl in nf.syllables)) == (k, runs)


def test_engine_matches_burau_on_short_words():
    for length in range(7):
        for letters in itertools.product("xXyY", repeat=length):
            word = "".join(letters)
            w = parse_word(" ".join(c.lower() + ("^-1" if c.isupper() else "") for c in word), T23) \
                if word else identity(T23)
            assert is_identity(w) == burau_is_identity(word), word


@pytest.mark.parametrize("spec", [CableGroup(2, 3), CableGroup(4, 3), CableGroup(2, 1), CableGroup(3, -2)],
                         ids=lambda s: s.selector)
def test_cable_transversal_choice_does_not_matter(spec):
    c, d = spec.transversal
    others = [
        CableGroup(spec.r, spec.s, (c + spec.s, d + spec.r)),
        CableGroup(spec.r, spec.s, (-c, -d)),
    ]
    r = rng(35)
    for _ in range(1000):
        w = random_word(r, spec, r.randint(0, 10))
        verdict = is_identity(w)
        for other in others:
            w2 = GroupWord(other, w.letters)
            assert is_identity(w2) == verdict
            assert syllable_length(normal_form(w2)) == syllable_length(normal_form(w))


def test_bad_transversal_rejected():
    with pytest.raises(ValueError):
        CableGroup(2, 3, (1, 2))


@given(st.lists(st.tuples(st.sampled_from("xy"), st.integers(-7, 7).filter(bool)), max_size=12))
@settings(max_examples=300)
def test_inverse_property(letters):
    w = GroupWord(T23, tuple(letters))
    assert is_identity(w * ~w)
    assert is_identity(~w * w)
    assert equal(w, AmalgamNormalForm.to_word(normal_form(w)))
