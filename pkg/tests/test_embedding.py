import dataclasses

import pytest

from oracles import burau_is_identity, letters_to_string, rng
from traag.amalgam import TorusKnotGroup, commutator, gen, is_identity, parse_word
from traag.embedding import (
    BadGeneratorIndex,
    MissingGenerator,
    NotEvenType,
    RankMismatch,
    RelatorsNotVerified,
    SinkStarElement,
    ball,
    ball_size,
    build_assignment,
    evaluate,
    reduced_words,
    sink_star_graph,
    sinkstar_from_letters,
    sinkstar_generator,
    sinkstar_normalize,
    verify_injectivity_bounded,
    verify_relators,
)
from traag.mixed_graph import parse_graph

T23 = TorusKnotGroup(2, 3)
KLEIN_SPECS = ["torus:2,3", "torus:2,5", "torus:4,3", "torus:6,5",
               "cable:2,1", "cable:2,3", "cable:4,3"]


def random_element(r, n, length=6):
    names = ["a"] + [f"b{i}" for i in range(1, n + 1)]
    return sinkstar_from_letters(n, [(r.choice(names), r.choice((1, -1))) for _ in range(r.randint(0, length))])


class TestSinkStarGroup:
    def test_relation(self):
        n = 3
        a = sinkstar_generator(n, "a")
        for i in range(1, n + 1):
            b = sinkstar_generator(n, f"b{i}")
            assert b * a * b == a

    def test_phi_is_involution(self):
        a = sinkstar_generator(2, "a")
        b1 = sinkstar_generator(2, "b1")
        assert ~a * b1 * a == ~b1
        assert (~a) * (~a) * b1 * a * a == b1

    def test_a_squared_central(self):
        r = rng(40)
        a2 = sinkstar_generator(4, "a") * sinkstar_generator(4, "a")
        for _ in range(200):
            g = random_element(r, 4)
            assert a2 * g == g * a2

    def test_normal_form_example(self):
        e = sinkstar_from_letters(2, [("b1", 1), ("a", 1), ("b2", 1)])
        # b1 a = a b1^-1
        assert e == SinkStarElement(2, 1, ((1, -1), (2, 1)))
        assert str(e) == "(1, b1^-1 b2)"

    def test_group_axioms(self):
        r = rng(41)
        e = SinkStarElement(3, 0)
        for _ in range(300):
            u, v, w = (random_element(r, 3) for _ in range(3))
            assert (u * v) * w == u * (v * w)
            assert (u * ~u).is_identity and (~u * u).is_identity
            assert u * e == u == e * u

    def test_normalize_reduces(self):
        assert sinkstar_normalize(2, 0, ((1, 1), (1, -1))).is_identity

    @pytest.mark.parametrize("name", ["b0", "b3", "c", "b"])
    def test_bad_generator(self, name):
        with pytest.raises(BadGeneratorIndex):
            sinkstar_generator(2, name)

    def test_bad_letter(self):
        with pytest.raises(BadGeneratorIndex):
            sinkstar_normalize(2, 0, ((3, 1),))

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            sinkstar_generator(2, "a") * sinkstar_generator(3, "a")


class TestBall:
    @pytest.mark.parametrize("n, bound", [(1, 0), (1, 3), (2, 2), (2, 4), (3, 3)])
    def test_counts(self, n, bound):
        elements = list(ball(n, bound))
        assert len(elements) == ball_size(n, bound)
        assert len(set(elements)) == len(elements)
        assert all(e.length() <= bound and not e.is_identity for e in elements)

    def test_reduced_words(self):
        assert list(reduced_words(1, 2)) == [((1, 1), (1, 1)), ((1, -1), (1, -1))]


class TestAssignment:
    def test_images(self):
        asg = build_assignment(2, "torus:2,3")
        assert asg.images["a"] == gen(T23, "x")
        z1 = commutator(gen(T23, "x"), parse_word("y x y", T23))
        assert asg.images["b1"] == z1

    def test_odd_rejected(self):
        with pytest.raises(NotEvenType):
            build_assignment(1, "torus:3,5")

    @pytest.mark.parametrize("spec", KLEIN_SPECS)
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_klein_relations_hold(self, spec, n):
        asg = build_assignment(n, spec)
        assert verify_relators(asg, sink_star_graph(n))

    def test_leaf_images_distinct(self):
        asg = build_assignment(2, "torus:2,3")
        z1, z2 = asg.images["b1"], asg.images["b2"]
        words = [z1, z2, ~z1, ~z2]
        for i, u in enumerate(words):
            for v in words[i + 1:]:
                assert not is_identity(u * ~v)

    def test_missing_generator(self):
        asg = build_assignment(1, "torus:2,3")
        with pytest.raises(MissingGenerator):
            verify_relators(asg, parse_graph("b1 -> a\nb2 -> a"))

    def test_homomorphism(self):
        asg = build_assignment(2, "torus:2,3")
        r = rng(42)
        for _ in range(10_000):
            u, v = random_element(r, 2, 4), random_element(r, 2, 4)
            assert is_identity(evaluate(asg, u * v) * ~(evaluate(asg, u) * evaluate(asg, v)))

    def test_homomorphism_against_burau(self):
        asg = build_assignment(2, "torus:2,3")
        r = rng(43)
        for _ in range(200):
            u, v = random_element(r, 2, 3), random_element(r, 2, 3)
            w = evaluate(asg, u * v) * ~(evaluate(asg, u) * evaluate(asg, v))
            assert burau_is_identity(letters_to_string(w.letters))

    def test_evaluate_examples(self):
        asg = build_assignment(1, "torus:2,3")
        assert evaluate(asg, SinkStarElement(1, 2)) == gen(T23, "x", 2)
        assert is_identity(evaluate(asg, SinkStarElement(1, 0)))
        with pytest.raises(RankMismatch):
            evaluate(asg, SinkStarElement(2, 1))


class TestInjectivity:
    def test_small_ball_is_clean(self):
        report = verify_injectivity_bounded(build_assignment(2, "torus:2,3"), 2, 4)
        assert report.ok and report.checked == ball_size(2, 4)

    def test_bound_zero(self):
        report = verify_injectivity_bounded(build_assignment(1, "torus:2,3"), 1, 0)
        assert report.checked == 0 and report.ok
        assert report.render() == "checked=0 violations=0\n"

    @pytest.mark.parametrize("spec", ["cable:2,1", "torus:4,3"])
    def test_other_groups(self, spec):
        report = verify_injectivity_bounded(build_assignment(2, spec), 2, 3)
        assert report.ok

    def test_broken_assignment_caught(self):
        asg = build_assignment(2, "torus:2,3")
        images = dict(asg.images)
        images["b2"] = images["b1"]
        broken = dataclasses.replace(asg, images=images)
        report = verify_injectivity_bounded(broken, 2, 2)
        assert not report.ok
        assert SinkStarElement(2, 0, ((1, 1), (2, -1))) in report.violations
        assert "(0, b1 b2^-1)" in report.render()

    def test_relators_must_hold(self):
        asg = build_assignment(1, "torus:2,3")
        broken = dataclasses.replace(asg, images={**asg.images, "b1": gen(T23, "y")})
        with pytest.raises(RelatorsNotVerified):
            verify_injectivity_bounded(broken, 1, 2)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            verify_injectivity_bounded(build_assignment(1, "torus:2,3"), 2, 2)
