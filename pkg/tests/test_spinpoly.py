"""Tests for braid parsing, spin polynomial evaluation, and Markov moves."""

import random

import pytest

from spinlink.qalg import GradedScalar, LaurentPoly, RatFunc
from spinlink.rep import circle_value
from spinlink.spinpoly import (
    BraidParseError,
    BraidWord,
    eval_spin,
    markov_suite,
    parse_braid,
    stabilization_factor,
    sweep_raw_traces,
)


class TestParsing:
    def test_trefoil(self):
        b = parse_braid("s1 s1 s1")
        assert b.strands == 2
        assert b.letters == ((1, 1), (1, 1), (1, 1))

    def test_bare_integers(self):
        b = parse_braid("2 -1 2 -1")
        assert b.strands == 3
        assert b.letters == ((2, 1), (1, -1), (2, 1), (1, -1))

    def test_caret_inverse(self):
        b = parse_braid("s2^-1 s1")
        assert b.letters == ((2, -1), (1, 1))

    def test_rejects_zero_index(self):
        with pytest.raises(BraidParseError):
            parse_braid("s0")

    def test_rejects_garbage(self):
        with pytest.raises(BraidParseError):
            parse_braid("s1 q3")

    def test_explicit_strands(self):
        b = parse_braid("s1", strands=4)
        assert b.strands == 4
        with pytest.raises(ValueError):
            parse_braid("s3", strands=2)

    def test_exponent_sum(self):
        assert parse_braid("1 1 -2 -2 -2").exponent_sum == -1


class TestEvaluation:
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_unknot(self, n):
        got = eval_spin(BraidWord(1, ()), n)
        assert got == GradedScalar(0, RatFunc.from_poly(circle_value(n)))

    def test_unlink_powers(self):
        for n in (1, 2):
            for m in (1, 2, 3):
                got = eval_spin(BraidWord(m, ()), n)
                cv = RatFunc.from_poly(circle_value(n))
                want = cv
                for _ in range(m - 1):
                    want = want * cv
                assert got == GradedScalar(0, want)

    def test_intro_normalization_positive_unknot(self):
        q = LaurentPoly.q_pow
        got = eval_spin(BraidWord(1, ()), 2, normalization="intro")
        assert got == GradedScalar(0, q(4) + q(2) + q(-2) + q(-4))

    @pytest.mark.parametrize("n", (1, 2))
    def test_braid_relation_invariance(self, n):
        rng = random.Random(77 + n)
        for _ in range(6):
            length = rng.randint(0, 4)
            word = [(rng.randint(1, 2), rng.choice([1, -1])) for _ in range(length)]
            pos = rng.randint(0, len(word))
            w1 = word[:pos] + [(1, 1), (2, 1), (1, 1)] + word[pos:]
            w2 = word[:pos] + [(2, 1), (1, 1), (2, 1)] + word[pos:]
            assert eval_spin(BraidWord(3, tuple(w1)), n) == eval_spin(BraidWord(3, tuple(w2)), n)

    @pytest.mark.parametrize("n", (1, 2))
    def test_split_union_multiplicativity(self, n):
        rng = random.Random(13 + n)
        for _ in range(4):
            w1 = tuple((1, rng.choice([1, -1])) for _ in range(rng.randint(0, 3)))
            w2 = tuple((3, rng.choice([1, -1])) for _ in range(rng.randint(0, 3)))
            joint = eval_spin(BraidWord(4, w1 + w2), n)
            a = eval_spin(BraidWord(2, w1), n)
            b = eval_spin(BraidWord(2, tuple((1, s) for _, s in w2)), n)
            assert joint == a * b

    def test_mirror_is_bar(self):
        b = parse_braid("s1 s1 s1")
        for n in (1, 2):
            assert eval_spin(b, n, mirror=True) == eval_spin(b, n).bar()

    def test_trefoil_rank_one_matches_jones_dictionary(self):
        from spinlink.schur import spin1_from_jones

        b = parse_braid("s1 s1 s1")
        assert eval_spin(b, 1, normalization="unframed") == spin1_from_jones(b)

    def test_sweep_matches_direct(self):
        sw = sweep_raw_traces(2, 1, 3)
        for word, val in sw.items():
            assert val == eval_spin(BraidWord(2, word), 1)


class TestStabilization:
    @pytest.mark.parametrize("n", (1, 2))
    def test_factor_on_unknot(self, n):
        nu = stabilization_factor(n)
        base = eval_spin(BraidWord(1, ()), n)
        up = eval_spin(BraidWord(2, ((1, 1),)), n)
        dn = eval_spin(BraidWord(2, ((1, -1),)), n)
        assert up == base * nu
        assert dn == base * nu.inv()


class TestMarkovSuite:
    @pytest.mark.parametrize("n", (1, 2))
    def test_passes_on_samples(self, n):
        rng = random.Random(500 + n)
        for _ in range(3):
            m = rng.randint(2, 3)
            word = tuple((rng.randint(1, m - 1), rng.choice([1, -1])) for _ in range(rng.randint(1, 5)))
            report = markov_suite(BraidWord(m, word), n)
            assert all(e["status"] == "pass" for e in report), report
