"""Tests for the X-operator calculus: family, braiding, traces, spectra."""

import random

import pytest

from spinlink.iqsym import trace_rule_coeff
from spinlink.qalg import GradedScalar, LaurentPoly, RatFunc, binom2, devil, qint
from spinlink.rep import LinOp, circle_value, coproduct_action, cup_n
from spinlink.xcalc import (
    ScaledOp,
    braiding,
    build_X,
    change_of_basis_check,
    h_eigenvalues,
    inverse_braiding,
    lambda_coeff,
    ptrace,
    qtrace,
    r_on_strands,
    relation_suite,
    rotate,
    spectral_basis,
)

RANKS = (1, 2, 3)


@pytest.fixture(scope="module")
def families():
    return {n: build_X(n) for n in RANKS}  # construction itself asserts the dual route


class TestFamily:
    def test_x0_is_identity(self, families):
        for n in RANKS:
            assert families[n][0] == LinOp.identity(("S", "S"), n)

    def test_x_above_rank_is_zero(self, families):
        for n in RANKS:
            assert families[n][n + 1].is_zero()

    def test_min_poly_roots_exact(self, families):
        for n in RANKS:
            x = families[n][1]
            idSS = LinOp.identity(("S", "S"), n)
            evals = [RatFunc.zero()] + [
                RatFunc.from_poly(devil(k, k + 1).scale((-1) ** k)) for k in range(1, n + 1)
            ]
            prod = idSS
            for ev in evals:
                prod = prod @ (x - idSS.scale(ev))
            assert prod.is_zero()
            for skip in range(len(evals)):
                prod = idSS
                for t, ev in enumerate(evals):
                    if t != skip:
                        prod = prod @ (x - idSS.scale(ev))
                assert not prod.is_zero()

    @pytest.mark.parametrize("n", (1, 2))
    def test_commutes_with_coproduct(self, families, n):
        for k in range(n + 1):
            op = families[n][k]
            for i in range(1, n + 1):
                for kind in ("e", "f", "k"):
                    act = coproduct_action(kind, i, ("S", "S"), n)
                    assert act @ op == op @ act


class TestBraiding:
    @pytest.mark.parametrize("n", RANKS)
    def test_inverse(self, families, n):
        r = braiding(n, families[n])
        rinv = inverse_braiding(n, families[n])
        idSS = LinOp.identity(("S", "S"), n)
        assert r @ rinv == idSS
        assert rinv @ r == idSS

    @pytest.mark.parametrize("n", RANKS)
    def test_twist_on_cup(self, families, n):
        r, cup = braiding(n, families[n]), cup_n(n)
        tw = LaurentPoly.v_pow(-n * (2 * n + 1), (-1) ** binom2(n + 1))
        assert r @ cup == cup.scale(tw)

    def test_rank_one_is_kauffman_shape(self, families):
        # R = q^{1/2} X^(0) + q^{-1/2} X^(1), and X^(1) has TL eigenvalue -[2]
        fam = families[1]
        r = braiding(1, fam)
        assert r == fam[0].scale(LaurentPoly.v_pow(1)) + fam[1].scale(LaurentPoly.v_pow(-1))
        e = fam[1]
        assert e @ e == e.scale(qint(2).scale(-1))

    @pytest.mark.parametrize("n", (1, 2))
    def test_yang_baxter_and_far_commutation(self, families, n):
        r1 = r_on_strands(1, 3, n, fam=families[n])
        r2 = r_on_strands(2, 3, n, fam=families[n])
        assert r1 @ r2 @ r1 == r2 @ r1 @ r2
        a1 = r_on_strands(1, 4, n, fam=families[n])
        a3 = r_on_strands(3, 4, n, fam=families[n])
        assert a1 @ a3 == a3 @ a1

    def test_yang_baxter_rank_three(self, families):
        r1 = ScaledOp.lift(r_on_strands(1, 3, 3, fam=families[3]))
        r2 = ScaledOp.lift(r_on_strands(2, 3, 3, fam=families[3]))
        assert r1 @ r2 @ r1 == r2 @ r1 @ r2

    def test_strand_index_range(self):
        with pytest.raises(ValueError):
            r_on_strands(3, 3, 1)


class TestTraces:
    @pytest.mark.parametrize("n", RANKS)
    def test_circle_values(self, n):
        cv = RatFunc.from_poly(circle_value(n))
        assert qtrace(LinOp.identity(("S",), n)) == GradedScalar(0, cv)
        assert qtrace(LinOp.identity(("S", "S"), n)) == GradedScalar(0, cv * cv)

    @pytest.mark.parametrize("n", (1, 2))
    def test_trace_like_on_random_sparse(self, n):
        # the closure weight is a constant sign times the q^{(2 rho, wt)}
        # grading, so the quantum trace is a trace on anything that
        # preserves weights (intertwiners in particular)
        from spinlink.rep import weight

        rng = random.Random(20240917 + n)
        blocks: dict[tuple, list] = {}
        for a in range(1 << n):
            for b in range(1 << n):
                wt = tuple(x + y for x, y in zip(weight(a, n), weight(b, n)))
                blocks.setdefault(wt, []).append((a, b))

        def random_op():
            op = LinOp(n, ("S", "S"), ("S", "S"))
            for _ in range(10):
                block = rng.choice(list(blocks.values()))
                k, j = rng.choice(block), rng.choice(block)
                c = LaurentPoly.q_pow(rng.randint(-3, 3), rng.randint(-4, 4))
                op.set_entry(k, j, op.entry(k, j) + RatFunc.from_poly(c))
            return op

        for _ in range(6):
            a, b = random_op(), random_op()
            assert qtrace(a @ b) == qtrace(b @ a)

    @pytest.mark.parametrize("n", RANKS)
    def test_trace_rule_via_partial_closure(self, families, n):
        idS = LinOp.identity(("S",), n)
        for k in range(n + 1):
            assert ptrace(families[n][k]) == idS.scale(trace_rule_coeff(n, k))

    def test_trace_rule_coefficient_edge_values(self):
        for n in RANKS:
            assert trace_rule_coeff(n, n) == RatFunc.one()
            assert trace_rule_coeff(n, 0) == RatFunc.from_poly(circle_value(n))
        assert trace_rule_coeff(1, 0) == RatFunc.from_poly(qint(2).scale(-1))


class TestSpectral:
    @pytest.mark.parametrize("n", RANKS)
    def test_full_report(self, n):
        report = change_of_basis_check(n)
        assert all(e["status"] == "pass" for e in report), report

    def test_lambda_top_is_one(self):
        for n in RANKS:
            for i in range(1, n + 1):
                assert lambda_coeff(n, i, i) == RatFunc.one()

    def test_x_eigenvalues_on_blocks(self, families):
        for n in RANKS:
            spec = spectral_basis(n, families[n])
            x = families[n][1]
            for i in range(n):
                k = n - i
                lam = RatFunc.from_poly(devil(k, k + 1).scale((-1) ** k))
                assert x @ spec.projectors[i] == spec.projectors[i].scale(lam)
            assert (x @ spec.residual).is_zero()

    def test_h_eigenvalue_list(self):
        vals = h_eigenvalues(1)
        assert vals == [RatFunc(qint(3).scale(-1), qint(2)), RatFunc(LaurentPoly.one(), qint(2))]


class TestRotation:
    @pytest.mark.parametrize("n", RANKS)
    def test_rotation_swaps_indices(self, families, n):
        for k in range(n + 1):
            assert rotate(families[n][k]) == families[n][n - k]


class TestRelationSuite:
    @pytest.mark.parametrize("n", RANKS)
    def test_all_pass(self, n):
        report = relation_suite(n)
        assert all(e["status"] == "pass" for e in report), [e for e in report if e["status"] != "pass"]


class TestRanks:
    def test_exact_elimination_route(self):
        # the fraction-free route must agree with specialization
        from math import comb

        from spinlink.xcalc import rank_of, spectral_basis

        for n in (1, 2):
            spec = spectral_basis(n)
            for i in range(n):
                want = comb(2 * n + 1, i)
                assert rank_of(spec.projectors[i], exact=True) == want
                assert rank_of(spec.projectors[i], exact=False) == want
