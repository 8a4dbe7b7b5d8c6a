"""Expression model: pointwise and jet evaluation, serialization."""

import math
import random
from fractions import Fraction

import pytest

from hypderiv.catalog import entry
from hypderiv.core import EvalControl, HypSpec, param
from hypderiv.errors import BranchPointEvaluation
from hypderiv.expressions import (
    ArgMap,
    Expr,
    Hyp,
    eval_expr,
    eval_expr_jet,
    expr,
    expz,
    format_expr,
    hyp,
    map_point,
    nth_derivative,
    pow1mz,
    powz,
    term,
)
from hypderiv.identities import reduce_cancellation

CTRL = EvalControl(rel_tol=1e-16)


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def table_lhs(c):
    """z^{c-1} 2F1(1/2, 2/3; c; z)"""
    return expr(
        term(1, powz(param(c) - 1), hyp(HypSpec.of([0.5, 2 / 3], [c])))
    )


class TestEvalExpr:
    def test_power(self):
        assert eval_expr(expr(term(1, powz(2))), 3) == 9

    def test_empty(self):
        assert eval_expr(Expr(()), 0.4) == 0

    def test_zero_coeff_term_skipped(self):
        # a vanishing coefficient must not force evaluation of its factors
        bad = Hyp(HypSpec.of([0.5], [-1.0]), ArgMap.IDENTITY)
        assert eval_expr(Expr((term(0, bad), term(2, powz(1)))), 0.5) == 1

    def test_exceptional_line_value(self):
        # n=4, a=1/2, b=2/3, c=2 at z=1/3
        p = {"a1": param(0.5), "a2": param(2 / 3), "c": param(2), "n": 4}
        v = eval_expr(entry("Th1-4-exceptional").rhs(p), 1 / 3, CTRL)
        assert rel(v, 3.39340187542396) < 1e-14

    def test_exp_factors(self):
        e = expr(term(1, expz(1), expz(-1)))
        assert rel(eval_expr(e, 0.37), 1) < 1e-15

    def test_branch_points(self):
        with pytest.raises(BranchPointEvaluation):
            eval_expr(expr(term(1, powz(0.5))), 0)
        with pytest.raises(BranchPointEvaluation):
            eval_expr(expr(term(1, hyp(HypSpec.of([0.5, 0.6], [2]), ArgMap.PFAFF))), 1)


class TestEvalExprJet:
    def test_order_zero_agreement(self):
        rng = random.Random(6)
        for _ in range(10):
            a = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            b = complex(rng.uniform(0.5, 2.5), rng.uniform(-1, 1))
            e = expr(
                term(
                    complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                    powz(rng.uniform(-1.5, 1.5)),
                    pow1mz(rng.uniform(-1.5, 1.5)),
                    hyp(HypSpec.of([a, 1.2], [b])),
                )
            )
            z0 = rng.choice([0.2, 1 / 3, 0.7])
            j = eval_expr_jet(e, z0, 3)
            assert rel(j.coeffs[0], eval_expr(e, z0)) < 1e-12

    def test_table_first_row_derivative(self):
        j = eval_expr_jet(table_lhs(1), 1 / 3, 4, CTRL)
        v = math.factorial(4) * j.coeffs[4]
        assert rel(v, 16.2802578209098) < 1e-14

    def test_exp_product_unit_jet(self):
        j = eval_expr_jet(expr(term(1, expz(1), expz(-1))), 0.4, 4)
        assert rel(j.coeffs[0], 1) < 1e-13
        assert all(abs(c) < 1e-13 for c in j.coeffs[1:])


class TestNthDerivative:
    def test_linear(self):
        assert rel(nth_derivative(expr(term(1, powz(1))), 1, 0.37), 1) < 1e-15

    def test_table_values(self):
        assert rel(nth_derivative(table_lhs(4), 4, 1 / 3, CTRL), 3.31081155003091) < 1e-14
        assert rel(nth_derivative(table_lhs(7), 4, 1 / 3, CTRL), 41.6637846070299) < 1e-14

    def test_linearity(self):
        rng = random.Random(7)
        s1 = HypSpec.of([0.3, 1.1], [1.7])
        s2 = HypSpec.of([0.9], [2.1])
        t1 = term(1.3 - 0.2j, powz(0.7), hyp(s1))
        t2 = term(-0.4 + 1j, pow1mz(1.2), hyp(s2))
        for n in (1, 3, 5):
            both = nth_derivative(Expr((t1, t2)), n, 0.4)
            split = nth_derivative(Expr((t1,)), n, 0.4) + nth_derivative(
                Expr((t2,)), n, 0.4
            )
            assert rel(both, split) < 1e-12


class TestArgMap:
    def test_pfaff_involution_on_rationals(self):
        for z in (Fraction(1, 3), Fraction(2, 7), Fraction(-3, 5)):
            w = z / (z - 1)
            assert w / (w - 1) == z

    def test_map_point(self):
        assert map_point(ArgMap.IDENTITY, 0.3) == 0.3
        assert map_point(ArgMap.NEGATE, 0.3) == -0.3
        assert map_point(ArgMap.PFAFF, 1 / 3) == pytest.approx(-0.5, rel=1e-15)


class TestCancellationTransparency:
    def test_value_unchanged(self):
        full = HypSpec.of([5, 0.5, 2 / 3], [5, 2])
        reduced = reduce_cancellation(full)
        assert reduced.p == 2 and reduced.q == 1
        e_full = expr(term(1, hyp(full)))
        e_red = expr(term(1, hyp(reduced)))
        for z in (0.2, 1 / 3, 0.7):
            assert rel(eval_expr(e_full, z), eval_expr(e_red, z)) < 1e-12


class TestSerialization:
    def test_format(self):
        e = expr(
            term(
                2.5,
                powz(param(3)),
                pow1mz(param(-0.5)),
                expz(-1),
                hyp(HypSpec.of([0.5, 2], [3]), ArgMap.NEGATE),
            )
        )
        assert format_expr(e) == "2.5 powz 3 pow1mz -0.5 exp - pfq 2 1 0.5 2 ; 3 negate"

    def test_exact_vs_numeric_params_distinguished(self):
        line = format_expr(expr(term(1, powz(param(3)))))
        assert line == "1.0 powz 3"
        line = format_expr(expr(term(1, powz(param(3.0)))))
        assert line == "1.0 powz 3.0"

    def test_one_term_per_line(self):
        e = Expr((term(1, powz(1)), term(2, expz(1))))
        assert format_expr(e).splitlines() == ["1.0 powz 1", "2.0 exp +"]
