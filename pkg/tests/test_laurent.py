from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qshuffle import laurent
from qshuffle.errors import NonExactDivision, ZeroEvaluationPoint
from qshuffle.laurent import (
    GAP,
    QPLUS,
    LaurentPoly,
    eval_rational,
    exact_div,
    factor_brackets,
    qfact,
    qint,
    qsum_even,
)

from conftest import POINTS, br, laurent_polys, nonzero_laurent, qq


def qint_oracle(n, q0):
    return (q0 ** n - q0 ** -n) / (q0 - 1 / q0)


@pytest.mark.parametrize("n", range(0, 25))
def test_qint_matches_defining_ratio(n):
    for q0 in POINTS[:30]:
        assert eval_rational(qint(n), q0) == qint_oracle(n, q0)


def test_qint_examples():
    assert qint(0) == 0
    assert qint(1) == 1
    assert qint(2) == LaurentPoly({1: 1, -1: 1})
    assert qint(3) == LaurentPoly({2: 1, 0: 1, -2: 1})


def test_qint_negative_is_odd():
    assert qint(-3) == -qint(3)
    for q0 in POINTS[:5]:
        assert eval_rational(qint(-4), q0) == qint_oracle(-4, q0)


def test_qfact_examples():
    assert qfact(0) == 1
    assert qfact(1) == 1
    assert qfact(2) == qint(2)
    assert qfact(3) == LaurentPoly({1: 1, -1: 1}) * LaurentPoly({2: 1, 0: 1, -2: 1})
    with pytest.raises(ValueError):
        qfact(-1)


def test_ring_examples():
    assert laurent.Q + laurent.QINV == QPLUS
    assert GAP * QPLUS == LaurentPoly({2: 1, -2: -1})
    assert qint(2) * qint(2) == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert qq(3).shift(-5) == qq(-2)
    assert 3 - qq(0) == 2
    assert (GAP ** 0) == 1
    assert qq(2) ** -3 == qq(-6)
    with pytest.raises(NonExactDivision):
        GAP ** -1


def test_exact_div_examples():
    assert exact_div(LaurentPoly({2: 1, -2: -1}), GAP) == QPLUS
    assert exact_div(0, QPLUS) == 0
    with pytest.raises(NonExactDivision):
        exact_div(laurent.Q, QPLUS)
    with pytest.raises(ZeroDivisionError):
        exact_div(laurent.Q, 0)
    assert exact_div(LaurentPoly({3: 6}), LaurentPoly({1: 3})) == LaurentPoly({2: 2})
    with pytest.raises(NonExactDivision):
        exact_div(LaurentPoly({0: 3}), LaurentPoly({0: 2}))


def test_eval_rational_examples():
    assert eval_rational(qint(2), 2) == Fraction(5, 2)
    assert eval_rational(1, Fraction(7, 3)) == 1
    assert eval_rational(GAP, 1) == 0
    assert eval_rational(qint(2), "1/2") == Fraction(5, 2)
    with pytest.raises(ZeroEvaluationPoint):
        eval_rational(qint(2), 0)


@pytest.mark.parametrize("n", range(0, 31))
def test_qint_at_one_is_n(n):
    assert eval_rational(qint(n), 1) == n


@pytest.mark.parametrize("n", range(0, 21))
def test_even_qint_prefix_sum(n):
    assert qsum_even(1, n) == qint(n) * qint(n + 1)


def test_even_qint_window_sums():
    for r in range(0, 21):
        for s in range(r + 1, 21):
            assert qsum_even(r + 1, s) == qint(s) * qint(s + 1) - qint(r) * qint(r + 1)


def test_json_round_trip():
    p = LaurentPoly({-2: 1, 0: 2, 2: 1})
    assert laurent.to_json(p) == {"-2": "1", "0": "2", "2": "1"}
    assert laurent.from_json({"-2": "1", "0": "2", "2": "1"}) == p
    assert laurent.from_json({}) == 0


def test_text_rendering():
    assert laurent.to_text(LaurentPoly({2: 1, 0: 2, -2: 1})) == "q^2 + 2 + q^-2"
    assert laurent.to_text(LaurentPoly({1: -3, -1: 1})) == "-3*q + q^-1"
    assert laurent.to_text(LaurentPoly()) == "0"


def test_bracket_factorisation():
    c, s, g, brackets, rest = factor_brackets(br(4, 3, 3, 2, 2))
    assert (c, s, g, rest) == (1, 0, 0, 1)
    assert brackets == {4: 1, 3: 2, 2: 2}
    assert laurent.to_latex(br(3, 2, 2)) == r"\lbrack 3\rbrack_q \lbrack 2\rbrack_q^{2}"
    assert laurent.to_latex(LaurentPoly({-4: 1, 0: -1})) == r"-q^{-2} (q-q^{-1}) \lbrack 2\rbrack_q"
    assert laurent.to_latex(LaurentPoly({0: 1, 2: 1})) == r"q^{1} \lbrack 2\rbrack_q"


def test_big_coefficients_stay_exact():
    big = qfact(40) * qfact(40)
    assert eval_rational(big, 1) == (__import__("math").factorial(40)) ** 2


@given(laurent_polys)
def test_canonical_negation(p):
    assert (p + (-p)).terms == {}
    assert p - p == 0


@given(laurent_polys, laurent_polys, laurent_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert all(coeff != 0 for coeff in (a * b).terms.values())


@given(laurent_polys, nonzero_laurent)
def test_exact_div_inverts_multiplication(a, b):
    assert exact_div(a * b, b) == a


@given(nonzero_laurent, st.integers(1, 5))
def test_non_multiple_is_rejected(b, extra):
    # adding a lone monomial q^k with k outside b's span can never give a multiple
    # of q + q^-1, since every multiple of it vanishes at q = i
    p = QPLUS * b + qq(extra * 2)
    with pytest.raises(NonExactDivision):
        exact_div(p, QPLUS)


@given(laurent_polys, laurent_polys)
def test_evaluation_is_a_ring_map(a, b):
    q0 = Fraction(3, 2)
    assert eval_rational(a * b, q0) == eval_rational(a, q0) * eval_rational(b, q0)
    assert eval_rational(a + b, q0) == eval_rational(a, q0) + eval_rational(b, q0)


@given(laurent_polys)
def test_hash_consistent_with_equality(p):
    assert hash(p) == hash(LaurentPoly(p.terms))
