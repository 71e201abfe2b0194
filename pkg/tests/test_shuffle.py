import itertools
import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import qshuffle.shuffle as sh
from qshuffle.freealg import ONE, Element, element_bidegree, zeta
from qshuffle.laurent import qint
from qshuffle.shuffle import (
    pairing,
    serre_residual,
    shuffle,
    shuffle_interleave,
    shuffle_interleave_words,
    shuffle_letter,
    shuffle_many,
    shuffle_tail,
    shuffle_words,
)

from conftest import GOLDEN, elements, qq


W = Element.word


def all_words(n):
    return ["".join(t) for t in itertools.product("xy", repeat=n)]


@pytest.mark.parametrize("u,v", list(GOLDEN))
def test_golden_expansions(u, v):
    expected = Element(GOLDEN[(u, v)])
    assert shuffle_words(u, v) == expected
    assert shuffle_tail(W(u), W(v)) == expected
    assert shuffle_interleave_words(u, v) == expected


def test_pairing_values():
    assert pairing("x", "x") == pairing("y", "y") == 2
    assert pairing("x", "y") == pairing("y", "x") == -2


def test_unit_and_zero():
    v = Element({"xyy": qint(3), "yx": 2})
    assert shuffle(ONE, v) == v
    assert shuffle(v, ONE) == v
    assert shuffle(Element(), v) == Element()
    assert shuffle(ONE, ONE) == ONE


def test_shuffle_letter_examples():
    # worked by hand from the single-letter insertion rule
    assert shuffle_letter("x", "yx") == Element({"xyx": 1, "yxx": qq(-2) + 1})
    assert shuffle_letter("x", "yx", side="right") == shuffle_words("yx", "x")
    assert shuffle_letter("x", "xy") == Element({"xxy": 1 + qq(2), "xyx": 1})
    assert shuffle_letter("x", "yyy") == Element(GOLDEN[("x", "yyy")])
    assert shuffle_letter("x", "") == W("x")
    with pytest.raises(ValueError):
        shuffle_letter("x", "y", side="middle")


@pytest.mark.parametrize("a", "xy")
def test_letter_rule_matches_general_product(a):
    for n in range(0, 7):
        for v in all_words(n):
            assert shuffle_letter(a, v, "left") == shuffle_words(a, v)
            assert shuffle_letter(a, v, "right") == shuffle_words(v, a)


def test_q_serre_relations():
    assert serre_residual("x", "y") == Element()
    assert serre_residual("y", "x") == Element()
    reports = sh.qserre_check()
    assert len(reports) == 2 and all(r.passed for r in reports)


def test_q_serre_written_out():
    x, y = W("x"), W("y")
    lhs = (shuffle_many(x, x, x, y) - shuffle_many(x, x, y, x) * qint(3)
           + shuffle_many(x, y, x, x) * qint(3) - shuffle_many(y, x, x, x))
    assert lhs == Element()


def test_head_and_tail_agree_exhaustively():
    # every word pair with combined length <= 10
    for total in range(0, 11):
        for r in range(0, total + 1):
            for u in all_words(r):
                for v in all_words(total - r):
                    assert shuffle_words(u, v) == Element(sh._tail_words(u, v)), (u, v)


def test_interleaving_oracle_exhaustively():
    for total in range(0, 11):
        for r in range(0, total + 1):
            for u in all_words(r):
                for v in all_words(total - r):
                    assert shuffle_words(u, v) == shuffle_interleave_words(u, v), (u, v)


def test_random_long_pairs_agree():
    rng = random.Random(20240611)
    for _ in range(60):
        total = rng.randint(11, 16)
        r = rng.randint(0, total)
        u = "".join(rng.choice("xy") for _ in range(r))
        v = "".join(rng.choice("xy") for _ in range(total - r))
        head = shuffle_words(u, v)
        assert head == shuffle_tail(W(u), W(v))
        if min(r, total - r) <= 5:
            assert head == shuffle_interleave_words(u, v)


def test_coefficients_at_q_equal_one_count_shuffles():
    from math import comb
    from qshuffle.laurent import eval_rational
    for u, v in [("xyx", "yy"), ("xxxx", "yxy"), ("xy", "xy")]:
        total = sum(eval_rational(c, 1) for _, c in shuffle_words(u, v).items())
        assert total == comb(len(u) + len(v), len(u))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_three_routes_agree_on_elements(a, b):
    head = shuffle(a, b)
    assert head == shuffle_tail(a, b)
    assert head == shuffle_interleave(a, b)


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_zeta_is_antihomomorphism(a, b):
    assert zeta(shuffle(a, b)) == shuffle(zeta(b), zeta(a))


@settings(max_examples=60, deadline=None)
@given(st.text("xy", max_size=6), st.text("xy", max_size=6))
def test_grading(u, v):
    prod = shuffle_words(u, v)
    bu = (u.count("x"), u.count("y"))
    bv = (v.count("x"), v.count("y"))
    assert element_bidegree(prod) == (bu[0] + bv[0], bu[1] + bv[1])


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_bilinearity(a, b, c):
    assert shuffle(a + b, c) == shuffle(a, c) + shuffle(b, c)
    assert shuffle(a, b * qq(3)) == shuffle(a, b) * qq(3)


def test_threads_give_identical_results():
    pairs = [("xyxxy", "yyxyx"), ("xxyy", "xyxy"), ("xxxyyy", "xyy")]
    expected = [shuffle_tail(W(u), W(v)) for u, v in pairs]
    results = [None] * 8
    barrier = threading.Barrier(8)

    def worker(k):
        barrier.wait()
        results[k] = [shuffle_words(u, v) for u, v in pairs]

    threads = [threading.Thread(target=worker, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results)


def test_memo_cap_resets_table():
    sh.clear_memo()
    sh.set_memo_cap(5)
    try:
        reference = shuffle_tail(W("xyxyxy"), W("yyxx"))
        assert shuffle_words("xyxyxy", "yyxx") == reference
        assert sh.memo_size() <= 5
    finally:
        sh.set_memo_cap(sh.DEFAULT_MEMO_CAP)
        sh.clear_memo()
    with pytest.raises(ValueError):
        sh.set_memo_cap(0)
