"""Batch verification of the identities satisfied by the Catalan elements.

Identities with a denominator are checked with the denominator cleared:
``N / D == R`` is tested as ``N - D * R == 0``, which is equivalent in the
integral domain Z[q, q^-1] and never needs a division to be exact.  The
lemma-level expansions use exact division instead, since exactness is part
of what they claim.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, fields
from itertools import product

from . import laurent
from .catalan import (
    DEFAULT_FAMILY,
    CatalanFamily,
    catalan_profiles,
    enumerate_catalan,
    is_balanced,
    is_catalan,
    qint_sum_checks,
    profile_summation_check,
    cw_profile,
    profile_to_word,
)
from .errors import NotBalanced, NotCatalan
from .freealg import BAR, Element, Word
from .laurent import GAP, QPLUS, exact_div, qint
from .pbw import structure_checks, verify_main_theorem
from .report import PASS, SuiteReport, VerificationReport
from .shuffle import qserre_check, shuffle, shuffle_words

# q^2 - q^-2
QQ = GAP * QPLUS


def _timed(name, params, build) -> VerificationReport:
    t0 = time.perf_counter()
    residual = build()
    return VerificationReport.from_residual(name, params, residual, time.perf_counter() - t0)


# -- the x * (vy) expansion ----------------------------------------------------------

def x_vy_numerator(v: Word) -> Element:
    """``q x*(vy) - q^-1 (vy)*x``."""
    vy = v + "y"
    return shuffle_words("x", vy).shift(1) - shuffle_words(vy, "x").shift(-1)


def x_vy_expansion(v: Word) -> Element:
    """``(q x*(vy) - q^-1 (vy)*x) / (q - q^-1)`` by exact division."""
    return x_vy_numerator(v).divide(GAP)


def x_vy_insertion_sum(v: Word) -> Element:
    """``q^-1 sum_i a1..ai x a(i+1)..am y [2 + 2 e_i]`` with e_i the partial bar sums."""
    height = 0
    terms = []
    for i in range(len(v) + 1):
        if i:
            height += BAR[v[i - 1]]
        terms.append((v[:i] + "x" + v[i:] + "y", qint(2 + 2 * height).shift(-1)))
    return Element.from_words(terms)


def verify_balanced_lemma(v: Word) -> VerificationReport:
    if not is_balanced(v):
        raise NotBalanced(f"{v or '1'} is not balanced")
    return _timed("balanced_expansion", {"v": v or "1"},
                  lambda: x_vy_expansion(v) - x_vy_insertion_sum(v))


def verify_catalan_support(v: Word) -> VerificationReport:
    if not is_catalan(v):
        raise NotCatalan(f"{v or '1'} is not Catalan")
    t0 = time.perf_counter()
    stray = x_vy_expansion(v).restrict(lambda w: not is_catalan(w))
    return VerificationReport.from_residual(
        "catalan_support", {"v": v or "1"}, stray, time.perf_counter() - t0)


def balanced_words(length: int) -> list[Word]:
    if length % 2:
        return []
    return ["".join(p) for p in product("xy", repeat=length) if is_balanced("".join(p))]


def verify_aver(n: int, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    """``C(w) = q * sum_{v in Cat_(n-1)} C(v) (expansion(v), w)`` for every w in Cat_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    expansions = [(family.coefficient(v), x_vy_expansion(v)) for v in enumerate_catalan(n - 1)]
    reports = []
    for w in enumerate_catalan(n):
        t0 = time.perf_counter()
        rhs = laurent.ZERO
        for cv, e in expansions:
            rhs = rhs + cv * e.coeff(w)
        diff = family.coefficient(w) - rhs.shift(1)
        reports.append(VerificationReport.from_residual(
            "coefficient_recursion", {"n": n, "w": w}, Element({w: diff}),
            time.perf_counter() - t0))
    return reports


def formula_agreement_checks(nmax: int, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    """Elevation and profile formulas for C(w) agree; profiles round-trip."""
    reports = []
    for n in range(nmax + 1):
        for w, p in zip(enumerate_catalan(n), catalan_profiles(n)):
            reports.append(VerificationReport.from_residual(
                "coefficient_formulas_agree", {"w": w or "1"},
                Element({w: family.coefficient(w) - cw_profile(p)})))
            back = profile_to_word(p)
            ok = back == w
            reports.append(VerificationReport(
                "profile_round_trip", {"w": w or "1"}, PASS if ok else "fail",
                None if ok else Element({w: 1}) - Element({back: 1})))
    return reports


CATALAN_NUMBERS = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)


def enumeration_checks(nmax: int) -> list[VerificationReport]:
    reports = []
    for n in range(nmax + 1):
        count = len(enumerate_catalan(n))
        ok = n >= len(CATALAN_NUMBERS) or count == CATALAN_NUMBERS[n]
        reports.append(VerificationReport(
            "catalan_count", {"n": n}, PASS if ok else "fail", None if ok else Element({"": count}),
            detail=f"{count} words"))
    return reports


# -- commutation and the relation corollaries --------------------------------------

def verify_commutation(imax: int, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    """``C_i * C_j == C_j * C_i`` for 1 <= i < j <= imax."""
    C = family.c
    return [
        _timed("catalan_commute", {"i": i, "j": j},
               lambda i=i, j=j: shuffle(C(i), C(j)) - shuffle(C(j), C(i)))
        for i in range(1, imax + 1) for j in range(i + 1, imax + 1)
    ]


def _sum(elements) -> Element:
    total = Element()
    for e in elements:
        total = total + e
    return total


def mixed_product(i, j, f: CatalanFamily) -> Element:
    """``q^-1 C_(i+j+1) = (q (xC_i)*(C_j y) - q^-1 (C_j y)*(xC_i)) / (q - q^-1)``."""
    xc, cy = f.xc(i), f.cy(j)
    numerator = shuffle(xc, cy).shift(1) - shuffle(cy, xc).shift(-1)
    return numerator - f.c(i + j + 1).shift(-1) * GAP


def delta_commutation_x(i, j, f):
    lhs = shuffle(f.xc(i), f.c(j)) - shuffle(f.c(j), f.xc(i))
    rhs = _sum(shuffle(f.xc(i + l), f.c(j - l)).shift(2 - 2 * l) for l in range(1, j + 1))
    return lhs - rhs * QQ


def delta_commutation_y(i, j, f):
    lhs = shuffle(f.c(j), f.cy(i)) - shuffle(f.cy(i), f.c(j))
    rhs = _sum(shuffle(f.c(j - l), f.cy(i + l)).shift(2 - 2 * l) for l in range(1, j + 1))
    return lhs - rhs * QQ


def _qcomm_x(i, j, f):
    return shuffle(f.xc(i), f.xc(j)).shift(1) - shuffle(f.xc(j), f.xc(i)).shift(-1)


def _qcomm_y(i, j, f):
    return shuffle(f.cy(j), f.cy(i)).shift(1) - shuffle(f.cy(i), f.cy(j)).shift(-1)


def odd_gap_x(i, j, f):
    r = (i - j - 1) // 2
    rhs = _sum(shuffle(f.xc(j + l), f.xc(i - l)).shift(1 - 2 * l) for l in range(1, r + 1))
    return _qcomm_x(i, j, f) + rhs * QQ


def odd_gap_y(i, j, f):
    r = (i - j - 1) // 2
    rhs = _sum(shuffle(f.cy(i - l), f.cy(j + l)).shift(1 - 2 * l) for l in range(1, r + 1))
    return _qcomm_y(i, j, f) + rhs * QQ


def even_gap_x(i, j, f):
    r = (i - j) // 2
    square = shuffle(f.xc(j + r), f.xc(i - r)).shift(j - i + 2)
    rhs = _sum(shuffle(f.xc(j + l), f.xc(i - l)).shift(1 - 2 * l) for l in range(1, r))
    return _qcomm_x(i, j, f) + square * exact_div(QQ, QPLUS) + rhs * QQ


def even_gap_y(i, j, f):
    r = (i - j) // 2
    square = shuffle(f.cy(i - r), f.cy(j + r)).shift(j - i + 2)
    rhs = _sum(shuffle(f.cy(i - l), f.cy(j + l)).shift(1 - 2 * l) for l in range(1, r))
    return _qcomm_y(i, j, f) + square * exact_div(QQ, QPLUS) + rhs * QQ


def alternate_commutation_x(i, j, f):
    lhs = shuffle(f.xc(i), f.c(j + 1)) - shuffle(f.c(j + 1), f.xc(i))
    rhs = shuffle(f.xc(i + 1), f.c(j)).shift(2) - shuffle(f.c(j), f.xc(i + 1)).shift(-2)
    return lhs - rhs


def alternate_commutation_y(i, j, f):
    lhs = shuffle(f.c(j + 1), f.cy(i)) - shuffle(f.cy(i), f.c(j + 1))
    rhs = shuffle(f.c(j), f.cy(i + 1)).shift(2) - shuffle(f.cy(i + 1), f.c(j)).shift(-2)
    return lhs - rhs


def q_commutation_adjacent_x(i, f):
    return shuffle(f.xc(i + 1), f.xc(i)).shift(1) - shuffle(f.xc(i), f.xc(i + 1)).shift(-1)


def q_commutation_adjacent_y(i, f):
    return shuffle(f.cy(i), f.cy(i + 1)).shift(1) - shuffle(f.cy(i + 1), f.cy(i)).shift(-1)


def q_commutation_distinct_x(i, j, f):
    lhs = shuffle(f.xc(i + 1), f.xc(j)).shift(1) - shuffle(f.xc(j), f.xc(i + 1)).shift(-1)
    rhs = shuffle(f.xc(i), f.xc(j + 1)).shift(-1) - shuffle(f.xc(j + 1), f.xc(i)).shift(1)
    return lhs - rhs


def q_commutation_distinct_y(i, j, f):
    lhs = shuffle(f.cy(j), f.cy(i + 1)).shift(1) - shuffle(f.cy(i + 1), f.cy(j)).shift(-1)
    rhs = shuffle(f.cy(j + 1), f.cy(i)).shift(-1) - shuffle(f.cy(i), f.cy(j + 1)).shift(1)
    return lhs - rhs


def verify_relation_corollaries(imax: int, jmax: int,
                                family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    """Every relation among xC_i, C_j, C_j y for 0 <= i <= imax, 0 <= j <= jmax.

    Each relation is checked together with its zeta-mirror (the ``_y``
    member), independently.  Empty sums are zero.
    """
    f = family
    reports = []

    def add(name, params, fn, *args):
        reports.append(_timed(name, params, lambda: fn(*args, f)))

    for i, j in product(range(imax + 1), range(jmax + 1)):
        p = {"i": i, "j": j}
        add("mixed_product", p, mixed_product, i, j)
        add("delta_commutation_x", p, delta_commutation_x, i, j)
        add("delta_commutation_y", p, delta_commutation_y, i, j)
        add("alternate_commutation_x", p, alternate_commutation_x, i, j)
        add("alternate_commutation_y", p, alternate_commutation_y, i, j)
        if i > j:
            r = (i - j) // 2
            kind = "odd" if (i - j) % 2 else "even"
            pr = {"i": i, "j": j, "r": r}
            if kind == "odd":
                add("odd_gap_x", pr, odd_gap_x, i, j)
                add("odd_gap_y", pr, odd_gap_y, i, j)
            else:
                add("even_gap_x", pr, even_gap_x, i, j)
                add("even_gap_y", pr, even_gap_y, i, j)
        if i != j:
            add("q_commutation_distinct_x", p, q_commutation_distinct_x, i, j)
            add("q_commutation_distinct_y", p, q_commutation_distinct_y, i, j)
    for i in range(max(imax, jmax) + 1):
        add("q_commutation_adjacent_x", {"i": i}, q_commutation_adjacent_x, i)
        add("q_commutation_adjacent_y", {"i": i}, q_commutation_adjacent_y, i)
    return reports


# -- the whole suite -------------------------------------------------------------------

@dataclass
class VerifyConfig:
    """Bounds for :func:`verify_all`.  A bound of 0 switches its family off."""

    max_n: int = 5            # main theorem, recurrences, zeta/structure checks
    max_commute: int = 5      # C_i * C_j = C_j * C_i for i < j <= max_commute
    max_ij: int = 3           # relation corollaries
    catalan_n: int = 8        # enumeration counts, C(w) formula agreement, round trip
    profile_n: int = 6        # profile summation identity
    sum_n: int = 20           # q-integer sum identities
    balanced_len: int = 8     # balanced expansion, all balanced v up to this length
    support_n: int = 4        # Catalan support, all Catalan v with half-length <= this
    aver_n: int = 5           # coefficient recursion
    serre: bool = True

    @classmethod
    def empty(cls) -> "VerifyConfig":
        return cls(**{fl.name: (False if fl.type in ("bool", bool) else 0) for fl in fields(cls)})


def catalan_suite(cfg: VerifyConfig, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    reports = []
    if cfg.catalan_n:
        reports += enumeration_checks(cfg.catalan_n)
        reports += formula_agreement_checks(cfg.catalan_n, family)
    if cfg.profile_n:
        for n in range(1, cfg.profile_n + 1):
            reports += [profile_summation_check(p) for p in catalan_profiles(n)]
    if cfg.sum_n:
        reports += qint_sum_checks(cfg.sum_n)
    if cfg.balanced_len:
        for m in range(0, cfg.balanced_len + 1, 2):
            reports += [verify_balanced_lemma(v) for v in balanced_words(m)]
    if cfg.support_n:
        for n in range(cfg.support_n + 1):
            reports += [verify_catalan_support(v) for v in enumerate_catalan(n)]
    if cfg.aver_n:
        for n in range(1, cfg.aver_n + 1):
            reports += verify_aver(n, family)
    return reports


def theorem_suite(cfg: VerifyConfig, family: CatalanFamily = DEFAULT_FAMILY,
                  closed=None) -> list[VerificationReport]:
    if not cfg.max_n:
        return []
    if closed is None and family is not DEFAULT_FAMILY:
        from .pbw import pbw_image_closed

        def closed(label):
            return pbw_image_closed(label, family)
    return verify_main_theorem(cfg.max_n, closed, family) + structure_checks(cfg.max_n)


def relations_suite(cfg: VerifyConfig, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    reports = []
    if cfg.max_commute:
        reports += verify_commutation(cfg.max_commute, family)
    if cfg.max_ij:
        reports += verify_relation_corollaries(cfg.max_ij, cfg.max_ij, family)
    return reports


def verify_all(cfg: VerifyConfig | None = None, family: CatalanFamily = DEFAULT_FAMILY,
               closed=None) -> SuiteReport:
    """Run every identity family within the configured bounds.

    An all-zero configuration runs nothing; the result is then flagged
    ``vacuous``.
    """
    cfg = cfg or VerifyConfig()
    suite = SuiteReport()
    if cfg.serre:
        suite.extend(qserre_check())
    suite.extend(theorem_suite(cfg, family, closed))
    suite.extend(catalan_suite(cfg, family))
    suite.extend(relations_suite(cfg, family))
    return suite
