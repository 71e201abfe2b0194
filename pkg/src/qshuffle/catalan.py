"""Catalan words, elevation sequences, profiles and the Catalan elements C_n.

A profile is a flat tuple ``(l0, h1, l1, h2, ..., hr, lr)`` of odd length;
``r = len(profile) // 2`` and the r = 0 profile ``(0,)`` belongs to the
trivial word.
"""
from __future__ import annotations

import time
from functools import lru_cache
from typing import Callable, Sequence

from . import laurent
from .errors import InvalidProfile, NotCatalan
from .freealg import BAR, Element, Word, concat, weight
from .laurent import LaurentPoly, exact_div, qfact, qint, qsum_even
from .report import VerificationReport

Profile = tuple[int, ...]


def is_balanced(w: Word) -> bool:
    return weight(w) == 0


def is_catalan(w: Word) -> bool:
    height = 0
    for a in w:
        height += BAR[a]
        if height < 0:
            return False
    return height == 0


@lru_cache(maxsize=None)
def enumerate_catalan(n: int) -> tuple[Word, ...]:
    """All Catalan words of length 2n, in canonical (lexicographic, x < y) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Word] = []

    def extend(prefix: str, xs: int, ys: int) -> None:
        if xs == n and ys == n:
            out.append(prefix)
            return
        if xs < n:
            extend(prefix + "x", xs + 1, ys)
        if ys < xs:
            extend(prefix + "y", xs, ys + 1)

    extend("", 0, 0)
    return tuple(out)


def elevation(w: Word) -> tuple[int, ...]:
    """Partial bar sums ``(e0, e1, ..., e2n)`` of a Catalan word."""
    if not is_catalan(w):
        raise NotCatalan(f"{w or '1'} is not a Catalan word")
    seq = [0]
    for a in w:
        seq.append(seq[-1] + BAR[a])
    return tuple(seq)


def profile(w: Word) -> Profile:
    """Drop interior elevations lying on a monotone run; keep valleys and peaks."""
    e = elevation(w)
    kept = [e[0]]
    for i in range(1, len(e) - 1):
        if (e[i + 1] - e[i]) * (e[i] - e[i - 1]) < 0:
            kept.append(e[i])
    if len(e) > 1:
        kept.append(e[-1])
    return tuple(kept)


def validate_profile(p: Sequence[int]) -> Profile:
    """Check the five conditions characterising profiles of Catalan words."""
    p = tuple(int(v) for v in p)
    if len(p) % 2 == 0:
        raise InvalidProfile(f"profile {p} must have odd length (l0, h1, l1, ..., hr, lr)")
    r = len(p) // 2
    lows, highs = p[0::2], p[1::2]
    if lows[0] != 0:
        raise InvalidProfile(f"profile {p}: condition (i) l0 = 0 fails")
    for i in range(1, r):
        if lows[i] < 0:
            raise InvalidProfile(f"profile {p}: condition (ii) l{i} >= 0 fails")
    if lows[r] != 0:
        raise InvalidProfile(f"profile {p}: condition (iii) l{r} = 0 fails")
    for i in range(1, r + 1):
        if not lows[i - 1] < highs[i - 1]:
            raise InvalidProfile(f"profile {p}: condition (iv) l{i - 1} < h{i} fails")
        if not highs[i - 1] > lows[i]:
            raise InvalidProfile(f"profile {p}: condition (v) h{i} > l{i} fails")
    return p


def profile_to_word(p: Sequence[int]) -> Word:
    """``x^h1 y^(h1-l1) x^(h2-l1) y^(h2-l2) ... x^(hr-l(r-1)) y^hr``."""
    p = validate_profile(p)
    parts = []
    for i in range(1, len(p), 2):
        low_before, high, low_after = p[i - 1], p[i], p[i + 1]
        parts.append("x" * (high - low_before) + "y" * (high - low_after))
    return "".join(parts)


def profile_halflength(p: Sequence[int]) -> int:
    p = validate_profile(p)
    return sum(p[i] - p[i + 1] for i in range(1, len(p), 2))


def catalan_profiles(n: int) -> list[Profile]:
    return [profile(w) for w in enumerate_catalan(n)]


# -- the coefficient C(w) --------------------------------------------------------

def cw_elevation(w: Word) -> LaurentPoly:
    """``[1 + e0][1 + e1] ... [1 + e2n]`` over the elevation sequence."""
    result = laurent.ONE
    for e in elevation(w):
        result = result * qint(1 + e)
    return result


def cw_profile(p: Sequence[int]) -> LaurentPoly:
    """The double ratio of q-factorials attached to any natural-number sequence.

    ``prod [h]! [h+1]!  /  prod [l]! [l+1]!`` over peaks h and valleys l.
    Raises NonExactDivision if the ratio is not a Laurent polynomial.
    """
    p = tuple(p)
    if len(p) % 2 == 0 or any(v < 0 for v in p):
        raise InvalidProfile(f"{p} is not a sequence (l0, h1, ..., hr, lr) of naturals")
    num, den = laurent.ONE, laurent.ONE
    for h in p[1::2]:
        num = num * qfact(h) * qfact(h + 1)
    for l in p[0::2]:
        den = den * qfact(l) * qfact(l + 1)
    return exact_div(num, den)


# -- Catalan elements -------------------------------------------------------------

class CatalanFamily:
    """C_n, x C_n and C_n y for a given word-coefficient rule, cached by n.

    The default rule is :func:`cw_elevation`; passing a different rule gives
    the deliberately corrupted families used as negative controls.
    """

    def __init__(self, coefficient: Callable[[Word], LaurentPoly] = cw_elevation,
                 name: str = "C"):
        self.coefficient = coefficient
        self.name = name
        self._c: dict[int, Element] = {}
        self._xc: dict[int, Element] = {}
        self._cy: dict[int, Element] = {}

    def c(self, n: int) -> Element:
        if n not in self._c:
            self._c[n] = Element._wrap(
                {w: self.coefficient(w) for w in enumerate_catalan(n)}
            )
        return self._c[n]

    def xc(self, n: int) -> Element:
        if n not in self._xc:
            self._xc[n] = concat(Element.word("x"), self.c(n))
        return self._xc[n]

    def cy(self, n: int) -> Element:
        if n not in self._cy:
            self._cy[n] = concat(self.c(n), Element.word("y"))
        return self._cy[n]


DEFAULT_FAMILY = CatalanFamily()


def catalan_element(n: int) -> Element:
    """``C_n = sum over Cat_n of w * C(w)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return DEFAULT_FAMILY.c(n)


# -- the profile summation identity ---------------------------------------------

def profile_summation_terms(p: Sequence[int]) -> list[tuple[int, Profile, LaurentPoly]]:
    """Right-hand-side terms ``(i, lowered profile, sum of [2t])`` for i = xi..r-1.

    The lowered profile keeps entries up to ``l_i`` and decrements every
    later peak and valley except the final ``l_r``.
    """
    p = validate_profile(p)
    r = len(p) // 2
    if r < 1:
        raise InvalidProfile("the profile summation identity needs r >= 1")
    lows, highs = p[0::2], p[1::2]
    xi = max(i for i in range(r) if lows[i] == 0)
    terms = []
    for i in range(xi, r):
        lowered = list(p[: 2 * i + 1])
        for k in range(2 * i + 1, 2 * r):
            lowered.append(p[k] - 1)
        lowered.append(p[2 * r])
        terms.append((i, tuple(lowered), qsum_even(lows[i] + 1, highs[i])))
    return terms


def profile_summation_check(p: Sequence[int]) -> VerificationReport:
    t0 = time.perf_counter()
    p = validate_profile(p)
    lhs = cw_profile(p)
    rhs = laurent.ZERO
    for _, lowered, s in profile_summation_terms(p):
        rhs = rhs + cw_profile(lowered) * s
    return VerificationReport.from_residual(
        "profile_summation", {"profile": list(p)},
        Element({"": lhs - rhs}), time.perf_counter() - t0,
    )


def qint_sum_checks(nmax: int) -> list[VerificationReport]:
    """Both sum identities for [2t]_q: prefix sums and windowed sums, up to nmax."""
    reports = []

    def prod(n):
        return qint(n) * qint(n + 1)

    for n in range(nmax + 1):
        residual = qsum_even(1, n) - prod(n)
        reports.append(VerificationReport.from_residual(
            "qint_sum", {"n": n}, Element({"": residual})))
    for r in range(nmax + 1):
        for s in range(r + 1, nmax + 1):
            residual = qsum_even(r + 1, s) - (prod(s) - prod(r))
            reports.append(VerificationReport.from_residual(
                "qint_window_sum", {"r": r, "s": s}, Element({"": residual})))
    return reports


def corrupted_elevation(w: Word) -> LaurentPoly:
    """Negative control: ``[2 + e_i]`` in place of ``[1 + e_i]``."""
    result = laurent.ONE
    for e in elevation(w):
        result = result * qint(2 + e)
    return result
