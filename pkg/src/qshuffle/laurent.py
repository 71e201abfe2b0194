"""Exact Laurent polynomials in q with integer coefficients.

A :class:`LaurentPoly` is an immutable map ``exponent -> coefficient`` with no
zero coefficients stored, so structural equality is ring equality.  Python
ints are unbounded, which keeps q-factorial products exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

from .errors import NonExactDivision, ZeroEvaluationPoint

Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already canonical and owned by the result
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        t = dict(self._terms)
        for e, c in other._terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly._wrap(t)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (e0, c0), = a.items()
            return LaurentPoly._wrap({e0 + e: c0 * c for e, c in b.items()})
        if len(b) == 1:
            (e0, c0), = b.items()
            return LaurentPoly._wrap({e0 + e: c0 * c for e, c in a.items()})
        t: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly.monomial(e * k, c ** (-k))
            raise NonExactDivision(f"{self} is not a unit in Z[q, q^-1]")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        if not k or not self._terms:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return to_text(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
QINV = LaurentPoly.monomial(-1)
# q - q^-1 and q + q^-1 turn up in every denominator
GAP = LaurentPoly({1: 1, -1: -1})
QPLUS = LaurentPoly({1: 1, -1: 1})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


def as_laurent(x: Scalar) -> LaurentPoly:
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return p


def q(k: int = 1) -> LaurentPoly:
    """The monomial q**k."""
    return LaurentPoly.monomial(k)


# -- q-integers -------------------------------------------------------------

@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """``[n]_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)``.

    Negative ``n`` is allowed and gives ``[-n]_q = -[n]_q``; the expansion of
    ``x * (vy)`` for non-Catalan balanced ``v`` needs it.
    """
    if n < 0:
        return -qint(-n)
    return LaurentPoly._wrap({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """``[n]!_q``, with ``[0]!_q = 1``."""
    if n < 0:
        raise ValueError(f"q-factorial of negative integer {n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * qint(k)
    return result


def qsum_even(lo: int, hi: int) -> LaurentPoly:
    """``sum([2t]_q for t in lo..hi)``; empty range gives 0."""
    total = ZERO
    for t in range(lo, hi + 1):
        total = total + qint(2 * t)
    return total


# -- division and evaluation -------------------------------------------------

def exact_div(p: Scalar, d: Scalar) -> LaurentPoly:
    """Return ``c`` with ``c * d == p`` or raise :class:`NonExactDivision`.

    Both operands are shifted to ordinary polynomials with nonzero constant
    term, and integer long division runs from the top degree down.
    """
    p, d = as_laurent(p), as_laurent(d)
    if not d._terms:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not p._terms:
        return ZERO
    pmin, dmin = min(p._terms), min(d._terms)
    num = _dense(p, pmin)
    den = _dense(d, dmin)
    if len(num) < len(den):
        raise NonExactDivision(f"({p}) / ({d}) is not a Laurent polynomial")
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = num[k + len(den) - 1]
        if top % lead:
            raise NonExactDivision(f"({p}) / ({d}) is not a Laurent polynomial")
        c = top // lead
        quot[k] = c
        if c:
            for j, dc in enumerate(den):
                num[k + j] -= c * dc
    if any(num):
        raise NonExactDivision(f"({p}) / ({d}) is not a Laurent polynomial")
    shift = pmin - dmin
    return LaurentPoly._wrap({k + shift: c for k, c in enumerate(quot) if c})


def _dense(p: LaurentPoly, low: int) -> list[int]:
    coeffs = [0] * (max(p._terms) - low + 1)
    for e, c in p._terms.items():
        coeffs[e - low] = c
    return coeffs


def eval_rational(p: Scalar, q0) -> Fraction:
    """Exact value of ``p`` at ``q = q0`` (``q0`` an int, Fraction or 'a/b' string)."""
    p = as_laurent(p)
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroEvaluationPoint("cannot evaluate a Laurent polynomial at q = 0")
    return sum((c * q0 ** e for e, c in p._terms.items()), Fraction(0))


# -- serialization ------------------------------------------------------------

def to_json(p: LaurentPoly) -> dict[str, str]:
    return {str(e): str(c) for e, c in sorted(p._terms.items())}


def from_json(obj: Mapping[str, str | int]) -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in obj.items()})


def _sorted_desc(p: LaurentPoly) -> Iterable[tuple[int, int]]:
    return sorted(p._terms.items(), reverse=True)


def _format(p: LaurentPoly, power) -> str:
    if not p._terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(_sorted_desc(p)):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = power(e) if mag == 1 else f"{mag}*{power(e)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def to_text(p: LaurentPoly) -> str:
    """Plain text, highest power first, e.g. ``q^2 + 2 + q^-2``."""
    return _format(p, lambda e: "q" if e == 1 else f"q^{e}")


def to_latex_plain(p: LaurentPoly) -> str:
    s = _format(p, lambda e: "q" if e == 1 else f"q^{{{e}}}")
    return s.replace("*", "")


def factor_brackets(p: LaurentPoly):
    """Split ``p`` as ``c * q^s * (q - q^-1)^g * prod([k]_q^m_k) * rest``.

    Greedy: q-integers are divided out from the largest candidate down.
    Returns ``(c, s, g, {k: m_k}, rest)`` where ``rest`` is 1 when the
    factorisation is complete.
    """
    if not p._terms:
        return 0, 0, 0, {}, ONE
    content = 0
    for c in p._terms.values():
        content = gcd(content, c)
    if p._terms[max(p._terms)] < 0:
        content = -content
    rest = LaurentPoly._wrap({e: c // content for e, c in p._terms.items()})
    gap = 0
    while True:
        try:
            rest = exact_div(rest, GAP)
        except NonExactDivision:
            break
        gap += 1
    brackets: dict[int, int] = {}
    k = rest.max_degree() - rest.min_degree() + 1
    while k >= 2:
        try:
            rest = exact_div(rest, qint(k))
        except NonExactDivision:
            k -= 1
            continue
        brackets[k] = brackets.get(k, 0) + 1
    shift = 0
    if len(rest._terms) == 1:
        (shift, c), = rest._terms.items()
        content *= c
        rest = ONE
    return content, shift, gap, brackets, rest


def to_latex(p: LaurentPoly) -> str:
    """LaTeX in bracket notation, e.g. ``\\lbrack 3\\rbrack_q \\lbrack 2\\rbrack_q^{2}``."""
    if not p._terms:
        return "0"
    c, s, g, brackets, rest = factor_brackets(p)
    parts = []
    if s:
        parts.append(f"q^{{{s}}}")
    if g:
        parts.append("(q-q^{-1})" + (f"^{{{g}}}" if g > 1 else ""))
    for k in sorted(brackets, reverse=True):
        m = brackets[k]
        parts.append(f"\\lbrack {k}\\rbrack_q" + (f"^{{{m}}}" if m > 1 else ""))
    if rest != ONE:
        parts.append(f"({to_latex_plain(rest)})")
    body = " ".join(parts)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c} {body}"
