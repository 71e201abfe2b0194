"""The q-shuffle product on V.

Three independent routes compute the same product:

* :func:`shuffle` -- the head recursion
  ``u * v = u1 (u' * v) + v1 (u * v') q^{<u, v1>}`` lifted to elements and
  memoized on operand pairs.  This is the production path.
* :func:`shuffle_tail` -- the tail recursion
  ``u * v = (u * v') vs + (u' * v) ur q^{<ur, v>}`` on word pairs, extended
  bilinearly.
* :func:`shuffle_interleave` -- direct enumeration of every interleaving of
  the letters, with the q-exponent summed from the pairing table.

For letters the pairing is ``<a, b> = 2 * bar(a) * bar(b)``, so the sum of
pairings of a letter ``b`` against a word ``u`` is ``2 * bar(b) * weight(u)``.
"""
from __future__ import annotations

import threading
import time
from itertools import combinations

from . import laurent
from .freealg import BAR, ONE, Element, Word, _accumulate, weight
from .laurent import LaurentPoly
from .report import VerificationReport

DEFAULT_MEMO_CAP = 200_000


def pairing(a: str, b: str) -> int:
    """The table <x,x> = <y,y> = 2, <x,y> = <y,x> = -2."""
    return 2 * BAR[a] * BAR[b]


class ShuffleMemo(threading.local):
    """Per-thread memo table for products, reset wholesale when it overflows."""

    def __init__(self, cap: int = DEFAULT_MEMO_CAP):
        self.cap = cap
        self.table: dict = {}
        self.resets = 0

    def get(self, key):
        return self.table.get(key)

    def put(self, key, value) -> None:
        if len(self.table) >= self.cap:
            self.table.clear()
            self.resets += 1
        self.table[key] = value

    def clear(self) -> None:
        self.table.clear()


_memo = ShuffleMemo()
_tail_memo = ShuffleMemo()


def set_memo_cap(cap: int) -> None:
    if cap < 1:
        raise ValueError("memo cap must be positive")
    _memo.cap = cap
    _tail_memo.cap = cap


def clear_memo() -> None:
    _memo.clear()
    _tail_memo.clear()


def memo_size() -> int:
    return len(_memo.table)


# -- head recursion (primary) ----------------------------------------------------

def shuffle(u: Element, v: Element) -> Element:
    """The q-shuffle product ``u * v`` of two elements."""
    if not u or not v:
        return Element()
    acc: dict[Word, LaurentPoly] = {}
    for U in u.weight_components().values():
        for V in v.weight_components().values():
            for w, c in _star(U, V).items():
                _accumulate(acc, w, c)
    return Element._wrap(acc)


star = shuffle


def shuffle_many(*factors: Element) -> Element:
    """Left-to-right product ``f1 * f2 * ... * fn``; the empty product is 1."""
    result = ONE
    for f in factors:
        result = shuffle(result, f)
    return result


def shuffle_words(u: Word, v: Word) -> Element:
    return shuffle(Element._wrap({u: laurent.ONE}), Element._wrap({v: laurent.ONE}))


def _star(U: Element, V: Element) -> dict[Word, LaurentPoly]:
    # U and V are nonzero and weight-homogeneous; returns a dict owned by the memo
    key = (U, V)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    cu, uq = U.quotients()
    cv, vq = V.quotients()
    out: dict[Word, LaurentPoly] = {}
    # unit law: 1 * v = v * 1 = v
    if cu:
        for w, c in V.items():
            out[w] = c * cu
    if cv:
        for w, c in U.items():
            _accumulate(out, w, c * cv)
        if cu:
            _accumulate(out, "", -(cu * cv))
    if uq and vq:
        u_plus = U if not cu else Element._wrap({w: c for w, c in U.items() if w})
        v_plus = V if not cv else Element._wrap({w: c for w, c in V.items() if w})
        wu = weight(next(iter(u_plus.items()))[0])
        for a, Qa in uq:
            for w, c in _star(Qa, v_plus).items():
                _accumulate(out, a + w, c)
        for b, Qb in vq:
            k = 2 * BAR[b] * wu
            for w, c in _star(u_plus, Qb).items():
                _accumulate(out, b + w, c.shift(k))
    _memo.put(key, out)
    return out


# -- letter insertion ------------------------------------------------------------

def shuffle_letter(u: str, v: Word, side: str = "left") -> Element:
    """``u * v`` (side='left') or ``v * u`` (side='right') for a letter ``u``.

    Inserts ``u`` at every position of ``v``; the exponent sums the pairings
    of ``u`` with the letters of ``v`` it passes (those before it on the
    left side, those after it on the right side).
    """
    if u not in BAR:
        raise ValueError(f"not a letter: {u!r}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    acc: dict[Word, LaurentPoly] = {}
    n = len(v)
    for i in range(n + 1):
        passed = v[:i] if side == "left" else v[i:]
        e = sum(pairing(b, u) for b in passed)
        _accumulate(acc, v[:i] + u + v[i:], laurent.q(e))
    return Element._wrap(acc)


# -- tail recursion --------------------------------------------------------------

def _tail_words(u: Word, v: Word) -> dict[Word, LaurentPoly]:
    if not u:
        return {v: laurent.ONE}
    if not v:
        return {u: laurent.ONE}
    key = (u, v)
    hit = _tail_memo.get(key)
    if hit is not None:
        return hit
    out: dict[Word, LaurentPoly] = {}
    last_v, last_u = v[-1], u[-1]
    for w, c in _tail_words(u, v[:-1]).items():
        _accumulate(out, w + last_v, c)
    k = 2 * BAR[last_u] * weight(v)
    for w, c in _tail_words(u[:-1], v).items():
        _accumulate(out, w + last_u, c.shift(k))
    _tail_memo.put(key, out)
    return out


def shuffle_tail(u: Element, v: Element) -> Element:
    """q-shuffle product through the tail recursion, bilinear over word pairs."""
    acc: dict[Word, LaurentPoly] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            scale = ca * cb
            for w, c in _tail_words(a, b).items():
                _accumulate(acc, w, c * scale)
    return Element._wrap(acc)


# -- interleaving oracle ---------------------------------------------------------

def shuffle_interleave_words(u: Word, v: Word) -> Element:
    """Enumerate all C(r+s, r) placements of ``u``'s letters among ``v``'s.

    A letter ``a`` of ``u`` placed after a letter ``b`` of ``v`` contributes
    ``<a, b>`` to the exponent.
    """
    r, s = len(u), len(v)
    counts: dict[tuple[Word, int], int] = {}
    for positions in combinations(range(r + s), r):
        chosen = set(positions)
        letters = []
        exponent = 0
        seen_v = 0  # weight of v-letters placed so far
        iu = iv = 0
        for p in range(r + s):
            if p in chosen:
                a = u[iu]
                iu += 1
                exponent += 2 * BAR[a] * seen_v
                letters.append(a)
            else:
                b = v[iv]
                iv += 1
                seen_v += BAR[b]
                letters.append(b)
        key = ("".join(letters), exponent)
        counts[key] = counts.get(key, 0) + 1
    acc: dict[Word, LaurentPoly] = {}
    for (w, e), n in counts.items():
        _accumulate(acc, w, laurent.LaurentPoly.monomial(e, n))
    return Element._wrap(acc)


def shuffle_interleave(u: Element, v: Element) -> Element:
    acc: dict[Word, LaurentPoly] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            scale = ca * cb
            for w, c in shuffle_interleave_words(a, b).items():
                _accumulate(acc, w, c * scale)
    return Element._wrap(acc)


# -- q-Serre relations -----------------------------------------------------------

def serre_residual(a: str, b: str) -> Element:
    """``a*a*a*b - [3] a*a*b*a + [3] a*b*a*a - b*a*a*a`` in the shuffle algebra."""
    A, B = Element.word(a), Element.word(b)
    three = laurent.qint(3)
    return (
        shuffle_many(A, A, A, B)
        - shuffle_many(A, A, B, A) * three
        + shuffle_many(A, B, A, A) * three
        - shuffle_many(B, A, A, A)
    )


def qserre_check() -> list[VerificationReport]:
    """Both q-Serre relations; each report passes iff its residual is zero."""
    reports = []
    for a, b in (("x", "y"), ("y", "x")):
        t0 = time.perf_counter()
        residual = serre_residual(a, b)
        reports.append(
            VerificationReport.from_residual(
                "q_serre", {"letters": a + b}, residual, time.perf_counter() - t0
            )
        )
    return reports
