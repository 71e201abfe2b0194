"""Words in x, y and elements of the free algebra in the standard basis.

Words are plain ``str`` over ``{"x", "y"}``; the trivial word is ``""`` and
is rendered ``"1"``.  An :class:`Element` is a finitely supported map
``word -> LaurentPoly`` with no zero coefficients stored.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from . import laurent
from .errors import InvalidWord
from .laurent import LaurentPoly, Scalar, as_laurent, exact_div

Word = str

LETTERS = ("x", "y")
BAR = {"x": 1, "y": -1}
_SWAP = str.maketrans("xy", "yx")


def parse_word(text: str) -> Word:
    """Read a word from user input; ``"1"`` and ``""`` both mean the trivial word."""
    text = text.strip()
    if text in ("", "1"):
        return ""
    bad = set(text) - set(LETTERS)
    if bad:
        raise InvalidWord(f"word {text!r} contains letters outside {{x, y}}: {sorted(bad)}")
    return text


def word_text(w: Word) -> str:
    return w or "1"


def weight(w: Word) -> int:
    """Sum of letter bars: +1 per x, -1 per y."""
    nx = w.count("x")
    return 2 * nx - len(w)


def bidegree(w: Word) -> tuple[int, int]:
    nx = w.count("x")
    return nx, len(w) - nx


def zeta_word(w: Word) -> Word:
    """Reverse and swap x <-> y."""
    return w[::-1].translate(_SWAP)


def word_key(w: Word) -> tuple[int, Word]:
    """Canonical ordering: by length, then lexicographic with x < y."""
    return len(w), w


class Element:
    """An element of the free algebra V, stored as ``word -> LaurentPoly``.

    Instances are immutable and hashable.  Arithmetic with ``+``, ``-`` and
    scalar ``*`` is the vector-space structure; products live in
    :func:`concat` and :func:`qshuffle.shuffle.shuffle`.
    """

    __slots__ = ("_terms", "_hash", "_cache")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_laurent(c)
                if c:
                    clean[parse_word(w)] = c
        self._terms = clean
        self._hash = None
        self._cache = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Element":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        obj._cache = None
        return obj

    @classmethod
    def word(cls, w: Word, coeff: Scalar = 1) -> "Element":
        return cls({w: coeff})

    @classmethod
    def from_words(cls, words: Iterable[tuple[Word, Scalar]]) -> "Element":
        acc: dict[Word, LaurentPoly] = {}
        for w, c in words:
            _accumulate(acc, w, as_laurent(c))
        return cls._wrap(acc)

    # -- access -------------------------------------------------------------

    @property
    def terms(self) -> dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, w: Word) -> LaurentPoly:
        """The bilinear-form value ``(w, self)``."""
        return self._terms.get(w, laurent.ZERO)

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def sorted_items(self) -> list[tuple[Word, LaurentPoly]]:
        return [(w, self._terms[w]) for w in self.support()]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if isinstance(other, (int, LaurentPoly)):
            return self == Element({"": other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(acc, w, c)
        return Element._wrap(acc)

    def __neg__(self) -> "Element":
        return Element._wrap({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "Element":
        if isinstance(scalar, Element):
            return NotImplemented
        scalar = as_laurent(scalar)
        if not scalar:
            return ZERO
        if scalar == 1:
            return self
        return Element._wrap({w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> "Element":
        """Multiply every coefficient by q**k."""
        if not k:
            return self
        return Element._wrap({w: c.shift(k) for w, c in self._terms.items()})

    def divide(self, d: Scalar) -> "Element":
        """Exact coefficientwise division; raises NonExactDivision otherwise."""
        return Element._wrap({w: exact_div(c, d) for w, c in self._terms.items()})

    def map_coeffs(self, f) -> "Element":
        return Element({w: f(c) for w, c in self._terms.items()})

    def restrict(self, keep) -> "Element":
        """Sub-element on the words accepted by the predicate ``keep``."""
        return Element._wrap({w: c for w, c in self._terms.items() if keep(w)})

    # -- grading helpers used by the shuffle recursion ---------------------

    def constant(self) -> LaurentPoly:
        return self._terms.get("", laurent.ZERO)

    def weight_components(self) -> dict[int, "Element"]:
        """Split into weight-homogeneous pieces (cached)."""
        cache = self._get_cache()
        if "weights" not in cache:
            parts: dict[int, dict] = {}
            for w, c in self._terms.items():
                parts.setdefault(weight(w), {})[w] = c
            cache["weights"] = {k: Element._wrap(v) for k, v in parts.items()}
        return cache["weights"]

    def quotients(self) -> tuple[LaurentPoly, list[tuple[str, "Element"]]]:
        """Constant term and the left quotients by each first letter (cached).

        ``self = c + x * Qx + y * Qy`` in the concatenation product.
        """
        cache = self._get_cache()
        if "quot" not in cache:
            parts: dict[str, dict] = {}
            for w, c in self._terms.items():
                if w:
                    parts.setdefault(w[0], {})[w[1:]] = c
            cache["quot"] = (
                self.constant(),
                [(a, Element._wrap(parts[a])) for a in LETTERS if a in parts],
            )
        return cache["quot"]

    def _get_cache(self) -> dict:
        if self._cache is None:
            self._cache = {}
        return self._cache

    def bidegrees(self) -> set[tuple[int, int]]:
        return {bidegree(w) for w in self._terms}

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Element({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


ZERO = Element()
ONE = Element({"": 1})
X = Element({"x": 1})
Y = Element({"y": 1})


def _accumulate(acc: dict, w: Word, c: LaurentPoly) -> None:
    old = acc.get(w)
    if old is None:
        if c:
            acc[w] = c
        return
    s = old + c
    if s:
        acc[w] = s
    else:
        del acc[w]


def coeff(v: Element, w: Word) -> LaurentPoly:
    return v.coeff(w)


def concat(u: Element, v: Element) -> Element:
    """Free-algebra (concatenation) product, bilinear in both arguments."""
    acc: dict[Word, LaurentPoly] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            _accumulate(acc, a + b, ca * cb)
    return Element._wrap(acc)


def zeta(v: Element) -> Element:
    """The antiautomorphism that reverses words and swaps x, y."""
    return Element._wrap({zeta_word(w): c for w, c in v.items()})


def from_coefficients(words: Iterable[Word], coeff_fn) -> Element:
    """Rebuild ``sum(w * coeff_fn(w))``; inverse of reading off coefficients."""
    return Element({w: coeff_fn(w) for w in words})


def element_bidegree(v: Element) -> tuple[int, int] | None:
    """Common bidegree of all supported words, or None if inhomogeneous/zero."""
    degs = v.bidegrees()
    return next(iter(degs)) if len(degs) == 1 else None


# -- serialization ---------------------------------------------------------------

def to_json(v: Element) -> dict:
    return {
        "terms": [
            {"word": word_text(w), "coeff": laurent.to_json(c)}
            for w, c in v.sorted_items()
        ]
    }


def from_json(obj: Mapping) -> Element:
    return Element.from_words(
        (parse_word(t["word"]), laurent.from_json(t["coeff"])) for t in obj["terms"]
    )


def to_text(v: Element) -> str:
    if not v:
        return "0"
    parts = []
    for w, c in v.sorted_items():
        wt = word_text(w)
        if c == 1:
            parts.append(wt)
        elif c == -1:
            parts.append(f"-{wt}")
        else:
            parts.append(f"({c})*{wt}")
    return " + ".join(parts)


def to_latex(v: Element) -> str:
    if not v:
        return "0"
    parts = []
    for w, c in v.sorted_items():
        coeff_tex = laurent.to_latex(c)
        wt = word_text(w)
        if coeff_tex == "1":
            parts.append(wt)
        elif coeff_tex == "-1":
            parts.append(f"-{wt}")
        else:
            parts.append(f"{coeff_tex}\\, {wt}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
