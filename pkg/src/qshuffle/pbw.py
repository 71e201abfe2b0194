"""Images of Damiani's PBW elements in the q-shuffle algebra.

Nothing here represents U_q^+ abstractly.  Every element is computed as its
image in V under the embedding A -> x, B -> y, so the recursive definitions
run with the q-shuffle product in place of the product of U_q^+.

Brackets are ``[a, b] = a*b - b*a``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Callable

from . import laurent
from .catalan import DEFAULT_FAMILY, CatalanFamily, enumerate_catalan
from .errors import DegenerateEvaluation, NonExactDivision, ZeroEvaluationPoint
from .freealg import ONE, X, Y, Element, element_bidegree, zeta
from .laurent import GAP, QPLUS, eval_rational
from .linalg import exact_rank
from .report import INCONCLUSIVE, PASS, VerificationReport
from .shuffle import shuffle, shuffle_many

KINDS = ("a0", "delta", "a1")
_KIND_RANK = {"a0": 0, "delta": 1, "a1": 2}


@total_ordering
@dataclass(frozen=True)
class PBWLabel:
    """One of E_{n delta + alpha0} ('a0'), E_{n delta} ('delta'), E_{n delta + alpha1} ('a1')."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown PBW kind {self.kind!r}; expected one of {KINDS}")
        lowest = 1 if self.kind == "delta" else 0
        if self.n < lowest:
            raise ValueError(f"index n={self.n} out of range for kind {self.kind}")

    def sort_key(self) -> tuple[int, int]:
        # a0 ascending in n, then delta ascending, then a1 descending
        return _KIND_RANK[self.kind], (-self.n if self.kind == "a1" else self.n)

    def __lt__(self, other: "PBWLabel") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def degree(self) -> int:
        """Letter count of the image."""
        return 2 * self.n if self.kind == "delta" else 2 * self.n + 1

    @property
    def bidegree(self) -> tuple[int, int]:
        n = self.n
        return {"a0": (n + 1, n), "a1": (n, n + 1), "delta": (n, n)}[self.kind]

    def __str__(self) -> str:
        if self.kind == "delta":
            return f"E[{self.n}d]"
        return f"E[{self.n}d+{self.kind}]"


@dataclass(frozen=True)
class PBWImage:
    label: PBWLabel
    value: Element


# -- the recursive definition ---------------------------------------------------

@lru_cache(maxsize=None)
def _recursive(kind: str, n: int) -> Element:
    if kind == "a0" and n == 0:
        return X
    if kind == "a1" and n == 0:
        return Y
    if kind == "delta":
        # n = 1 reproduces the base case q^-2 y*x - x*y
        prev = _recursive("a1", n - 1)
        return shuffle(prev, X).shift(-2) - shuffle(X, prev)
    e_delta = _recursive("delta", 1)
    prev = _recursive(kind, n - 1)
    if kind == "a0":
        bracket = shuffle(e_delta, prev) - shuffle(prev, e_delta)
    else:
        bracket = shuffle(prev, e_delta) - shuffle(e_delta, prev)
    return bracket.divide(QPLUS)


def pbw_image_recursive(label: PBWLabel) -> PBWImage:
    return PBWImage(label, _recursive(label.kind, label.n))


def delta_alternate(n: int) -> Element:
    """E_{n delta} via ``q^-2 B E_{(n-1)delta+alpha0} - E_{(n-1)delta+alpha0} B``."""
    prev = _recursive("a0", n - 1)
    return shuffle(Y, prev).shift(-2) - shuffle(prev, Y)


# -- the closed forms -------------------------------------------------------------

def closed_prefactor(label: PBWLabel, q_shift: int = 0, gap_shift: int = 0) -> laurent.LaurentPoly:
    """``q^(-2n) (q - q^-1)^(2n)``, or ``-q^(-2n) (q - q^-1)^(2n-1)`` for delta.

    ``q_shift`` and ``gap_shift`` perturb the two exponents; they exist for
    negative controls only.
    """
    n = label.n
    if label.kind == "delta":
        return -(GAP ** (2 * n - 1 + gap_shift)).shift(-2 * n + q_shift)
    return (GAP ** (2 * n + gap_shift)).shift(-2 * n + q_shift)


def pbw_image_closed(label: PBWLabel, family: CatalanFamily = DEFAULT_FAMILY,
                     q_shift: int = 0, gap_shift: int = 0) -> PBWImage:
    if label.kind == "a0":
        base = family.xc(label.n)
    elif label.kind == "a1":
        base = family.cy(label.n)
    else:
        base = family.c(label.n)
    return PBWImage(label, base * closed_prefactor(label, q_shift, gap_shift))


def all_labels(nmax: int) -> list[PBWLabel]:
    labels = [PBWLabel(k, n) for k in ("a0", "a1") for n in range(nmax + 1)]
    labels += [PBWLabel("delta", n) for n in range(1, nmax + 1)]
    return sorted(labels)


# -- theorem and recurrence checks ------------------------------------------------

ClosedForm = Callable[[PBWLabel], PBWImage]


def theorem_checks(nmax: int, closed: ClosedForm | None = None) -> list[VerificationReport]:
    """Recursive image minus closed form, for every label with index <= nmax."""
    closed = closed or pbw_image_closed
    reports = []
    for label in all_labels(nmax):
        t0 = time.perf_counter()
        residual = pbw_image_recursive(label).value - closed(label).value
        reports.append(VerificationReport.from_residual(
            "main_theorem", {"kind": label.kind, "n": label.n}, residual,
            time.perf_counter() - t0))
    return reports


def _fraction_check(name, params, lhs: Element, numerator: Element, denominator):
    """Report for ``lhs == numerator / denominator`` with exact division."""
    t0 = time.perf_counter()
    try:
        quotient = numerator.divide(denominator)
    except NonExactDivision as exc:
        return VerificationReport(name, params, "fail", numerator,
                                  time.perf_counter() - t0, f"non-exact division: {exc}")
    return VerificationReport.from_residual(name, params, lhs - quotient,
                                            time.perf_counter() - t0)


def recurrence_checks(nmax: int, family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    """The four Catalan-element recurrences behind the main theorem, 1 <= n <= nmax.

    Each right-hand side is a numerator divided exactly by ``q - q^-1``.
    """
    xy = Element.word("xy")
    q, qi = laurent.Q, laurent.QINV
    reports = []
    for n in range(1, nmax + 1):
        xc, cy = family.xc(n - 1), family.cy(n - 1)
        params = {"n": n}
        reports.append(_fraction_check(
            "recurrence_xC", params, family.xc(n),
            shuffle(xc, xy) - shuffle(xy, xc), GAP))
        reports.append(_fraction_check(
            "recurrence_Cy", params, family.cy(n),
            shuffle(xy, cy) - shuffle(cy, xy), GAP))
        reports.append(_fraction_check(
            "recurrence_x_Cy", params, family.c(n) * qi,
            shuffle(X, cy) * q - shuffle(cy, X) * qi, GAP))
        reports.append(_fraction_check(
            "recurrence_xC_y", params, family.c(n) * qi,
            shuffle(xc, Y) * q - shuffle(Y, xc) * qi, GAP))
    return reports


def verify_main_theorem(nmax: int, closed: ClosedForm | None = None,
                        family: CatalanFamily = DEFAULT_FAMILY) -> list[VerificationReport]:
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    return theorem_checks(nmax, closed) + recurrence_checks(nmax, family)


def structure_checks(nmax: int) -> list[VerificationReport]:
    """Homogeneity, zeta symmetry, the alternate delta recursion and delta supports."""
    reports = []
    for label in all_labels(nmax):
        value = pbw_image_recursive(label).value
        ok = element_bidegree(value) == label.bidegree
        reports.append(VerificationReport(
            "pbw_homogeneous", {"kind": label.kind, "n": label.n},
            PASS if ok else "fail", None if ok else value,
            detail="" if ok else f"bidegrees {sorted(value.bidegrees())}"))
    for n in range(0, nmax + 1):
        a0 = _recursive("a0", n)
        a1 = _recursive("a1", n)
        reports.append(VerificationReport.from_residual(
            "zeta_swaps_alpha", {"n": n}, zeta(a0) - a1))
    for n in range(1, nmax + 1):
        d = _recursive("delta", n)
        reports.append(VerificationReport.from_residual(
            "zeta_fixes_delta", {"n": n}, zeta(d) - d))
        reports.append(VerificationReport.from_residual(
            "delta_alternate_recursion", {"n": n}, delta_alternate(n) - d))
        extra = set(d.support()) ^ set(enumerate_catalan(n))
        reports.append(VerificationReport(
            "delta_support_is_catalan", {"n": n}, "fail" if extra else PASS,
            d.restrict(lambda w: w in extra) if extra else None,
            detail=f"symmetric difference {sorted(extra)}" if extra else ""))
    return reports


# -- PBW monomials and independence ---------------------------------------------------

def pbw_monomials(total_degree: int) -> list[tuple[tuple[PBWLabel, ...], Element]]:
    """Weakly increasing label sequences of the given image degree, with images."""
    if total_degree < 0:
        raise ValueError("degree must be nonnegative")
    labels = [lab for lab in all_labels(total_degree) if lab.degree <= total_degree]
    out: list[tuple[PBWLabel, ...]] = []

    def extend(start: int, remaining: int, seq: list[PBWLabel]) -> None:
        if remaining == 0:
            out.append(tuple(seq))
            return
        for i in range(start, len(labels)):
            lab = labels[i]
            if lab.degree <= remaining:
                seq.append(lab)
                extend(i, remaining - lab.degree, seq)
                seq.pop()

    extend(0, total_degree, [])
    return [
        (seq, shuffle_many(*(pbw_image_recursive(lab).value for lab in seq)) if seq else ONE)
        for seq in out
    ]


DENYLIST = (Fraction(0), Fraction(1), Fraction(-1))


def independence_evidence(total_degree: int, q0) -> VerificationReport:
    """Exact rank of the PBW-monomial images evaluated at ``q = q0``.

    Full rank at one point proves linear independence over Q(q); a rank
    deficit only means the point was unlucky and is reported inconclusive.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroEvaluationPoint("q0 = 0 is not a valid evaluation point")
    if q0 in DENYLIST:
        raise DegenerateEvaluation(f"q0 = {q0} makes q-integers degenerate")
    t0 = time.perf_counter()
    monomials = pbw_monomials(total_degree)
    words = sorted({w for _, img in monomials for w in img.support()})
    rows = [[eval_rational(img.coeff(w), q0) for w in words] for _, img in monomials]
    rank = exact_rank(rows)
    status = PASS if rank == len(monomials) else INCONCLUSIVE
    return VerificationReport(
        "pbw_independence", {"degree": total_degree, "q0": str(q0)}, status, None,
        time.perf_counter() - t0,
        f"rank {rank} of {len(monomials)} monomials over {len(words)} words")
