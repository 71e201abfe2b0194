from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qshuffle.freealg import Element
from qshuffle.laurent import LaurentPoly, qint

# points used to pin a Laurent polynomial by evaluation: a polynomial whose
# exponent span is below len(POINTS) is determined by its values here
POINTS = [Fraction(k, 7) for k in range(2, 40) if k != 7]


def br(*ks: int) -> LaurentPoly:
    """Product of q-integers, e.g. br(3, 2, 2) = [3][2]^2."""
    out = LaurentPoly.const(1)
    for k in ks:
        out = out * qint(k)
    return out


def E(terms: dict) -> Element:
    return Element(terms)


def qq(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


laurent_polys = st.dictionaries(
    st.integers(-8, 8), st.integers(-50, 50), max_size=6
).map(LaurentPoly)

nonzero_laurent = laurent_polys.filter(bool)

words = st.text(alphabet="xy", max_size=5)

elements = st.dictionaries(words, laurent_polys, max_size=4).map(Element)


@pytest.fixture
def x() -> Element:
    return Element.word("x")


@pytest.fixture
def y() -> Element:
    return Element.word("y")


# displayed expansions of small q-shuffle products, transcribed literally
GOLDEN = {
    ("x", "y"): {"xy": 1, "yx": qq(-2)},
    ("y", "x"): {"yx": 1, "xy": qq(-2)},
    ("x", "x"): {"xx": 1 + qq(2)},
    ("y", "y"): {"yy": 1 + qq(2)},
    ("x", "yyy"): {"xyyy": 1, "yxyy": qq(-2), "yyxy": qq(-4), "yyyx": qq(-6)},
    ("xyx", "y"): {"xyxy": 1, "xyyx": 1 + qq(-2), "yxyx": qq(-2)},
    ("xx", "yyy"): {
        "xxyyy": 1, "xyxyy": qq(-2), "xyyxy": qq(-4), "xyyyx": qq(-6),
        "yxxyy": qq(-4), "yxyxy": qq(-6), "yxyyx": qq(-8), "yyxxy": qq(-8),
        "yyxyx": qq(-10), "yyyxx": qq(-12),
    },
    ("xy", "xxyy"): {"xyxxyy": 1, "xxyyxy": 1, "xxyxyy": br(2, 2), "xxxyyy": br(3, 3)},
}

# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
