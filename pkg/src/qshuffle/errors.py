"""Exception types shared across the package."""


class QShuffleError(Exception):
    """Base class for all errors raised by qshuffle."""


class NonExactDivision(QShuffleError, ArithmeticError):
    """A Laurent polynomial division left a nonzero remainder."""


class ZeroEvaluationPoint(QShuffleError, ValueError):
    """Evaluation at q = 0 was requested."""


class DegenerateEvaluation(QShuffleError, ValueError):
    """The evaluation point is one where q-integers collapse (q = 1 or q = -1)."""


class NotCatalan(QShuffleError, ValueError):
    pass


class NotBalanced(QShuffleError, ValueError):
    pass


class InvalidProfile(QShuffleError, ValueError):
    pass


class InvalidWord(QShuffleError, ValueError):
    pass
