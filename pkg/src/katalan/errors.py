"""Exception types shared across the package."""


class KatalanError(Exception):
    """Base class for all package errors."""


class InvalidWeight(KatalanError):
    """A weight vector violates a precondition (length, bound, or step)."""


class InvalidIdeal(KatalanError):
    """Row counts do not describe an upper order ideal of the staircase."""


class InvalidMultiset(KatalanError):
    """A column multiset is malformed or does not match the ambient length."""


class MismatchedRank(KatalanError):
    """Index components disagree on the ambient length."""


class InvalidWindow(KatalanError):
    """Window entries are not a permutation of Z in window notation."""


class NotKBounded(KatalanError):
    """A partition has a part exceeding the bound k."""


class NotACore(KatalanError):
    """A partition contains a cell of hook length divisible by k+1."""


class NotGrassmannian(KatalanError):
    """An affine permutation has a nonzero right descent."""


class NotSamePath(KatalanError):
    """Two rows do not lie on a common bounce path."""


class FullSupport(KatalanError):
    """A bounce-path query was made on a row with no defined step."""


class LimitExceeded(KatalanError):
    """The expansion support grew past the configured cap."""


class NotInSpan(KatalanError):
    """The target function is not an integer combination of the family."""


class NonUnique(KatalanError):
    """The family is linearly dependent; coefficients are not determined."""


class NonIntegral(KatalanError):
    """The unique rational solution has a non-integer coefficient."""
