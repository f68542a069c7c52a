"""Exception hierarchy shared across the package."""


class Su3Error(Exception):
    """Base class for all errors raised by this package."""


class ParseError(Su3Error):
    """Malformed textual input (scalars, forms, algebra files, polynomials)."""


class DegreeError(Su3Error):
    """Wedge or contraction would leave the valid degree range 0..6."""


class NotStable(Su3Error):
    """A form required to be stable is degenerate."""


class WrongOrientation(Su3Error):
    """A stable 3-form has lambda > 0, so no almost complex structure exists."""


class Degenerate2Form(Su3Error):
    """A 2-form required to be non-degenerate has vanishing top power."""


class NotSymmetric(Su3Error):
    """A matrix required to be symmetric is not."""


class SingularMetric(Su3Error):
    """A metric matrix is singular and cannot be inverted."""


class UnknownName(Su3Error):
    """Lookup of an unknown catalog entry or variable name."""


class ParamOutOfRange(Su3Error):
    """A catalog parameter lies outside its documented range."""


class InexactScalars(Su3Error):
    """An operation that promises exactness received float scalars."""


class NotExactSqrt(Su3Error):
    """The square root of this scalar is not representable exactly."""


class NotRationalizable(Su3Error):
    """No diagonal basis rescaling makes all structure constants rational."""


class InconsistentTorsion(Su3Error):
    """Torsion class decomposition failed its internal consistency checks."""


class ResourceBudgetExceeded(Su3Error):
    """A computation ran past its time or memory budget."""


class ModeUnsupported(Su3Error):
    """The requested ansatz mode is not available for this algebra."""

