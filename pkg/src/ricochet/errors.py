"""Exception types shared across the library."""


class RicochetError(Exception):
    """Base class for all library-specific errors."""


class MalformedScalarError(RicochetError, ValueError):
    """A scalar cannot be built: zero denominator, bad syntax, bad radicand."""


class DomainMismatchError(RicochetError, TypeError):
    """Two scalars from incompatible fields were combined."""


class EvaluationPoleError(RicochetError, ZeroDivisionError):
    """A rational function was evaluated at a pole of its denominator."""


class FormDegreeError(RicochetError, ValueError):
    """Degree mismatch, or a transvectant order out of range."""


class ZeroFormError(RicochetError, ValueError):
    """An operation that needs a nonzero form received the zero form."""


class MalformedPointError(RicochetError, ValueError):
    """A projective point with no nonzero coordinate."""


class DegenerateGeometryError(RicochetError, ValueError):
    """A construction degenerated: coincident points, equal lines, etc."""


class TheoremViolationError(RicochetError, RuntimeError):
    """An exact identity guaranteed by a theorem failed.

    This always signals an implementation bug upstream, never bad input.
    """


class DerivationError(RicochetError, RuntimeError):
    """An invariant kernel did not have the expected dimension."""


class RenderingChartError(RicochetError, ValueError):
    """A point cannot be drawn in the unit-circle chart."""


class InputFormatError(RicochetError, ValueError):
    """A malformed CLI/JSON document; carries the offending field path."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
