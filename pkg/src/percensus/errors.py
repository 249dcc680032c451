"""Exceptions shared across the workbench."""


class PercensusError(Exception):
    """Base class for workbench errors."""


class DegenerateInputError(PercensusError, ValueError):
    """Zero polynomial or otherwise degenerate algebraic input."""


class ModulusMismatchError(PercensusError, ValueError):
    """Mixed-modulus arithmetic on mod-p polynomials."""


class NotSquarefreeError(PercensusError, ValueError):
    """Squarefree input required; callers treat the offending point as ramified."""


class ResourceCapError(PercensusError, RuntimeError):
    """A configured size/iteration cap was exceeded.  The message names the cap."""


class MapSyntaxError(PercensusError, ValueError):
    """Map expression failed to parse; carries the 0-based offset of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotADynamicalSystemError(PercensusError, ValueError):
    """Parsed expression has degree < 2 and is not a dynamical system here."""


class DegenerateMapError(PercensusError, ValueError):
    """Zero denominator / zero map encountered while building a rational map."""


class SingularCurveError(PercensusError, ValueError):
    """Elliptic-curve parameters with vanishing discriminant."""


class UnsupportedPointError(PercensusError, ValueError):
    """Exact orbit arithmetic was asked for a non-rational point."""
