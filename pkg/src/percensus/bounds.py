"""Effective Chebotarev arithmetic for function fields over F_q.

Small exact calculators: the degree-one-prime count interval for a fixed
Frobenius class, the Riemann-Hurwitz genus bound for splitting fields of
iterate pencils, the resulting upper bound on the proportion of periodic
points, and the threshold prime beyond which the error terms drop below a
requested delta.  All arithmetic is exact rationals; the sqrt(q)-weighted
error variant (as in standard effective statements) is provided behind a
flag and compared only where both variants agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInputError


@dataclass(frozen=True)
class BoundInputs:
    q: int                      # residue field size
    genus: int
    ratio: Fraction             # #C / #G_n
    order: int                  # #G_n
    ramified: int               # #R
    n: int = 1
    degree: int = 2
    fpp: Fraction = Fraction(0)

    def __post_init__(self):
        if self.q < 2 or self.genus < 0 or self.order < 1 or self.ramified < 0:
            raise DegenerateInputError("nonnegative bound inputs required")
        if not 0 < self.ratio <= 1:
            raise DegenerateInputError("class ratio must lie in (0, 1]")


def ms_interval(
    inputs: BoundInputs, sqrt_q_variant: bool = False
) -> tuple[Fraction, Fraction] | tuple[float, float]:
    """Closed interval for the count of degree-one primes with a given
    Frobenius class: center (q+1)*ratio, half-width 2*genus*ratio + #R.

    With sqrt_q_variant the half-width uses 2*genus*sqrt(q)*ratio + #R
    instead (floats); the default transcription carries no sqrt(q) factor.
    Clamped below at 0.
    """
    center = (inputs.q + 1) * inputs.ratio
    if sqrt_q_variant:
        half = 2 * inputs.genus * math.sqrt(inputs.q) * float(inputs.ratio) + inputs.ramified
        return (max(float(center) - half, 0.0), float(center) + half)
    half = 2 * inputs.genus * inputs.ratio + inputs.ramified
    lo = center - half
    return (lo if lo > 0 else Fraction(0), center + half)


def genus_bound(order: int, n: int, degree: int) -> int:
    """Riemann-Hurwitz bound |G_n| * n * (2d - 2) on the splitting-field genus
    (valid in characteristic > d, where ramification is tame)."""
    if degree < 2:
        raise DegenerateInputError("need degree >= 2")
    if n < 0 or order < 1:
        raise DegenerateInputError("need n >= 0 and order >= 1")
    return order * n * (2 * degree - 2)


def proportion_bound(
    q: int, fpp: Fraction, order: int, genus: int, ramified: int
) -> Fraction:
    """Upper bound fpp + order*genus/(q+1) + 2*#R/(q+1) on the proportion of
    points in the image of the n-th iterate (hence on periodic points)."""
    return Fraction(fpp) + Fraction(order * genus, q + 1) + Fraction(2 * ramified, q + 1)


def is_vacuous(bound: Fraction) -> bool:
    return bound > 1


def min_prime_for(delta: Fraction, order: int, genus: int, ramified: int) -> int:
    """Smallest q with order*genus/(q+1) + 2*#R/(q+1) <= delta."""
    delta = Fraction(delta)
    if delta <= 0:
        raise DegenerateInputError("delta must be positive")
    need = Fraction(order * genus + 2 * ramified, delta) - 1
    return max(0, math.ceil(need))
