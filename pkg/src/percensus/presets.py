"""Preset sweep experiments with their predicted asymptotic annotations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInputError
from .maps import RationalMapQ, lattes_duplication, parse_map, render_map
from .polynomials import PolyQ


@dataclass(frozen=True)
class PresetSweep:
    name: str
    rmap: RationalMapQ
    lo: int
    hi: int
    filters: tuple[tuple[int, int], ...]
    track_mods: tuple[int, ...]
    annotations: tuple[str, ...]


def chebyshev_poly(d: int) -> PolyQ:
    """Monic Chebyshev-like T_d with T_d(x + 1/x) = x^d + x^(-d).

    T_0 = 2, T_1 = x, T_d = x*T_(d-1) - T_(d-2); e.g. T_2 = x^2 - 2 and
    T_6 = x^6 - 6x^4 + 9x^2 - 2.
    """
    if d < 1:
        raise DegenerateInputError("need d >= 1")
    prev, cur = PolyQ([2]), PolyQ([0, 1])
    for _ in range(d - 1):
        prev, cur = cur, PolyQ([0, 1]) * cur - prev
    return cur


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_power_base(n: int) -> int | None:
    for q in range(2, n + 1):
        if _is_prime(q):
            m = n
            while m % q == 0:
                m //= q
            if m == 1:
                return q
    return None


def _chebyshev_annotation(d: int) -> str:
    base = _prime_power_base(d)
    if base == 2:
        return f"degree-{d} Chebyshev (power of 2): liminf of periodic proportion = 1/4"
    if base is not None:
        return f"degree-{d} Chebyshev (odd prime power): liminf of periodic proportion = 1/2"
    return f"degree-{d} Chebyshev (two distinct prime factors): liminf of periodic proportion = 0"


def get_preset(
    name: str,
    depth: int = 3,
    lo: int | None = None,
    hi: int | None = None,
) -> PresetSweep:
    """Resolve a preset name into a configured sweep plus annotations.

    Known names: powering-<d>, chebyshev-<d>, chebyshev-composite,
    unicritical-generic, lattes2-<a>-<b> (a, b integers or fractions, signs
    allowed).  `depth` is the exponent r of the powering congruence filter
    p = 1 (mod d^r).
    """
    m = re.fullmatch(r"powering-(\d+)", name)
    if m:
        d = int(m.group(1))
        if d < 2:
            raise DegenerateInputError("powering degree must be >= 2")
        modulus = d**depth
        rmap = parse_map(f"x^{d}")
        return PresetSweep(
            name=name,
            rmap=rmap,
            lo=lo or 3,
            hi=hi or 10**4,
            filters=((modulus, 1),),
            track_mods=(modulus,),
            annotations=(
                f"filter: p = 1 (mod {d}^{depth} = {modulus})",
                f"powering-map bound: proportion <= 1/{modulus} + 2/(p+1) on every filtered prime",
                "liminf of periodic proportion over all primes = 0 along these filters",
            ),
        )
    if name == "chebyshev-composite":
        name_d = 6
        rmap = RationalMapQ(chebyshev_poly(name_d), PolyQ([1]))
        return PresetSweep(
            name=name,
            rmap=rmap,
            lo=lo or 3,
            hi=hi or 2 * 10**4,
            filters=(),
            track_mods=(),
            annotations=(_chebyshev_annotation(name_d),),
        )
    m = re.fullmatch(r"chebyshev-(\d+)", name)
    if m:
        d = int(m.group(1))
        if d < 2:
            raise DegenerateInputError("chebyshev degree must be >= 2")
        rmap = RationalMapQ(chebyshev_poly(d), PolyQ([1]))
        track = (64,) if d == 2 else ()
        return PresetSweep(
            name=name,
            rmap=rmap,
            lo=lo or 3,
            hi=hi or 2 * 10**4,
            filters=(),
            track_mods=track,
            annotations=(_chebyshev_annotation(d),),
        )
    if name == "unicritical-generic":
        rmap = parse_map("x^2+1")
        return PresetSweep(
            name=name,
            rmap=rmap,
            lo=lo or 3,
            hi=hi or 2 * 10**4,
            filters=(),
            track_mods=(),
            annotations=(
                "generic unicritical quadratic: 0 is not preperiodic, so the",
                "iterated symmetry is the full wreath power of S_2 and",
                "FPP([S_2]^n) -> 0; periodic proportion -> 0 as p grows",
            ),
        )
    m = re.fullmatch(r"lattes2-(-?\d+(?:/\d+)?)-(-?\d+(?:/\d+)?)", name)
    if m:
        a, b = Fraction(m.group(1)), Fraction(m.group(2))
        rmap = lattes_duplication(a, b)
        return PresetSweep(
            name=name,
            rmap=rmap,
            lo=lo or 3,
            hi=hi or 10**4,
            filters=(),
            track_mods=(),
            annotations=(
                f"duplication map of y^2 = x^3 + {a}x + {b}: {render_map(rmap)}",
                "elliptic-curve theory: liminf of periodic proportion = 0 for",
                "curves whose mod-ell image is large (holds generically)",
            ),
        )
    raise DegenerateInputError(
        f"unknown preset {name!r}; known: powering-<d>, chebyshev-<d>, "
        "chebyshev-composite, unicritical-generic, lattes2-<a>-<b>"
    )
