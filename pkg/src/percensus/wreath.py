"""Fixed-point statistics of group actions and their iterated wreath products.

A finite action enters as its fixed-point spectrum: the histogram of "number
of fixed points" over all group elements.  That histogram determines the
proportion of elements with at least one fixed point (FPP) for every iterated
wreath power, via an exact rational recursion, and the full fixed-point-count
distribution via composition of generating polynomials.  An explicit
permutation enumeration is kept as a brute-force oracle at tiny sizes.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegenerateInputError, ResourceCapError
from .polynomials import PolyQ

ENUMERATION_BUDGET = 10**7    # max wreath elements for the brute-force oracle
FIX_POLY_DEGREE_CAP = 1 << 12  # max degree of a fix-count generating polynomial


@dataclass(frozen=True)
class FixedPointSpectrum:
    """Histogram {k: #elements with exactly k fixed points} on d points."""

    domain: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cs = dict(self.counts)
        if any(not (0 <= k <= self.domain) or c <= 0 for k, c in cs.items()):
            raise DegenerateInputError("fixed-point counts out of range")
        if cs.get(self.domain, 0) < 1:
            raise DegenerateInputError("the identity (fixing everything) is missing")
        object.__setattr__(self, "counts", tuple(sorted(cs.items())))

    @classmethod
    def from_dict(cls, domain: int, counts: dict[int, int]) -> "FixedPointSpectrum":
        return cls(domain, tuple(sorted(counts.items())))

    @property
    def order(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def fpp(self) -> Fraction:
        fixed_free = dict(self.counts).get(0, 0)
        return Fraction(self.order - fixed_free, self.order)

    @property
    def transitive(self) -> bool:
        # Burnside: one orbit iff the average number of fixed points is 1.
        return sum(k * c for k, c in self.counts) == self.order

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def spectrum_symmetric(d: int) -> FixedPointSpectrum:
    """Spectrum of S_d on d points: rencontres counts C(d,k)*derangements(d-k)."""
    if d < 2:
        raise DegenerateInputError("need domain size d >= 2")
    der = [1, 0]
    for m in range(2, d + 1):
        der.append((m - 1) * (der[m - 1] + der[m - 2]))
    counts = {k: comb(d, k) * der[d - k] for k in range(d + 1) if comb(d, k) * der[d - k]}
    return FixedPointSpectrum.from_dict(d, counts)


def spectrum_cyclic(d: int) -> FixedPointSpectrum:
    """Spectrum of C_d acting regularly: rotations fix nothing."""
    if d < 2:
        raise DegenerateInputError("need domain size d >= 2")
    return FixedPointSpectrum.from_dict(d, {0: d - 1, d: 1})


def iterate_fpp(spec: FixedPointSpectrum, n: int) -> list[Fraction]:
    """Exact FPP of the m-fold wreath power acting on d^m points, m = 1..n.

    An element (pi; tau_1..tau_d) of the next level fixes a point iff pi
    fixes some block i and tau_i has a fixed point, so the no-fixed-point
    probability is the spectrum average of (1 - q_m)^(#blocks fixed by pi).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    order = spec.order
    out: list[Fraction] = []
    qm = spec.fpp
    for _ in range(n):
        out.append(qm)
        if len(out) == n:
            break
        miss = Fraction(1) - qm
        total = sum(c * miss**k for k, c in spec.counts)
        qm = 1 - Fraction(total, order)
    return out


def iterate_fpp_float(spec: FixedPointSpectrum, n: int) -> list[float]:
    """Float64 companion of iterate_fpp for depths where exact denominators
    (of bit size ~ d^n) are out of reach; never used in exact assertions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    order = spec.order
    out: list[float] = []
    qm = float(spec.fpp)
    for _ in range(n):
        out.append(qm)
        if len(out) == n:
            break
        miss = 1.0 - qm
        total = sum(c * miss**k for k, c in spec.counts)
        qm = 1.0 - total / order
    return out


@dataclass(frozen=True)
class FixGenPoly:
    """Generating polynomial g(x) = (1/|G|) sum_pi x^fix(pi); g(1) = 1."""

    poly: PolyQ

    @property
    def fpp(self) -> Fraction:
        return Fraction(1) - self.poly(Fraction(0))

    @property
    def mean(self) -> Fraction:
        return self.poly.derivative()(Fraction(1))

    def coefficients(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs


def fix_distribution(spec: FixedPointSpectrum, n: int) -> FixGenPoly:
    """Fixed-point-count distribution of the n-fold wreath power.

    g_n = g_1 o g_(n-1): conditioned on the top element fixing j blocks, the
    fixed-point count is a sum of j independent copies of the previous level.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if spec.domain**n > FIX_POLY_DEGREE_CAP:
        raise ResourceCapError(
            f"degree {spec.domain}^{n} exceeds FIX_POLY_DEGREE_CAP={FIX_POLY_DEGREE_CAP}"
        )
    order = spec.order
    coeffs = [Fraction(0)] * (spec.domain + 1)
    for k, c in spec.counts:
        coeffs[k] = Fraction(c, order)
    g1 = PolyQ(coeffs)
    g = g1
    for _ in range(n - 1):
        g = g1.compose(g)
    return FixGenPoly(g)


class ExplicitGroup:
    """A permutation group given by every element; oracle input only."""

    __slots__ = ("perms", "domain")

    def __init__(self, perms):
        perms = tuple(tuple(p) for p in perms)
        if not perms:
            raise DegenerateInputError("empty permutation list")
        d = len(perms[0])
        if any(len(p) != d or sorted(p) != list(range(d)) for p in perms):
            raise DegenerateInputError("entries are not permutations of 0..d-1")
        have = set(perms)
        if len(have) != len(perms):
            raise DegenerateInputError("duplicate permutations listed")
        if tuple(range(d)) not in have:
            raise DegenerateInputError("identity permutation missing")
        for a in perms:
            inv = [0] * d
            for i, ai in enumerate(a):
                inv[ai] = i
            if tuple(inv) not in have:
                raise DegenerateInputError("not closed under inverse")
            for b in perms:
                if tuple(a[b[i]] for i in range(d)) not in have:
                    raise DegenerateInputError("not closed under composition")
        self.perms = perms
        self.domain = d

    def __len__(self):
        return len(self.perms)

    def spectrum(self) -> FixedPointSpectrum:
        hist = Counter(sum(1 for i, pi in enumerate(p) if pi == i) for p in self.perms)
        return FixedPointSpectrum.from_dict(self.domain, dict(hist))


def symmetric_group(d: int) -> ExplicitGroup:
    return ExplicitGroup(itertools.permutations(range(d)))


def cyclic_group(d: int) -> ExplicitGroup:
    return ExplicitGroup(
        tuple((i + s) % d for i in range(d)) for s in range(d)
    )


def enumerate_wreath(group: ExplicitGroup, n: int) -> FixedPointSpectrum:
    """Brute-force spectrum of the n-fold wreath power on d^n points.

    Builds every element from the action rule (i,j) -> (pi(i), tau_i(j))
    applied level by level; the element count |G|^((d^n-1)/(d-1)) must stay
    within the enumeration budget.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = group.domain
    n_elements = len(group) ** ((d**n - 1) // (d - 1))
    if n_elements > ENUMERATION_BUDGET:
        raise ResourceCapError(
            f"{n_elements} wreath elements exceed ENUMERATION_BUDGET={ENUMERATION_BUDGET}"
        )
    level = group.perms
    size = d
    for _ in range(n - 1):
        new = []
        for pi in group.perms:
            for taus in itertools.product(level, repeat=d):
                perm = []
                for i in range(d):
                    base = pi[i] * size
                    tau = taus[i]
                    perm.extend(base + tau[j] for j in range(size))
                new.append(tuple(perm))
        level = tuple(new)
        size *= d
    hist = Counter(sum(1 for i, pi in enumerate(p) if pi == i) for p in level)
    return FixedPointSpectrum.from_dict(size, dict(hist))


_LITERAL = re.compile(r"^d=(\d+);(.*)$")


def parse_group_spec(text: str) -> FixedPointSpectrum:
    """Parse "S:d", "C:d", or the literal form "d=3;0:2,1:3,3:1"."""
    text = text.strip()
    if text.upper().startswith("S:"):
        return spectrum_symmetric(int(text[2:]))
    if text.upper().startswith("C:"):
        return spectrum_cyclic(int(text[2:]))
    m = _LITERAL.match(text)
    if not m:
        raise DegenerateInputError(f"unrecognized group spec {text!r}")
    d = int(m.group(1))
    counts: dict[int, int] = {}
    for part in m.group(2).split(","):
        k, _, c = part.partition(":")
        counts[int(k)] = int(c)
    return FixedPointSpectrum.from_dict(d, counts)


def render_spectrum(spec: FixedPointSpectrum) -> str:
    body = ",".join(f"{k}:{c}" for k, c in spec.counts)
    return f"d={spec.domain};{body}"
