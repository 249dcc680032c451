"""Critical points and critical orbits over Q.

Covers: locating critical points (with ramification indices, including the
point at infinity via the reciprocal conjugate), exact collision testing of
critical orbits, the modular fallback when critical points are irrational,
the unicritical preperiodicity decision for x^d + c, and discriminants of
iterate pencils p_n(x) - t q_n(x) with their ramified specialization values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInputError, UnsupportedPointError
from .maps import INFINITY, RationalMapQ, iterate
from .polynomials import (
    PolyQ,
    PolyQt,
    rational_roots,
    resultant_qt,
    squarefree_decomposition,
)

MOD_ROOT_SCAN_LIMIT = 1 << 22


@dataclass(frozen=True)
class CriticalPoint:
    """One critical point (or a batch of conjugate irrational ones).

    Exactly one of the three shapes holds: a finite rational value; the point
    at infinity; or an irrational batch carrying the squarefree residual
    factor whose roots are the points (count = residual degree, all with the
    same ramification index).
    """

    ramification: int
    value: Fraction | None = None
    at_infinity: bool = False
    residual: PolyQ | None = None

    @property
    def count(self) -> int:
        return self.residual.degree() if self.residual is not None else 1

    @property
    def is_rational(self) -> bool:
        return self.residual is None and not self.at_infinity


def wronskian(m: RationalMapQ) -> PolyQ:
    return m.num.derivative() * m.den - m.num * m.den.derivative()


def infinity_ramification(m: RationalMapQ) -> int:
    """Ramification index of the map at infinity, via conjugation by 1/x.

    The conjugate 1/phi(1/x) has numerator rev(den) and denominator rev(num)
    (coefficient reversal at the formal degree); the multiplicity of 0 in its
    Wronskian is e - 1, uniformly over finite values and poles.
    """
    d = m.degree
    rn = m.den.reversed(d)
    rd = m.num.reversed(d)
    w = rn.derivative() * rd - rn * rd.derivative()
    return 1 + w.order_at_zero()


def critical_points(m: RationalMapQ) -> list[CriticalPoint]:
    """All critical points with ramification indices.

    Finite points are the roots of the Wronskian p'q - pq'; a root of
    multiplicity k has ramification index k+1 (this covers multiple poles
    too).  Rational roots are extracted from the squarefree decomposition;
    what remains is reported per squarefree factor as an irrational batch.
    The tally sum (e-1) over everything equals 2d-2.
    """
    w = wronskian(m)
    if w.is_zero():
        raise DegenerateInputError("identically critical map (phi' = 0)")
    out: list[CriticalPoint] = []
    for factor, mult in squarefree_decomposition(w):
        residual = factor
        for r in rational_roots(factor):
            out.append(CriticalPoint(ramification=mult + 1, value=r))
            residual = residual // PolyQ([-r, 1])
        if residual.degree() > 0:
            out.append(CriticalPoint(ramification=mult + 1, residual=residual))
    e_inf = infinity_ramification(m)
    if e_inf >= 2:
        out.append(CriticalPoint(ramification=e_inf, at_infinity=True))
    tally = sum(c.count * (c.ramification - 1) for c in out)
    if tally != 2 * m.degree - 2:
        raise AssertionError(f"ramification tally {tally} != {2 * m.degree - 2}")
    out.sort(key=lambda c: (c.at_infinity, c.residual is not None, c.value or 0))
    return out


def default_collision_points(m: RationalMapQ) -> list:
    """Finite critical points as orbit seeds; refuses irrational ones."""
    pts = []
    for c in critical_points(m):
        if c.at_infinity:
            continue
        if not c.is_rational:
            raise UnsupportedPointError(
                "map has irrational critical points; use the modular fallback "
                "(collision_test_mod) instead of exact orbit comparison"
            )
        pts.append(c.value)
    return pts


@dataclass(frozen=True)
class CriticalOrbitReport:
    depth: int
    points: tuple
    orbits: tuple          # orbits[i][m-1] = phi^m(points[i]), entries Fraction or INFINITY
    holds: bool
    violation: tuple | None  # (a, b, m, n) with phi^m(a) = phi^n(b)


def collision_test(m: RationalMapQ, depth: int, points) -> CriticalOrbitReport:
    """Exact orbit collision check among the tracked points.

    Verdict "holds" iff no equality phi^m(a) = phi^n(b) with (a,m) != (b,n)
    for m,n <= depth.  Points must be rational or INFINITY; orbits are
    iterated projectively so passing through infinity is handled exactly.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    seeds = []
    for v in points:
        if v is INFINITY:
            seeds.append(INFINITY)
        elif isinstance(v, (int, Fraction)):
            seeds.append(Fraction(v))
        else:
            raise UnsupportedPointError(
                f"point {v!r} is not rational; use collision_test_mod"
            )
    if len(set(map(str, seeds))) != len(seeds):
        raise DegenerateInputError("duplicate points in the tracked set")
    orbits = []
    for v in seeds:
        orbit = []
        cur = v
        for _ in range(depth):
            cur = m.eval_q(cur)
            orbit.append(cur)
        orbits.append(orbit)
    violation = None
    for later in range(1, depth + 1):
        for earlier in range(1, later + 1):
            for i in range(len(seeds)):
                for j in range(len(seeds)):
                    if earlier == later and i >= j:
                        continue
                    if orbits[i][earlier - 1] == orbits[j][later - 1]:
                        violation = (seeds[i], seeds[j], earlier, later)
                        break
                if violation:
                    break
            if violation:
                break
        if violation:
            break
    return CriticalOrbitReport(
        depth=depth,
        points=tuple(seeds),
        orbits=tuple(tuple(o) for o in orbits),
        holds=violation is None,
        violation=violation,
    )


@dataclass(frozen=True)
class ModCollisionReport:
    depth: int
    per_prime: dict          # p -> sorted tuple of colliding depth pairs (m, n)
    examples: dict           # p -> one witness (a, b, m, n) in the P^1(F_p) encoding
    persistent: tuple        # depth pairs colliding mod every tested prime
    skipped: dict            # p -> reason
    verdict: str             # evidence only; never "holds" over Q

    @property
    def obstructed(self) -> bool:
        return bool(self.persistent)


def collision_test_mod(m: RationalMapQ, depth: int, primes) -> ModCollisionReport:
    """Heuristic collision evidence from reductions mod the given primes.

    The critical points of the reduced map are found by root search over F_p.
    A genuine Q-collision at depths (m, n) survives every good reduction,
    whereas spurious collisions (everything is preperiodic mod p) move around
    with p; so only depth pairs colliding mod every tested prime count as
    evidence, and a clean prime at some pair rules that pair out for rational
    critical points.  The verdict never certifies "holds" over Q: conjugate
    irrational critical points are visible only through their residues.
    """
    per_prime: dict[int, tuple] = {}
    examples: dict[int, tuple] = {}
    skipped: dict[int, str] = {}
    for p in primes:
        if p <= m.degree:
            skipped[p] = "p <= degree (wild ramification)"
            continue
        if not m.good_reduction(p):
            skipped[p] = "bad reduction"
            continue
        if p > MOD_ROOT_SCAN_LIMIT:
            skipped[p] = "p too large for critical root scan"
            continue
        red = m.reduce(p)
        w = red.num.derivative() * red.den - red.num * red.den.derivative()
        if w.is_zero():
            skipped[p] = "wronskian vanished mod p"
            continue
        crit = w.roots()
        orbits = []
        for c in crit:
            orbit = []
            cur = c
            for _ in range(depth):
                cur = red.eval_point(cur)
                orbit.append(cur)
            orbits.append(orbit)
        pairs = set()
        for later in range(1, depth + 1):
            for earlier in range(1, later + 1):
                for i in range(len(crit)):
                    for j in range(len(crit)):
                        if earlier == later and i >= j:
                            continue
                        if orbits[i][earlier - 1] == orbits[j][later - 1]:
                            pairs.add((earlier, later))
                            examples.setdefault(
                                p, (crit[i], crit[j], earlier, later)
                            )
        per_prime[p] = tuple(sorted(pairs))
    if per_prime:
        persistent = set.intersection(*(set(v) for v in per_prime.values()))
    else:
        persistent = set()
    if persistent:
        ps = ",".join(str(p) for p in sorted(per_prime))
        depths = " ".join(f"({a},{b})" for a, b in sorted(persistent))
        verdict = f"collision mod {ps}: depth pairs {depths} persist"
    else:
        verdict = "no obstruction found"
        if not per_prime:
            verdict += " (vacuous)"
    return ModCollisionReport(
        depth=depth,
        per_prime=per_prime,
        examples=examples,
        persistent=tuple(sorted(persistent)),
        skipped=skipped,
        verdict=verdict,
    )


def preperiodic_unicritical(d: int, c: Fraction | int) -> bool:
    """Decide whether 0 is preperiodic under x^d + c, exactly.

    Non-integral c: for p | den(c), v_p(z_k) = d^(k-1) v_p(c) decreases
    forever, so the orbit never repeats.  Integral c: the orbit stays in Z
    and either repeats or escapes the radius |c|+2, beyond which
    |z^d + c| >= |z|^d - |c| > |z| grows monotonically.
    """
    if d < 2:
        raise DegenerateInputError("need degree d >= 2")
    c = Fraction(c)
    if c.denominator > 1:
        return False
    cz = c.numerator
    bound = abs(cz) + 2
    z = 0
    seen = {0}
    while True:
        z = z**d + cz
        if abs(z) > bound:
            return False
        if z in seen:
            return True
        seen.add(z)


@dataclass(frozen=True)
class DiscriminantReport:
    n: int
    resultant_poly: PolyQ            # res_x(W_n, p_n - t q_n), exact in t
    monic_poly: PolyQ
    constant: Fraction               # resultant_poly = constant * monic_poly
    product_factors: tuple | None    # ((value, exponent), ...) when computed
    product_agrees: bool | None
    product_constant: Fraction | None
    lc_power_removed: int | None


def _critical_value_exponents(
    m: RationalMapQ, n: int
) -> tuple[dict[Fraction, int] | None, list, bool]:
    """Exponent of (phi^k(b) - t) in the iterate discriminant: d^(n-k)(e_b - 1).

    Returns (values, irrational batches, hit_infinity).  values is None when
    some finite critical point is irrational.
    """
    crits = critical_points(m)
    irrational = [(c.residual, c.ramification) for c in crits if c.residual is not None]
    finite = [c for c in crits if c.is_rational]
    if irrational:
        return None, irrational, False
    values: dict[Fraction, int] = {}
    hit_inf = False
    for c in finite:
        cur = c.value
        for k in range(1, n + 1):
            cur = m.eval_q(cur)
            if cur is INFINITY:
                hit_inf = True
                break
            exp = m.degree ** (n - k) * (c.ramification - 1)
            values[cur] = values.get(cur, 0) + exp
    return values, irrational, hit_inf


def discriminant_iterate(m: RationalMapQ, n: int) -> DiscriminantReport:
    """Discriminant of p_n(x) - t q_n(x) up to a recorded nonzero constant.

    The exact route is res_x(p_n' q_n - p_n q_n', p_n - t q_n) by
    fraction-free elimination over Q[t].  When every critical point is
    rational with an infinity-free orbit, the product of (phi^k(b) - t)
    factors is built as a cross-check; the two must agree up to a nonzero
    constant times a power of the t-dependent leading coefficient (that
    power is zero whenever deg p_n > deg q_n, e.g. for polynomial maps).
    """
    pair = iterate(m, n)
    pn, qn = pair.num, pair.den
    w = pn.derivative() * qn - pn * qn.derivative()
    if w.is_zero():
        raise DegenerateInputError("inseparable iterate: wronskian vanished")
    res = resultant_qt(PolyQt.from_constant_t(w), PolyQt.from_pencil(pn, qn))
    if res.is_zero():
        raise DegenerateInputError("inseparable iterate: resultant vanished")
    monic = res.monic()
    constant = res.leading()

    values, _irr, hit_inf = _critical_value_exponents(m, n)
    factors = None
    agrees = None
    prod_constant = None
    lc_power = None
    if values is not None and not hit_inf:
        factors = tuple(sorted(values.items()))
        prod = PolyQ([1])
        for v, e in factors:
            prod = prod * PolyQ([v, -1]) ** e
        quo, rem = divmod(res, prod)
        agrees = False
        if rem.is_zero():
            # Strip powers of the formal leading coefficient p_n[D] - t q_n[D].
            formal = m.degree**n
            lc_t = PolyQ([pn[formal], -qn[formal]])
            lc_power = 0
            while quo.degree() > 0 and lc_t.degree() > 0:
                q2, r2 = divmod(quo, lc_t)
                if not r2.is_zero():
                    break
                quo = q2
                lc_power += 1
            if quo.degree() == 0 and not quo.is_zero():
                agrees = True
                prod_constant = quo.leading()
    return DiscriminantReport(
        n=n,
        resultant_poly=res,
        monic_poly=monic,
        constant=constant,
        product_factors=factors,
        product_agrees=agrees,
        product_constant=prod_constant,
        lc_power_removed=lc_power,
    )


@dataclass(frozen=True)
class RamifiedPrimes:
    """Specialization values t = a over which the iterate pencil ramifies."""

    n: int
    values: tuple            # ((value, exponent), ...) sorted by value
    irrational: tuple        # ((residual PolyQ, ramification), ...) unresolved
    excluded_infinity: bool  # some critical orbit passed through infinity

    def reduced_mod(self, p: int) -> set[int]:
        out = set()
        for v, _ in self.values:
            if v.denominator % p != 0:
                out.add(v.numerator * pow(v.denominator, -1, p) % p)
        return out


def ramified_primes(m: RationalMapQ, n: int) -> RamifiedPrimes:
    """Critical orbit values phi^k(a), k <= n, with multiplicity exponents.

    These are the t = a specializations where p_n - a q_n drops
    squarefreeness; frobenius sampling skips them.  Exponent bookkeeping
    follows the chain-rule expansion of the iterate discriminant
    (d^(n-k) * (e-1) per orbit step, accumulated over collisions).
    """
    values, irrational, hit_inf = _critical_value_exponents(m, n)
    if values is None:
        # Track the rational subset anyway; irrational batches are symbolic.
        values = {}
        hit_inf = False
        for c in critical_points(m):
            if not c.is_rational:
                continue
            cur = c.value
            for k in range(1, n + 1):
                cur = m.eval_q(cur)
                if cur is INFINITY:
                    hit_inf = True
                    break
                exp = m.degree ** (n - k) * (c.ramification - 1)
                values[cur] = values.get(cur, 0) + exp
    return RamifiedPrimes(
        n=n,
        values=tuple(sorted(values.items())),
        irrational=tuple(irrational),
        excluded_infinity=hit_inf,
    )


def critical_residues_mod(m: RationalMapQ, p: int) -> list[int]:
    """Finite critical points of the reduced map, by root scan of W mod p."""
    red = m.reduce(p)
    w = red.num.derivative() * red.den - red.num * red.den.derivative()
    if w.is_zero():
        raise DegenerateInputError(f"wronskian vanished mod {p} (wild case)")
    return w.roots()
