"""Rational maps over Q: parsing, normalization, iteration, reduction mod p.

A map is stored as coprime integer-normalized numerator/denominator
polynomials together with its formal degree d = max(deg num, deg den).  The
homogenizations P(X,Y) = Y^d p(X/Y), Q(X,Y) = Y^d q(X/Y) are implicit in the
coefficient sequences padded to length d+1; the point at infinity is handled
through the top coefficients P(1,0) = p_d, Q(1,0) = q_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from hashlib import sha256
from math import gcd as int_gcd

from .errors import (
    DegenerateMapError,
    MapSyntaxError,
    NotADynamicalSystemError,
    ResourceCapError,
    SingularCurveError,
)
from .polynomials import PolyFp, PolyQ, poly_mod_p, resultant_q

MAX_MAP_DEGREE = 16
MAX_ITER_Q = 6            # iterate cap for exact Q coefficients
MAX_ITER_MOD_P = 12       # iterate cap mod p
ITERATE_LENGTH_CAP = 1 << 17   # max number of coefficients of an iterate
COEFF_BIT_CAP = 1 << 20        # max bit size of an exact iterate coefficient


class _AtInfinity:
    """Singleton marker for the point at infinity of P^1(Q)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITY = _AtInfinity()


class RationalMapQ:
    """A degree-d rational self-map of P^1 over Q, d >= 2."""

    __slots__ = ("num", "den", "degree", "resultant")

    def __init__(self, num: PolyQ, den: PolyQ):
        if den.is_zero():
            raise DegenerateMapError("zero denominator polynomial")
        if num.is_zero():
            raise NotADynamicalSystemError("the zero map has degree 0")
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
        scale = num.denominators_lcm()
        dl = den.denominators_lcm()
        scale = scale * dl // int_gcd(scale, dl)
        num, den = num * scale, den * scale
        content = int_gcd(num.numerators_gcd(), den.numerators_gcd())
        num, den = num * Fraction(1, content), den * Fraction(1, content)
        if den.leading() < 0:
            num, den = -num, -den
        d = max(num.degree(), den.degree())
        if d < 2:
            raise NotADynamicalSystemError(f"degree {d} < 2")
        if d > MAX_MAP_DEGREE:
            raise ResourceCapError(f"degree {d} exceeds MAX_MAP_DEGREE={MAX_MAP_DEGREE}")
        self.num = num
        self.den = den
        self.degree = d
        # Homogeneous resultant at formal degrees (d, d).  Nonzero once
        # num/den are coprime: they share no affine root, and at least one
        # reaches degree d so [1:0] is not a common root either.
        res = resultant_q(num, den, d, d)
        if res == 0 or res.denominator != 1:
            raise AssertionError("homogeneous resultant must be a nonzero integer")
        self.resultant = int(res)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMapQ)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalMapQ({render_map(self)!r})"

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def eval_q(self, v):
        """Projective evaluation over Q; v is a Fraction or INFINITY."""
        if v is INFINITY:
            top_n, top_d = self.num[self.degree], self.den[self.degree]
            return top_n / top_d if top_d else INFINITY
        dv = self.den(v)
        if dv == 0:
            return INFINITY
        return self.num(v) / dv

    def good_reduction(self, p: int) -> bool:
        """True iff p does not divide the homogeneous resultant Res(P, Q).

        Equivalent to the valuation condition max(|P(a,1)|_p, |Q(a,1)|_p) = 1
        for all algebraic a (plus the reversed condition at infinity): the
        resultant of the formal degree-d integer forms vanishes mod p exactly
        when the reduced forms acquire a common projective root, which is when
        the reduced map drops degree.
        """
        return self.resultant % p != 0

    def reduce(self, p: int) -> "ReducedMap":
        if not self.good_reduction(p):
            raise DegenerateMapError(f"bad reduction at p={p}")
        return ReducedMap(
            p=p,
            num=poly_mod_p(self.num, p),
            den=poly_mod_p(self.den, p),
            degree=self.degree,
        )


@dataclass(frozen=True)
class ReducedMap:
    """Reduction of a good-reduction map mod p; evaluable on P^1(F_p)."""

    p: int
    num: PolyFp
    den: PolyFp
    degree: int

    def eval_point(self, pt: int) -> int:
        """Image of a point of P^1(F_p) in the index encoding (p = infinity)."""
        p = self.p
        if pt == p:
            x, y = self.num[self.degree], self.den[self.degree]
        else:
            x, y = self.num(pt), self.den(pt)
        if y:
            return x * pow(y, -1, p) % p
        if x:
            return p
        raise AssertionError("P and Q vanished together: good reduction violated")


@dataclass(frozen=True)
class IteratePair:
    """Affine parts (p_n, q_n) of the homogenized n-th iterate."""

    n: int
    num: object  # PolyQ or PolyFp
    den: object


def _iterate_pair(num, den, d: int, n: int, modulus: int | None):
    pk, qk = num, den
    for _ in range(n - 1):
        pw_p = [None] * (d + 1)
        pw_q = [None] * (d + 1)
        one = PolyFp(modulus, [1]) if modulus else PolyQ([1])
        pw_p[0] = pw_q[0] = one
        for i in range(1, d + 1):
            pw_p[i] = pw_p[i - 1] * pk
            pw_q[i] = pw_q[i - 1] * qk
        nxt_p = nxt_q = None
        for i in range(d + 1):
            cn, cd = num[i], den[i]
            basis = pw_p[i] * pw_q[d - i]
            if cn:
                term = basis * cn
                nxt_p = term if nxt_p is None else nxt_p + term
            if cd:
                term = basis * cd
                nxt_q = term if nxt_q is None else nxt_q + term
        zero = PolyFp(modulus) if modulus else PolyQ()
        pk = zero if nxt_p is None else nxt_p
        qk = zero if nxt_q is None else nxt_q
        if max(pk.degree(), qk.degree()) + 1 > ITERATE_LENGTH_CAP:
            raise ResourceCapError(
                f"iterate length exceeds ITERATE_LENGTH_CAP={ITERATE_LENGTH_CAP}"
            )
        if modulus is None:
            bits = max(
                (abs(c.numerator).bit_length() for c in pk.coeffs + qk.coeffs),
                default=0,
            )
            if bits > COEFF_BIT_CAP:
                raise ResourceCapError(
                    f"iterate coefficients exceed COEFF_BIT_CAP={COEFF_BIT_CAP} bits"
                )
    return pk, qk


def iterate(obj, n: int) -> IteratePair:
    """The pair (p_n, q_n) with P_n = P(P_{n-1}, Q_{n-1}), Q_n likewise.

    Accepts a RationalMapQ (exact coefficients, n <= MAX_ITER_Q) or a
    ReducedMap (mod p, n <= MAX_ITER_MOD_P).  Specializing t = a in
    p_n(x) - t q_n(x) afterwards gives the fiber polynomial of a.
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    if isinstance(obj, RationalMapQ):
        if n > MAX_ITER_Q:
            raise ResourceCapError(f"n={n} exceeds MAX_ITER_Q={MAX_ITER_Q}")
        pk, qk = _iterate_pair(obj.num, obj.den, obj.degree, n, None)
    elif isinstance(obj, ReducedMap):
        if n > MAX_ITER_MOD_P:
            raise ResourceCapError(f"n={n} exceeds MAX_ITER_MOD_P={MAX_ITER_MOD_P}")
        pk, qk = _iterate_pair(obj.num, obj.den, obj.degree, n, obj.p)
    else:
        raise TypeError(f"cannot iterate {type(obj).__name__}")
    return IteratePair(n=n, num=pk, den=qk)


def lattes_duplication(a: Fraction, b: Fraction) -> RationalMapQ:
    """Degree-4 map induced by point duplication on y^2 = x^3 + a x + b."""
    a, b = Fraction(a), Fraction(b)
    if 4 * a**3 + 27 * b**2 == 0:
        raise SingularCurveError("curve discriminant 4a^3 + 27b^2 vanishes")
    num = PolyQ([a * a, -8 * b, -2 * a, 0, 1])
    den = PolyQ([4 * b, 4 * a, 0, 4])
    return RationalMapQ(num, den)


# --------------------------------------------------------------------------
# Expression parsing: integers/fractions, x, + - * / ^, parentheses,
# evaluated in the field Q(x) and normalized afterwards.
# --------------------------------------------------------------------------


class _RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: PolyQ, den: PolyQ):
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
        self.num, self.den = num, den

    def __add__(self, o):
        return _RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _RatFunc(self.num * o.num, self.den * o.den)

    def __neg__(self):
        return _RatFunc(-self.num, self.den)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise MapSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def parse(self) -> _RatFunc:
        value = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return value

    def expr(self) -> _RatFunc:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> _RatFunc:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            pos = self.pos
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.num.is_zero():
                    raise DegenerateMapError(
                        f"division by zero polynomial (at position {pos})"
                    )
                value = value * _RatFunc(rhs.den, rhs.num)
        return value

    def unary(self) -> _RatFunc:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        value = self.power()
        return value if sign == 1 else -value

    def power(self) -> _RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() == "-":
                self.error("exponents must be nonnegative integers")
            e = self.integer()
            num, den = base.num, base.den
            return _RatFunc(num**e, den**e)
        return base

    def atom(self) -> _RatFunc:
        c = self.peek()
        if c == "(":
            self.take()
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return value
        if c == "x":
            self.take()
            return _RatFunc(PolyQ([0, 1]), PolyQ([1]))
        if c.isdigit():
            return _RatFunc(PolyQ([self.integer()]), PolyQ([1]))
        if c == ".":
            self.error("floating-point literals are rejected; use exact fractions")
        self.error("expected a number, 'x', or '('" if c else "unexpected end of input")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.error("floating-point literals are rejected; use exact fractions")
        return int(self.text[start : self.pos])


def parse_map(expr: str) -> RationalMapQ:
    """Parse a map expression into a normalized RationalMapQ (degree >= 2)."""
    value = _Parser(expr).parse()
    return RationalMapQ(value.num, value.den)


def parse_polynomial(expr: str) -> PolyQ:
    """Parse an expression that must reduce to a polynomial (for factoring)."""
    value = _Parser(expr).parse()
    if value.den.degree() != 0:
        raise DegenerateMapError("expression is not a polynomial")
    return value.num * (Fraction(1) / value.den.leading())


def poly_str(f: PolyQ) -> str:
    """Human form, descending degree; round-trips through the parser."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree(), -1, -1):
        c = f[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            body = xpow if mag == 1 else f"{mag}*{xpow}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_map(m: RationalMapQ) -> str:
    """Canonical text form "(<num>)/(<den>)"; parse_map round-trips it."""
    return f"({poly_str(m.num)})/({poly_str(m.den)})"


def render_coefficients(m: RationalMapQ) -> str:
    """Debug dump of the ascending coefficient sequences."""
    num = ",".join(str(c) for c in m.num.coeffs)
    den = ",".join(str(c) for c in m.den.coeffs)
    return f"num=[{num}]; den=[{den}]; degree={m.degree}"


def map_key(m: RationalMapQ) -> str:
    """Stable short hash of the canonical rendering, for result-store keys."""
    return sha256(render_map(m).encode()).hexdigest()[:16]
