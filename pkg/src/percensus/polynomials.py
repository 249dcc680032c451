"""Dense exact univariate polynomial arithmetic.

Three coefficient domains are supported: Q (via fractions.Fraction), F_p for a
machine-word prime p, and Q[t] (polynomials in x whose coefficients are
polynomials in t).  Coefficients are stored in ascending degree with trailing
zeros stripped; the zero polynomial has an empty coefficient tuple and degree
-1.  Everything here is immutable and pure: the same inputs always produce
bit-identical outputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import DegenerateInputError, ModulusMismatchError, NotSquarefreeError

MAX_PRIME = 1 << 63  # machine-word primes only; larger moduli are out of scope


def _strip(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class PolyQ:
    """Polynomial over Q, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise DegenerateInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({list(self.coeffs)!r})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "PolyQ"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree()
        dl = divisor.leading()
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            f = rem[i + dd] / dl
            if f:
                quo[i] = f
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= f * c
        return PolyQ(quo), PolyQ(rem[:dd])

    def __floordiv__(self, divisor: "PolyQ") -> "PolyQ":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "PolyQ") -> "PolyQ":
        return divmod(self, divisor)[1]

    def __pow__(self, e: int) -> "PolyQ":
        if e < 0:
            raise ValueError("negative exponent")
        out = PolyQ([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "PolyQ") -> "PolyQ":
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyQ([c])
        return acc

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        lead = self.leading()
        return PolyQ([c / lead for c in self.coeffs])

    def gcd(self, other: "PolyQ") -> "PolyQ":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def reversed(self, degree: int | None = None) -> "PolyQ":
        """Coefficient reversal x^k p(1/x), padded to the given formal degree."""
        d = self.degree() if degree is None else degree
        if d < self.degree():
            raise DegenerateInputError("formal degree below actual degree")
        padded = [self[i] for i in range(d + 1)]
        return PolyQ(padded[::-1])

    def order_at_zero(self) -> int:
        """Multiplicity of 0 as a root (0 when the constant term is nonzero)."""
        if self.is_zero():
            raise DegenerateInputError("zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def denominators_lcm(self) -> int:
        out = 1
        for c in self.coeffs:
            out = out * c.denominator // int_gcd(out, c.denominator)
        return out

    def numerators_gcd(self) -> int:
        out = 0
        for c in self.coeffs:
            out = int_gcd(out, abs(c.numerator))
        return out


def squarefree_decomposition(f: PolyQ) -> list[tuple[PolyQ, int]]:
    """Yun decomposition: monic squarefree factors s_i with f = lc * prod s_i^i."""
    if f.degree() < 1:
        return []
    f = f.monic()
    df = f.derivative()
    a = f.gcd(df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    out: list[tuple[PolyQ, int]] = []
    i = 1
    while b.degree() > 0:
        a = b.gcd(d)
        if a.degree() > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def rational_roots(f: PolyQ) -> list[Fraction]:
    """All rational roots of f (without multiplicity), by candidate search.

    Candidates r/s have r dividing the trailing and s the leading integer
    coefficient of the primitive integer form of f.
    """
    if f.is_zero():
        raise DegenerateInputError("zero polynomial")
    scale = f.denominators_lcm()
    ints = [int(c * scale) for c in f.coeffs]
    k = 0
    while ints[k] == 0:
        k += 1
    roots = [Fraction(0)] if k > 0 else []
    ints = ints[k:]
    if len(ints) == 1:
        return roots
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    tail, lead = abs(ints[0]), abs(ints[-1])
    for r in _divisors(tail):
        for s in _divisors(lead):
            if int_gcd(r, s) != 1:
                continue
            for cand in (Fraction(r, s), Fraction(-r, s)):
                if f(cand) == 0 and cand not in roots:
                    roots.append(cand)
    roots.sort()
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    out.sort()
    return out


class PolyFp:
    """Polynomial over F_p, coefficients ascending residues in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if not (2 <= p < MAX_PRIME):
            raise DegenerateInputError(f"modulus {p} outside machine-word range")
        self.p = p
        self.coeffs = _strip([int(c) % p for c in coeffs])

    def _check(self, other: "PolyFp"):
        if self.p != other.p:
            raise ModulusMismatchError(f"mixed moduli {self.p} and {other.p}")

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise DegenerateInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyFp)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"PolyFp(p={self.p}, {list(self.coeffs)!r})"

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return PolyFp(self.p, out)

    def __neg__(self) -> "PolyFp":
        return PolyFp(self.p, [self.p - c if c else 0 for c in self.coeffs])

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        return self + (-other)

    def __mul__(self, other) -> "PolyFp":
        if isinstance(other, int):
            return PolyFp(self.p, [c * other % self.p for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyFp(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return PolyFp(p, out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "PolyFp"):
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dd = divisor.degree()
        inv = pow(divisor.leading(), -1, p)
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            f = rem[i + dd] * inv % p
            if f:
                quo[i] = f
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] = (rem[i + j] - f * c) % p
        return PolyFp(p, quo), PolyFp(p, rem[:dd])

    def __floordiv__(self, divisor: "PolyFp") -> "PolyFp":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "PolyFp") -> "PolyFp":
        return divmod(self, divisor)[1]

    def derivative(self) -> "PolyFp":
        return PolyFp(self.p, [i * c % self.p for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def compose(self, inner: "PolyFp") -> "PolyFp":
        self._check(inner)
        acc = PolyFp(self.p)
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyFp(self.p, [c])
        return acc

    def monic(self) -> "PolyFp":
        if self.is_zero():
            return self
        inv = pow(self.leading(), -1, self.p)
        return self * inv

    def gcd(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, mod: "PolyFp") -> "PolyFp":
        """self**e reduced mod `mod` by square-and-multiply."""
        self._check(mod)
        if mod.degree() < 1:
            raise DegenerateInputError("modulus polynomial must have degree >= 1")
        out = PolyFp(self.p, [1])
        base = self % mod
        while e:
            if e & 1:
                out = out * base % mod
            base = base * base % mod
            e >>= 1
        return out

    def roots(self) -> list[int]:
        """Roots in F_p by exhaustive scan (small p only)."""
        if self.p > 1 << 22:
            raise DegenerateInputError("root scan is for small p")
        return [x for x in range(self.p) if self(x) == 0]


def poly_mod_p(f: PolyQ, p: int) -> PolyFp:
    """Reduce a Q-polynomial with p-integral coefficients mod p."""
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise DegenerateInputError(f"coefficient {c} is not {p}-integral")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return PolyFp(p, out)


def distinct_degree_factor(f: PolyFp) -> dict[int, int]:
    """Number of monic irreducible factors of each degree of squarefree f.

    Classic gcd ladder with x^(p^i): after normalizing f monic, compute
    h_i = x^(p^i) mod (remaining cofactor); gcd(cofactor, h_i - x) collects the
    product of all irreducible factors of degree i.  The caller guarantees
    squarefreeness; inputs failing gcd(f, f') = 1 are refused rather than
    silently miscounted.
    """
    if f.degree() < 1:
        raise DegenerateInputError("constant polynomial has no factor degrees")
    g = f.monic()
    if g.gcd(g.derivative()).degree() != 0:
        raise NotSquarefreeError("input polynomial is not squarefree")
    p = f.p
    x = PolyFp(p, [0, 1])
    out: dict[int, int] = {}
    h = x
    i = 0
    while g.degree() >= 2 * (i + 1):
        i += 1
        h = h.pow_mod(p, g)
        part = g.gcd(h - x)
        if part.degree() > 0:
            out[i] = out.get(i, 0) + part.degree() // i
            g = g // part
            h = h % g
    if g.degree() > 0:
        out[g.degree()] = out.get(g.degree(), 0) + 1
    return out


def count_roots(f: PolyFp) -> int:
    """Number of distinct roots of f in F_p: deg gcd(f, x^p - x).

    One Frobenius power instead of the full distinct-degree ladder; used on
    the hot path of specialization sweeps.
    """
    if f.degree() < 1:
        return 0
    g = f.monic()
    x = PolyFp(f.p, [0, 1])
    xp = x.pow_mod(f.p, g)
    return g.gcd(xp - x).degree()


class PolyQt:
    """Polynomial in x whose coefficients live in Q[t]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([c if isinstance(c, PolyQ) else PolyQ(c) for c in coeffs])

    @classmethod
    def from_constant_t(cls, f: PolyQ) -> "PolyQt":
        """Embed f(x) in Q[t][x] with t-free coefficients."""
        return cls([PolyQ([c]) for c in f.coeffs])

    @classmethod
    def from_pencil(cls, num: PolyQ, den: PolyQ) -> "PolyQt":
        """Build num(x) - t*den(x) as an element of Q[t][x]."""
        n = max(len(num.coeffs), len(den.coeffs))
        return cls([PolyQ([num[i], -den[i]]) for i in range(n)])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQt) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PolyQt({list(self.coeffs)!r})"


def _bareiss_determinant(matrix, zero, one, exact_div):
    """Fraction-free Bareiss determinant over an integral domain.

    Entries need *, - and exact division by earlier pivots.  Row swaps flip
    the sign; a fully zero pivot column short-circuits to zero.
    """
    n = len(matrix)
    if n == 0:
        return one
    a = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            pivot_row = next((r for r in range(k + 1, n) if a[r][k] != zero), None)
            if pivot_row is None:
                return zero
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _sylvester(fc: list, gc: list, m: int, n: int, zero):
    """Sylvester matrix rows for f (formal degree m) and g (formal degree n)."""
    size = m + n
    fd = [fc[i] if i < len(fc) else zero for i in range(m + 1)][::-1]
    gd = [gc[i] if i < len(gc) else zero for i in range(n + 1)][::-1]
    rows = []
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant_q(f: PolyQ, g: PolyQ, deg_f: int | None = None, deg_g: int | None = None) -> Fraction:
    """Resultant of f, g over Q at the given formal degrees (defaults: actual)."""
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("resultant of the zero polynomial")
    m = f.degree() if deg_f is None else deg_f
    n = g.degree() if deg_g is None else deg_g
    if m < f.degree() or n < g.degree():
        raise DegenerateInputError("formal degree below actual degree")
    if m == 0 and n == 0:
        return Fraction(1)
    zero = Fraction(0)
    rows = _sylvester(list(f.coeffs), list(g.coeffs), m, n, zero)
    return _bareiss_determinant(rows, zero, Fraction(1), lambda a, b: a / b)


def resultant_qt(f: PolyQt, g: PolyQt) -> PolyQ:
    """Resultant in x of two Q[t][x] polynomials, as an exact element of Q[t].

    Computed as the Sylvester determinant at the formal x-degrees via
    fraction-free Bareiss elimination; every intermediate division is exact in
    Q[t].
    """
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("resultant of the zero polynomial")
    m, n = f.degree(), g.degree()
    if m == 0 and n == 0:
        return PolyQ([1])
    zero = PolyQ()

    def div(a: PolyQ, b: PolyQ) -> PolyQ:
        q, r = divmod(a, b)
        if not r.is_zero():
            raise AssertionError("Bareiss division was not exact")
        return q

    rows = _sylvester(list(f.coeffs), list(g.coeffs), m, n, zero)
    return _bareiss_determinant(rows, zero, PolyQ([1]), div)
