"""Empirical Frobenius statistics from factoring specialized iterate pencils.

For a good prime p and iterate depth n, the degree multiset of
p_n(x) - a q_n(x) over F_p is the cycle type of Frobenius at t = a acting on
the n-th preimage fiber (away from ramified a).  A specialization has a
degree-1 factor exactly when a has a rational n-th preimage off the poles,
so the fraction of root-bearing a estimates the fixed-point proportion of
the Galois action, to be compared against wreath-product predictions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSquarefreeError
from .graphs import MAX_GRAPH_PRIME, build_graph, image_iterate
from .maps import RationalMapQ, iterate
from .polynomials import PolyFp, count_roots, distinct_degree_factor
from .wreath import FixedPointSpectrum, fix_distribution

EXHAUSTIVE_LIMIT = 5 * 10**4
DEFAULT_SAMPLE = 4096
SMALL_SAMPLE_WARNING = 30


@dataclass(frozen=True)
class CycleTypeSample:
    """Frobenius cycle type at one specialization t = a."""

    a: int
    ramified: bool
    degrees: tuple[tuple[int, int], ...] | None  # ((degree, count), ...)
    linear_count: int

    @property
    def has_rational_preimage(self) -> bool:
        return self.linear_count >= 1


class _IterateModP:
    """Shared context: the reduced iterate pair for one (map, p, n)."""

    def __init__(self, m: RationalMapQ, p: int, n: int):
        red = m.reduce(p)
        pair = iterate(red, n)
        self.p = p
        self.n = n
        self.full_degree = m.degree**n
        self.pn: PolyFp = pair.num
        self.qn: PolyFp = pair.den
        self._pn_pad = [self.pn[i] for i in range(self.full_degree + 1)]
        self._qn_pad = [self.qn[i] for i in range(self.full_degree + 1)]

    def specialize(self, a: int) -> PolyFp:
        p = self.p
        return PolyFp(
            p, [(cn - a * cq) % p for cn, cq in zip(self._pn_pad, self._qn_pad)]
        )


def frobenius_cycle_type(m: RationalMapQ, p: int, n: int, a: int) -> CycleTypeSample:
    """Cycle type of Frobenius on the fiber over a, or the ramified flag.

    Ramification is data, not an error: a degree drop or a repeated factor
    marks t = a as a ramified specialization and exempts it from the
    Chebotarev bookkeeping.
    """
    ctx = _IterateModP(m, p, n)
    return _cycle_type(ctx, a % p)


def _cycle_type(ctx: _IterateModP, a: int) -> CycleTypeSample:
    f = ctx.specialize(a)
    if f.degree() < ctx.full_degree:
        return CycleTypeSample(a=a, ramified=True, degrees=None, linear_count=0)
    try:
        degs = distinct_degree_factor(f)
    except NotSquarefreeError:
        return CycleTypeSample(a=a, ramified=True, degrees=None, linear_count=0)
    return CycleTypeSample(
        a=a,
        ramified=False,
        degrees=tuple(sorted(degs.items())),
        linear_count=degs.get(1, 0),
    )


def _linear_count_fast(ctx: _IterateModP, a: int) -> int | None:
    """Number of degree-1 factors, or None when a is ramified.

    Counts distinct roots via one Frobenius power instead of the full
    distinct-degree ladder; equal to the DDF linear count on squarefree
    input.
    """
    f = ctx.specialize(a)
    if f.degree() < ctx.full_degree:
        return None
    g = f.monic()
    if g.gcd(g.derivative()).degree() != 0:
        return None
    return count_roots(g)


@dataclass(frozen=True)
class FrobReport:
    p: int
    n: int
    total: int
    ramified: tuple[int, ...]
    histogram: tuple[tuple[int, int], ...]  # (linear_count, #unramified a)
    fpp: Fraction
    image_proportion: Fraction | None
    image_delta: Fraction | None
    within_image_slack: bool | None
    sampled: bool
    seed: int | None
    warning: str | None

    @property
    def unramified(self) -> int:
        return self.total - len(self.ramified)

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.histogram)


def empirical_fpp(
    m: RationalMapQ,
    p: int,
    n: int,
    sample_size: int | None = None,
    seed: int = 0,
    compare_image: bool = True,
) -> FrobReport:
    """Fraction of unramified a in F_p whose fiber has an F_p-point.

    Exhaustive over a for p up to EXHAUSTIVE_LIMIT; above that a seeded
    uniform sample is taken (or pass sample_size explicitly).  When
    exhaustive, the report also carries the functional-graph image proportion
    #phi^n(P^1)/(p+1), which must agree within (#ramified + 2)/p (the slack
    absorbs ramified values, poles, and the point at infinity, which the
    affine pencil does not see).
    """
    if n == 0:
        return FrobReport(
            p=p, n=0, total=p, ramified=(), histogram=((1, p),), fpp=Fraction(1),
            image_proportion=Fraction(1), image_delta=Fraction(0),
            within_image_slack=True, sampled=False, seed=None, warning=None,
        )
    ctx = _IterateModP(m, p, n)
    warning = None
    if sample_size is None and p <= EXHAUSTIVE_LIMIT:
        avals = range(p)
        sampled = False
    else:
        k = sample_size if sample_size is not None else DEFAULT_SAMPLE
        if k >= p:
            avals = range(p)
            sampled = False
        else:
            rng = random.Random(seed)
            avals = sorted(rng.sample(range(p), k))
            sampled = True
    hist: dict[int, int] = {}
    ramified: list[int] = []
    hits = 0
    total = 0
    for a in avals:
        total += 1
        lc = _linear_count_fast(ctx, a)
        if lc is None:
            ramified.append(a)
            continue
        hist[lc] = hist.get(lc, 0) + 1
        if lc >= 1:
            hits += 1
    unram = total - len(ramified)
    if unram < SMALL_SAMPLE_WARNING:
        warning = f"statistics too small: only {unram} unramified specializations"
    fpp = Fraction(hits, unram) if unram else Fraction(0)
    image_prop = image_delta = None
    within = None
    if compare_image and not sampled and p <= MAX_GRAPH_PRIME:
        graph = build_graph(m.reduce(p))
        image_prop = Fraction(image_iterate(graph, n)[-1], p + 1)
        image_delta = abs(fpp - image_prop)
        within = image_delta <= Fraction(len(ramified) + 2, p)
    return FrobReport(
        p=p,
        n=n,
        total=total,
        ramified=tuple(ramified),
        histogram=tuple(sorted(hist.items())),
        fpp=fpp,
        image_proportion=image_prop,
        image_delta=image_delta,
        within_image_slack=within,
        sampled=sampled,
        seed=seed if sampled else None,
        warning=warning,
    )


@dataclass(frozen=True)
class PredictionComparison:
    tv_distance: Fraction
    empirical: tuple[tuple[int, Fraction], ...]
    predicted: tuple[tuple[int, Fraction], ...]

    @property
    def tv_float(self) -> float:
        return float(self.tv_distance)


def compare_to_prediction(
    report: FrobReport, spec: FixedPointSpectrum
) -> PredictionComparison:
    """Total-variation distance between the observed linear-factor-count
    histogram and the wreath-power fixed-point-count distribution.

    Purely a reporting operation: a large distance flags a non-generic map
    (or a constant-field extension hiding in the splitting field), with no
    pass/fail judgement here.
    """
    pred_poly = fix_distribution(spec, report.n)
    predicted = {
        k: c for k, c in enumerate(pred_poly.coefficients()) if c
    }
    unram = report.unramified
    empirical = (
        {k: Fraction(c, unram) for k, c in report.histogram}
        if unram
        else {}
    )
    keys = set(predicted) | set(empirical)
    tv = sum(
        abs(empirical.get(k, Fraction(0)) - predicted.get(k, Fraction(0)))
        for k in keys
    ) / 2
    return PredictionComparison(
        tv_distance=tv,
        empirical=tuple(sorted(empirical.items())),
        predicted=tuple(sorted(predicted.items())),
    )
