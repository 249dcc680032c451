"""Functional graphs of reduced maps on P^1(F_p).

Points are encoded as indices in [0, p]: index x < p is the affine point
[x:1], index p is [1:0] at infinity.  The graph is one flat successor table
(out-degree is always 1).  The periodic set is computed two independent ways:
repeated deletion of in-degree-0 sources (primary), and stabilization of the
forward image sets (the intersection of the images equals the periodic set).

The numpy path is used whenever p fits comfortably in int64 arithmetic; a
pure-Python build and peel are kept as reference oracles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ResourceCapError
from .maps import ReducedMap

MAX_GRAPH_PRIME = 1 << 26   # memory budget: successor table of p+1 int64
_NUMPY_PRIME_LIMIT = 1 << 31  # int64 products stay below 2^63


@dataclass
class FuncGraph:
    """Successor table of phi_p on P^1(F_p) with cached decompositions."""

    p: int
    successor: np.ndarray
    periodic_mask: np.ndarray | None = field(default=None, repr=False)
    tail_len: list[int] | None = field(default=None, repr=False)
    cycle_len: list[int] | None = field(default=None, repr=False)
    _strict_sizes: list[int] | None = field(default=None, repr=False)
    _max_tail: int | None = field(default=None, repr=False)
    _cycle_hist: dict[int, int] | None = field(default=None, repr=False)

    @property
    def n_points(self) -> int:
        return self.p + 1


@dataclass(frozen=True)
class OrbitStats:
    mean_rho: Fraction
    max_tail: int
    max_cycle: int
    cycle_histogram: dict[int, int]


def _horner_vec(coeffs: list[int], xs: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return acc


def _pow_mod_vec(base: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            out = out * b % p
        b = b * b % p
        e >>= 1
    return out


def build_graph(rmap: ReducedMap) -> FuncGraph:
    """Successor table of size p+1; O(p) evaluations."""
    p = rmap.p
    if p > MAX_GRAPH_PRIME:
        raise ResourceCapError(f"p={p} exceeds MAX_GRAPH_PRIME={MAX_GRAPH_PRIME}")
    if p >= _NUMPY_PRIME_LIMIT:
        return build_graph_py(rmap)
    xs = np.arange(p, dtype=np.int64)
    num_v = _horner_vec(list(rmap.num.coeffs), xs, p)
    if rmap.den.degree() == 0:
        den_v = np.full(p, rmap.den[0], dtype=np.int64)
    else:
        den_v = _horner_vec(list(rmap.den.coeffs), xs, p)
    succ = np.empty(p + 1, dtype=np.int64)
    finite = den_v != 0
    if not finite.all():
        if np.any(num_v[~finite] == 0):
            raise AssertionError("P and Q vanished together: good reduction violated")
        succ[:p][~finite] = p
    vals = num_v[finite] * _pow_mod_vec(den_v[finite], p - 2, p) % p
    succ[:p][finite] = vals
    succ[p] = rmap.eval_point(p)
    return FuncGraph(p=p, successor=succ)


def build_graph_py(rmap: ReducedMap) -> FuncGraph:
    """Pure-Python reference build (also the fallback for very large p)."""
    p = rmap.p
    if p > MAX_GRAPH_PRIME:
        raise ResourceCapError(f"p={p} exceeds MAX_GRAPH_PRIME={MAX_GRAPH_PRIME}")
    succ = [rmap.eval_point(i) for i in range(p + 1)]
    return FuncGraph(p=p, successor=np.array(succ, dtype=np.int64))


def periodic_mask(graph: FuncGraph) -> np.ndarray:
    """Boolean mask of the periodic set, by in-degree-zero peeling (Kahn)."""
    if graph.periodic_mask is not None:
        return graph.periodic_mask
    succ = graph.successor
    n = graph.n_points
    indeg = np.bincount(succ, minlength=n)
    frontier = np.flatnonzero(indeg == 0)
    while frontier.size:
        targets = succ[frontier]
        indeg -= np.bincount(targets, minlength=n)
        cand = np.unique(targets)
        frontier = cand[indeg[cand] == 0]
    # A removed point's in-degree is 0 for good (all in-edges consumed); a
    # cycle point keeps its never-removed cycle predecessor, so indeg >= 1.
    graph.periodic_mask = indeg > 0
    return graph.periodic_mask


def periodic_points(graph: FuncGraph) -> tuple[frozenset[int], int]:
    """The exact periodic set and its cardinality #Per(phi_p)."""
    mask = periodic_mask(graph)
    pts = frozenset(int(i) for i in np.flatnonzero(mask))
    return pts, len(pts)


def peel_periodic_py(successor: list[int]) -> list[bool]:
    """Reference peel on a plain list; used to cross-check the numpy path."""
    n = len(successor)
    indeg = [0] * n
    for t in successor:
        indeg[t] += 1
    dq = deque(i for i in range(n) if indeg[i] == 0)
    periodic = [True] * n
    while dq:
        u = dq.popleft()
        periodic[u] = False
        t = successor[u]
        indeg[t] -= 1
        if indeg[t] == 0:
            dq.append(t)
    return periodic


def _strict_image_sizes(graph: FuncGraph) -> tuple[list[int], int]:
    """Strictly decreasing image sizes until stabilization, plus max tail.

    #phi^(k+1) < #phi^k until the image is all-periodic, after which it is
    constant; the first repeat therefore certifies stabilization, and the max
    tail length is the number of strict steps.
    """
    if graph._strict_sizes is not None:
        return graph._strict_sizes, graph._max_tail
    succ = graph.successor
    n = graph.n_points
    alive = np.ones(n, dtype=bool)
    prev = n
    sizes: list[int] = []
    while True:
        nxt = np.zeros(n, dtype=bool)
        nxt[succ[alive]] = True
        s = int(nxt.sum())
        if s == prev:
            break
        sizes.append(s)
        prev = s
        alive = nxt
    graph._strict_sizes = sizes
    graph._max_tail = len(sizes)
    return sizes, len(sizes)


def image_iterate(graph: FuncGraph, n: int) -> list[int]:
    """Sizes #phi^k(P^1(F_p)) for k = 1..n (k = 0 is the full p+1 points)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sizes, _ = _strict_image_sizes(graph)
    stable = sizes[-1] if sizes else graph.n_points
    return (sizes + [stable] * max(0, n - len(sizes)))[:n]


def stabilized_image_set(graph: FuncGraph) -> frozenset[int]:
    """The intersection of all forward images, by direct image iteration.

    Independent of the peeling route; the two must agree exactly.
    """
    succ = graph.successor
    n = graph.n_points
    alive = np.ones(n, dtype=bool)
    prev = n
    while True:
        nxt = np.zeros(n, dtype=bool)
        nxt[succ[alive]] = True
        s = int(nxt.sum())
        if s == prev:
            return frozenset(int(i) for i in np.flatnonzero(nxt))
        prev = s
        alive = nxt


def max_tail_length(graph: FuncGraph) -> int:
    _, mt = _strict_image_sizes(graph)
    return mt


def cycle_stats(graph: FuncGraph) -> tuple[int, dict[int, int]]:
    """Maximum cycle length and the histogram {cycle length: #cycles}."""
    if graph._cycle_hist is not None:
        hist = graph._cycle_hist
        return (max(hist) if hist else 0), hist
    mask = periodic_mask(graph)
    succ = graph.successor.tolist()
    seen = np.zeros(graph.n_points, dtype=bool)
    hist: dict[int, int] = {}
    for i in np.flatnonzero(mask):
        i = int(i)
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = succ[j]
            length += 1
        hist[length] = hist.get(length, 0) + 1
    graph._cycle_hist = hist
    return (max(hist) if hist else 0), hist


def _fill_tails(graph: FuncGraph) -> None:
    if graph.tail_len is not None:
        return
    mask = periodic_mask(graph)
    succ = graph.successor.tolist()
    n = graph.n_points
    cycle_of = [0] * n
    seen = [False] * n
    for i in np.flatnonzero(mask):
        i = int(i)
        if seen[i]:
            continue
        cyc = [i]
        j = succ[i]
        seen[i] = True
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = succ[j]
        for v in cyc:
            cycle_of[v] = len(cyc)
    preds: list[list[int]] = [[] for _ in range(n)]
    for i, t in enumerate(succ):
        preds[t].append(i)
    tail = [0] * n
    dq = deque(int(i) for i in np.flatnonzero(mask))
    while dq:
        u = dq.popleft()
        for v in preds[u]:
            if not mask[v]:
                tail[v] = tail[u] + 1
                cycle_of[v] = cycle_of[u]
                dq.append(v)
    graph.tail_len = tail
    graph.cycle_len = cycle_of


def orbit_stats(graph: FuncGraph) -> OrbitStats:
    """Aggregate rho-shape statistics; exact integers and rationals."""
    _fill_tails(graph)
    max_cycle, hist = cycle_stats(graph)
    total = sum(graph.tail_len) + sum(graph.cycle_len)
    return OrbitStats(
        mean_rho=Fraction(total, graph.n_points),
        max_tail=max(graph.tail_len),
        max_cycle=max_cycle,
        cycle_histogram=hist,
    )


def floyd_rho(graph: FuncGraph, start: int) -> tuple[int, int]:
    """Per-point (tail, cycle) by Floyd tortoise/hare; debug oracle only."""
    succ = graph.successor

    def f(i: int) -> int:
        return int(succ[i])

    tortoise = f(start)
    hare = f(f(start))
    while tortoise != hare:
        tortoise = f(tortoise)
        hare = f(f(hare))
    mu = 0
    tortoise = start
    while tortoise != hare:
        tortoise = f(tortoise)
        hare = f(hare)
        mu += 1
    lam = 1
    hare = f(tortoise)
    while tortoise != hare:
        hare = f(hare)
        lam += 1
    return mu, lam
