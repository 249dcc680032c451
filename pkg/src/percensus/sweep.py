"""Prime sweeps: per-prime census records, persistence, and summaries.

One record per prime: the exact periodic count of the reduced map on
P^1(F_p), image sizes of the first iterates, and orbit-shape extremes.
Records stream to an append-only JSON-lines store keyed by (map hash, p);
re-running with resume skips complete keys, and parallel runs write through
a single ordered writer so serial and parallel output files are
byte-identical.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .graphs import (
    _strict_image_sizes,
    build_graph,
    cycle_stats,
    image_iterate,
    periodic_mask,
)
from .maps import RationalMapQ, map_key, render_map
from .primes import primes_in_range

CHUNK = 64  # primes per worker task; amortizes pool dispatch

_JSON_FIELDS = (
    "map",
    "map_hash",
    "p",
    "good_reduction",
    "n_points",
    "n_periodic",
    "proportion",
    "proportion_decimal",
    "image_sizes",
    "max_tail",
    "max_cycle",
    "mod_classes",
)


@dataclass(frozen=True)
class SweepRecord:
    map_text: str
    map_hash: str
    p: int
    good_reduction: bool
    n_points: int | None = None
    n_periodic: int | None = None
    proportion: Fraction | None = None
    image_sizes: tuple[int, ...] | None = None
    max_tail: int | None = None
    max_cycle: int | None = None
    mod_classes: tuple[tuple[int, int], ...] = ()

    @property
    def key(self) -> tuple[str, int]:
        return (self.map_hash, self.p)

    def to_json_line(self) -> str:
        prop = None if self.proportion is None else f"{self.proportion.numerator}/{self.proportion.denominator}"
        dec = None if self.proportion is None else round(float(self.proportion), 6)
        obj = {
            "map": self.map_text,
            "map_hash": self.map_hash,
            "p": self.p,
            "good_reduction": self.good_reduction,
            "n_points": self.n_points,
            "n_periodic": self.n_periodic,
            "proportion": prop,
            "proportion_decimal": dec,
            "image_sizes": None if self.image_sizes is None else list(self.image_sizes),
            "max_tail": self.max_tail,
            "max_cycle": self.max_cycle,
            "mod_classes": {str(m): r for m, r in self.mod_classes},
        }
        return json.dumps(obj, separators=(",", ":"))

    @staticmethod
    def csv_header() -> str:
        return ",".join(_JSON_FIELDS)

    def to_csv_row(self) -> str:
        prop = "" if self.proportion is None else f"{self.proportion.numerator}/{self.proportion.denominator}"
        dec = "" if self.proportion is None else f"{float(self.proportion):.6f}"
        sizes = "" if self.image_sizes is None else "|".join(map(str, self.image_sizes))
        mods = "|".join(f"{m}:{r}" for m, r in self.mod_classes)
        cells = [
            f'"{self.map_text}"',
            self.map_hash,
            str(self.p),
            str(self.good_reduction).lower(),
            "" if self.n_points is None else str(self.n_points),
            "" if self.n_periodic is None else str(self.n_periodic),
            prop,
            dec,
            sizes,
            "" if self.max_tail is None else str(self.max_tail),
            "" if self.max_cycle is None else str(self.max_cycle),
            mods,
        ]
        return ",".join(cells)

    @classmethod
    def from_json_line(cls, line: str) -> "SweepRecord":
        obj = json.loads(line)
        prop = obj.get("proportion")
        return cls(
            map_text=obj["map"],
            map_hash=obj["map_hash"],
            p=obj["p"],
            good_reduction=obj["good_reduction"],
            n_points=obj.get("n_points"),
            n_periodic=obj.get("n_periodic"),
            proportion=None if prop is None else Fraction(prop),
            image_sizes=None
            if obj.get("image_sizes") is None
            else tuple(obj["image_sizes"]),
            max_tail=obj.get("max_tail"),
            max_cycle=obj.get("max_cycle"),
            mod_classes=tuple(
                sorted((int(m), r) for m, r in obj.get("mod_classes", {}).items())
            ),
        )


def census_record(
    rmap: RationalMapQ, p: int, n_max: int = 8, track_mods: tuple[int, ...] = ()
) -> SweepRecord:
    """Full census of one prime (or a bad-reduction stub record)."""
    text = render_map(rmap)
    key = map_key(rmap)
    mods = tuple((m, p % m) for m in sorted(set(track_mods)))
    if not rmap.good_reduction(p):
        return SweepRecord(
            map_text=text, map_hash=key, p=p, good_reduction=False, mod_classes=mods
        )
    graph = build_graph(rmap.reduce(p))
    n_per = int(periodic_mask(graph).sum())
    strict, max_tail = _strict_image_sizes(graph)
    stable = strict[-1] if strict else p + 1
    if stable != n_per:
        raise AssertionError(
            f"peeled periodic count {n_per} != stabilized image size {stable} at p={p}"
        )
    sizes = image_iterate(graph, n_max)
    if any(n_per > s for s in sizes):
        raise AssertionError(f"periodic count exceeds an image size at p={p}")
    max_cycle, _ = cycle_stats(graph)
    return SweepRecord(
        map_text=text,
        map_hash=key,
        p=p,
        good_reduction=True,
        n_points=p + 1,
        n_periodic=n_per,
        proportion=Fraction(n_per, p + 1),
        image_sizes=tuple(sizes),
        max_tail=max_tail,
        max_cycle=max_cycle,
        mod_classes=mods,
    )


def _census_chunk(args) -> list[SweepRecord]:
    rmap, ps, n_max, track_mods = args
    return [census_record(rmap, p, n_max, track_mods) for p in ps]


def sweep_primes(
    lo: int, hi: int, filters: tuple[tuple[int, int], ...] = ()
) -> list[int]:
    """Primes in [lo, hi] passing every congruence filter p = r (mod m)."""
    return [
        p
        for p in primes_in_range(lo, hi)
        if all(p % m == r for m, r in filters)
    ]


def run_sweep(
    rmap: RationalMapQ,
    lo: int,
    hi: int,
    filters: tuple[tuple[int, int], ...] = (),
    track_mods: tuple[int, ...] = (),
    n_max: int = 8,
    jobs: int = 1,
    skip_keys: set | None = None,
):
    """Yield census records in prime order; congruence filters run first.

    jobs > 1 fans prime blocks of CHUNK out to worker processes; the results
    are consumed in submission order, so output is independent of scheduling.
    """
    ps = sweep_primes(lo, hi, filters)
    if skip_keys:
        key = map_key(rmap)
        ps = [p for p in ps if (key, p) not in skip_keys]
    if not ps:
        return
    if jobs <= 1:
        for p in ps:
            yield census_record(rmap, p, n_max, track_mods)
        return
    chunks = [
        (rmap, ps[i : i + CHUNK], n_max, track_mods) for i in range(0, len(ps), CHUNK)
    ]
    with multiprocessing.Pool(processes=jobs) as pool:
        for records in pool.imap(_census_chunk, chunks):
            yield from records


def default_jobs() -> int:
    return os.cpu_count() or 1


class ResultsStore:
    """Append-only JSON-lines store, one record per line, keyed by (hash, p)."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def existing_keys(self) -> set[tuple[str, int]]:
        keys: set[tuple[str, int]] = set()
        if not self.path.exists():
            return keys
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                obj = json.loads(line)
                keys.add((obj["map_hash"], obj["p"]))
        return keys

    def load(self) -> list[SweepRecord]:
        if not self.path.exists():
            return []
        with self.path.open() as fh:
            return [SweepRecord.from_json_line(s) for s in fh if s.strip()]

    def append_all(self, records) -> int:
        n = 0
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            for rec in records:
                fh.write(rec.to_json_line() + "\n")
                fh.flush()
                n += 1
        return n


@dataclass(frozen=True)
class ClassStats:
    count: int
    min_proportion: Fraction
    mean_proportion: Fraction


@dataclass(frozen=True)
class SweepSummary:
    total: int
    good: int
    min_proportion: Fraction | None
    mean_proportion: Fraction | None
    max_proportion: Fraction | None
    argmin_prime: int | None
    liminf_trace: tuple[tuple[int, Fraction], ...] = ()
    by_class: tuple = field(default=())


def summarize(records) -> SweepSummary:
    """Extremes, mean, the running-liminf trace, and per-class breakdowns.

    The trace value at p is the minimum proportion over all swept primes
    >= p; it is nondecreasing by construction.
    """
    records = sorted(records, key=lambda r: r.p)
    good = [r for r in records if r.good_reduction and r.proportion is not None]
    if not good:
        return SweepSummary(
            total=len(records), good=0, min_proportion=None, mean_proportion=None,
            max_proportion=None, argmin_prime=None,
        )
    props = [r.proportion for r in good]
    mn = min(props)
    argmin = next(r.p for r in good if r.proportion == mn)
    suffix_min: list[Fraction] = [None] * len(good)
    cur = None
    for i in range(len(good) - 1, -1, -1):
        cur = good[i].proportion if cur is None else min(cur, good[i].proportion)
        suffix_min[i] = cur
    trace = tuple((good[i].p, suffix_min[i]) for i in range(len(good)))
    classes: dict[tuple[int, int], list[Fraction]] = {}
    for r in good:
        for m, res in r.mod_classes:
            classes.setdefault((m, res), []).append(r.proportion)
    by_class = tuple(
        (
            m,
            res,
            ClassStats(
                count=len(vals),
                min_proportion=min(vals),
                mean_proportion=sum(vals, Fraction(0)) / len(vals),
            ),
        )
        for (m, res), vals in sorted(classes.items())
    )
    return SweepSummary(
        total=len(records),
        good=len(good),
        min_proportion=mn,
        mean_proportion=sum(props, Fraction(0)) / len(props),
        max_proportion=max(props),
        argmin_prime=argmin,
        liminf_trace=trace,
        by_class=by_class,
    )
