"""Command-line interface.

Subcommands: sweep, preset, fpp, bounds, disc, collide, frob, factor, report.
All data output is text (aligned table), JSON lines, or CSV; the report
subcommand additionally renders figures to files next to the delimited
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bnd
from .critical import (
    collision_test,
    collision_test_mod,
    default_collision_points,
    discriminant_iterate,
    preperiodic_unicritical,
    ramified_primes,
)
from .errors import PercensusError, UnsupportedPointError
from .frobenius import compare_to_prediction, empirical_fpp, frobenius_cycle_type
from .maps import INFINITY, parse_map, parse_polynomial, render_coefficients, render_map
from .polynomials import distinct_degree_factor, poly_mod_p
from .presets import get_preset
from .primes import is_prime
from .sweep import ResultsStore, SweepRecord, default_jobs, run_sweep, summarize
from .wreath import (
    iterate_fpp,
    iterate_fpp_float,
    parse_group_spec,
    render_spectrum,
)

EXACT_FPP_LIMIT = 24  # exact denominators carry ~d^n bits; beyond this, float


def _fmt_frac(v: Fraction | None) -> str:
    return "" if v is None else f"{v.numerator}/{v.denominator}"


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for r, row in enumerate(cells):
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _parse_primes(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")


def _parse_modfilter(text: str) -> tuple[int, int]:
    m, _, r = text.partition(":")
    try:
        m, r = int(m), int(r)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m:r, got {text!r}")
    if m < 2 or not 0 <= r < m:
        raise argparse.ArgumentTypeError(f"need 0 <= r < m with m >= 2, got {text!r}")
    return m, r


def _json_default(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return str(obj)


def _print_json(obj):
    print(json.dumps(obj, default=_json_default))


def _add_sweep_flags(sp, need_map: bool):
    if need_map:
        sp.add_argument("--map", required=True, help="map expression, e.g. '(x^2+1)/x'")
    sp.add_argument("--primes", type=_parse_primes, help="prime range A..B")
    sp.add_argument("--mod", action="append", type=_parse_modfilter, default=[],
                    metavar="m:r", help="keep only p = r (mod m); repeatable")
    sp.add_argument("--track-mod", action="append", type=int, default=[],
                    metavar="m", help="annotate p mod m without filtering; repeatable")
    sp.add_argument("--nmax", type=int, default=8, help="record image sizes up to k=nmax")
    sp.add_argument("--out", help="append records to this JSON-lines store")
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sp.add_argument("--resume", action="store_true",
                    help="skip primes already present in --out")
    sp.add_argument("--jobs", type=int, default=1,
                    help="worker processes (0 = all cores)")
    sp.add_argument("--print-map", action="store_true",
                    help="echo the canonical map and its coefficient dump")


def _run_sweep_command(rmap, lo, hi, filters, track_mods, ns, annotations=()):
    jobs = default_jobs() if ns.jobs == 0 else ns.jobs
    skip = None
    store = None
    if ns.out:
        store = ResultsStore(ns.out)
        if ns.resume:
            skip = store.existing_keys()
    if ns.print_map:
        print(f"# {render_map(rmap)}")
        print(f"# {render_coefficients(rmap)}")
    for line in annotations:
        print(f"# {line}")
    records = []
    gen = run_sweep(rmap, lo, hi, filters, track_mods, ns.nmax, jobs, skip)

    def tee():
        for rec in gen:
            records.append(rec)
            yield rec

    if store is not None:
        n = store.append_all(tee())
        print(f"# wrote {n} records to {store.path}")
    elif ns.format == "json":
        for rec in tee():
            print(rec.to_json_line())
    elif ns.format == "csv":
        print(SweepRecord.csv_header())
        for rec in tee():
            print(rec.to_csv_row())
    else:
        rows = []
        for rec in tee():
            if rec.good_reduction:
                rows.append(
                    (rec.p, rec.n_periodic, _fmt_frac(rec.proportion),
                     f"{float(rec.proportion):.6f}", rec.max_tail, rec.max_cycle)
                )
            else:
                rows.append((rec.p, "-", "bad reduction", "", "", ""))
        print(_table(("p", "n_periodic", "proportion", "decimal", "max_tail", "max_cycle"), rows))
    if not records:
        print("# no primes matched the requested range/filters", file=sys.stderr)
        return
    s = summarize(records)
    if ns.format == "json":
        _print_json(
            {
                "summary": {
                    "total": s.total,
                    "good": s.good,
                    "min_proportion": s.min_proportion,
                    "mean_proportion": s.mean_proportion,
                    "max_proportion": s.max_proportion,
                    "argmin_prime": s.argmin_prime,
                }
            }
        )
    elif ns.format == "table":
        if s.good:
            print()
            print(f"# primes: {s.total} swept, {s.good} good reduction")
            print(
                f"# proportion min {_fmt_frac(s.min_proportion)} "
                f"({float(s.min_proportion):.6f}) at p={s.argmin_prime}, "
                f"mean {float(s.mean_proportion):.6f}, "
                f"max {_fmt_frac(s.max_proportion)}"
            )
            for m, r, st in s.by_class:
                print(
                    f"# class p={r} (mod {m}): {st.count} primes, "
                    f"min {float(st.min_proportion):.6f}, mean {float(st.mean_proportion):.6f}"
                )


def _cmd_sweep(ns):
    rmap = parse_map(ns.map)
    if not ns.primes:
        raise PercensusError("--primes A..B is required for sweep")
    lo, hi = ns.primes
    if lo < 2:
        raise PercensusError("prime range must start at 2 or above")
    filters = tuple(ns.mod)
    track = tuple(sorted({m for m, _ in filters} | set(ns.track_mod)))
    _run_sweep_command(rmap, lo, hi, filters, track, ns)


def _cmd_preset(ns):
    preset = get_preset(ns.name, depth=ns.depth,
                        lo=ns.primes[0] if ns.primes else None,
                        hi=ns.primes[1] if ns.primes else None)
    filters = preset.filters + tuple(ns.mod)
    track = tuple(sorted(set(preset.track_mods) | {m for m, _ in filters} | set(ns.track_mod)))
    annotations = (f"preset {preset.name}: map {render_map(preset.rmap)}",) + preset.annotations
    _run_sweep_command(preset.rmap, preset.lo, preset.hi, filters, track, ns, annotations)


def _cmd_fpp(ns):
    spec = parse_group_spec(ns.group)
    use_float = ns.float or ns.n > EXACT_FPP_LIMIT
    if use_float and not ns.float:
        print(f"# n={ns.n} > {EXACT_FPP_LIMIT}: switching to the float path", file=sys.stderr)
    if use_float:
        values = iterate_fpp_float(spec, ns.n)
        rows = [(i + 1, "-", f"{v:.10f}") for i, v in enumerate(values)]
        payload = [{"n": i + 1, "decimal": v} for i, v in enumerate(values)]
    else:
        values = iterate_fpp(spec, ns.n)
        rows = [(i + 1, _fmt_frac(v), f"{float(v):.10f}") for i, v in enumerate(values)]
        payload = [
            {"n": i + 1, "exact": _fmt_frac(v), "decimal": float(v)}
            for i, v in enumerate(values)
        ]
    if ns.format == "json":
        _print_json({"group": render_spectrum(spec), "fpp": payload})
    else:
        print(f"# group {render_spectrum(spec)}, order {spec.order}, "
              f"transitive {spec.transitive}")
        print(_table(("n", "fpp", "decimal"), rows))
    if ns.plot:
        from .plots import plot_fpp_decay

        out = plot_fpp_decay(values, ns.plot, label=f"FPP of [{ns.group}]^n")
        print(f"# figure written to {out}")


def _cmd_bounds(ns):
    genus = ns.genus
    derived = None
    if genus is None:
        if ns.order is None or ns.n is None or ns.degree is None:
            raise PercensusError("--genus or all of --order/--n/--degree are required")
        genus = bnd.genus_bound(ns.order, ns.n, ns.degree)
        derived = genus
    if ns.degree is not None and ns.q <= ns.degree:
        raise PercensusError("bound reporting needs q > degree (tame ramification)")
    inputs = bnd.BoundInputs(
        q=ns.q, genus=genus, ratio=Fraction(ns.ratio), order=ns.order or 1,
        ramified=ns.ramified, n=ns.n or 1, degree=ns.degree or 2,
        fpp=Fraction(ns.fpp),
    )
    lo, hi = bnd.ms_interval(inputs)
    lo_s, hi_s = bnd.ms_interval(inputs, sqrt_q_variant=True)
    prop = bnd.proportion_bound(ns.q, Fraction(ns.fpp), ns.order or 1, genus, ns.ramified)
    rows = [
        ("frobenius-class count interval", f"[{_fmt_frac(lo)}, {_fmt_frac(hi)}]",
         f"[{float(lo):.4f}, {float(hi):.4f}]"),
        ("sqrt(q)-weighted variant", "-", f"[{lo_s:.4f}, {hi_s:.4f}]"),
        ("proportion bound", _fmt_frac(prop),
         f"{float(prop):.6f}" + (" (vacuous)" if bnd.is_vacuous(prop) else "")),
    ]
    if derived is not None:
        rows.insert(0, ("genus bound |G|*n*(2d-2)", str(derived), ""))
    payload = {
        "interval": [lo, hi],
        "interval_sqrt_q": [lo_s, hi_s],
        "genus": genus,
        "proportion_bound": prop,
        "vacuous": bnd.is_vacuous(prop),
    }
    if ns.delta is not None:
        m_delta = bnd.min_prime_for(Fraction(ns.delta), ns.order or 1, genus, ns.ramified)
        rows.append((f"threshold q for delta={ns.delta}", str(m_delta), ""))
        payload["min_prime"] = m_delta
    if ns.format == "json":
        _print_json(payload)
    else:
        print(_table(("quantity", "exact", "decimal"), rows))


def _poly_str_t(f) -> str:
    from .maps import poly_str

    return poly_str(f).replace("x", "t")


def _cmd_disc(ns):
    rmap = parse_map(ns.map)
    rep = discriminant_iterate(rmap, ns.n)
    ram = ramified_primes(rmap, ns.n)
    if ns.format == "json":
        _print_json(
            {
                "map": render_map(rmap),
                "n": ns.n,
                "monic_discriminant_t": _poly_str_t(rep.monic_poly),
                "constant": rep.constant,
                "product_factors": rep.product_factors,
                "product_agrees": rep.product_agrees,
                "product_constant": rep.product_constant,
                "lc_power_removed": rep.lc_power_removed,
                "ramified_values": ram.values,
                "irrational_batches": len(ram.irrational),
                "excluded_infinity": ram.excluded_infinity,
            }
        )
        return
    print(f"# map {render_map(rmap)}, iterate n={ns.n}")
    print(f"discriminant (monic in t): {_poly_str_t(rep.monic_poly)}")
    print(f"extracted constant:        {rep.constant}")
    if rep.product_factors is not None:
        factors = " * ".join(f"({v} - t)^{e}" for v, e in rep.product_factors)
        status = "agrees" if rep.product_agrees else "DISAGREES"
        print(f"critical-orbit product:    {factors}  [{status}]")
        if rep.product_agrees:
            print(f"product constant:          {rep.product_constant} "
                  f"(leading-coefficient power removed: {rep.lc_power_removed})")
    else:
        print("critical-orbit product:    skipped (irrational critical points)")
    if ram.values:
        vals = ", ".join(f"t={v} (exp {e})" for v, e in ram.values)
        print(f"ramified specializations:  {vals}")
    if ram.irrational:
        print(f"unresolved irrational critical batches: {len(ram.irrational)} "
              "(reported by residual factor)")
    if ram.excluded_infinity:
        print("note: a critical orbit passed through infinity; those values are excluded")


def _parse_points(text: str):
    pts = []
    for part in text.split(","):
        part = part.strip()
        if part in ("inf", "oo", "infinity"):
            pts.append(INFINITY)
        else:
            pts.append(Fraction(part))
    return pts


def _cmd_collide(ns):
    rmap = parse_map(ns.map)
    mod_primes = [int(x) for x in ns.mod_primes.split(",")] if ns.mod_primes else []
    report = None
    if ns.points:
        points = _parse_points(ns.points)
        report = collision_test(rmap, ns.depth, points)
    else:
        try:
            points = default_collision_points(rmap)
            report = collision_test(rmap, ns.depth, points)
        except UnsupportedPointError as exc:
            if not mod_primes:
                raise PercensusError(
                    f"{exc}; pass --mod-primes to gather modular evidence"
                ) from exc
    mod_report = collision_test_mod(rmap, ns.depth, mod_primes) if mod_primes else None
    if ns.format == "json":
        payload = {"map": render_map(rmap), "depth": ns.depth}
        if report is not None:
            payload["holds"] = report.holds
            payload["violation"] = report.violation
            payload["orbits"] = {
                str(pt): [str(v) for v in orbit]
                for pt, orbit in zip(report.points, report.orbits)
            }
        if mod_report is not None:
            payload["modular_verdict"] = mod_report.verdict
            payload["modular_depth_pairs"] = {
                str(p): list(v) for p, v in mod_report.per_prime.items()
            }
            payload["modular_persistent"] = list(mod_report.persistent)
            payload["modular_skipped"] = mod_report.skipped
        _print_json(payload)
        return
    print(f"# map {render_map(rmap)}, depth N={ns.depth}")
    if report is not None:
        for pt, orbit in zip(report.points, report.orbits):
            print(f"orbit of {pt}: " + ", ".join(str(v) for v in orbit))
        if report.holds:
            print("verdict: holds (no orbit collision among tracked points)")
        else:
            a, b, m_, n_ = report.violation
            print(f"verdict: violation at phi^{m_}({a}) = phi^{n_}({b})")
    if mod_report is not None:
        print(f"modular evidence: {mod_report.verdict}")
        for p, pairs in sorted(mod_report.per_prime.items()):
            shown = " ".join(f"({a},{b})" for a, b in pairs) or "none"
            line = f"  p={p}: colliding depth pairs {shown}"
            if p in mod_report.examples:
                a, b, m_, n_ = mod_report.examples[p]
                line += f"; e.g. phi^{m_}({a}) = phi^{n_}({b}) mod {p}"
            print(line)
        for p, reason in sorted(mod_report.skipped.items()):
            print(f"  p={p}: skipped ({reason})")


def _cmd_frob(ns):
    rmap = parse_map(ns.map)
    if not is_prime(ns.p):
        raise PercensusError(f"{ns.p} is not prime")
    if not rmap.good_reduction(ns.p):
        raise PercensusError(f"bad reduction at p={ns.p}")
    if ns.a is not None:
        sample = frobenius_cycle_type(rmap, ns.p, ns.n, ns.a)
        if ns.format == "json":
            _print_json(
                {
                    "a": sample.a,
                    "ramified": sample.ramified,
                    "degrees": sample.degrees,
                    "linear_count": sample.linear_count,
                }
            )
        elif sample.ramified:
            print(f"a={sample.a}: ramified specialization")
        else:
            degs = ", ".join(f"{d}^{c}" for d, c in sample.degrees)
            print(f"a={sample.a}: cycle type {degs}, rational preimages {sample.linear_count}")
        return
    report = empirical_fpp(rmap, ns.p, ns.n, sample_size=ns.sample, seed=ns.seed)
    comparison = None
    if ns.group:
        comparison = compare_to_prediction(report, parse_group_spec(ns.group))
    if ns.format == "json":
        payload = {
            "map": render_map(rmap),
            "p": report.p,
            "n": report.n,
            "total": report.total,
            "ramified": list(report.ramified),
            "histogram": dict(report.histogram),
            "empirical_fpp": report.fpp,
            "image_proportion": report.image_proportion,
            "within_image_slack": report.within_image_slack,
            "sampled": report.sampled,
            "warning": report.warning,
        }
        if comparison is not None:
            payload["tv_distance"] = comparison.tv_distance
        _print_json(payload)
    else:
        print(f"# map {render_map(rmap)}, p={report.p}, n={report.n}"
              + (f" (sampled {report.total}, seed {report.seed})" if report.sampled else ""))
        rows = [(k, c) for k, c in report.histogram]
        print(_table(("rational_preimages", "count"), rows))
        print(f"ramified specializations: {len(report.ramified)}"
              + (f" at a in {list(report.ramified)}" if len(report.ramified) <= 12 else ""))
        print(f"empirical fpp: {_fmt_frac(report.fpp)} = {float(report.fpp):.6f}")
        if report.image_proportion is not None:
            print(f"image proportion: {_fmt_frac(report.image_proportion)} = "
                  f"{float(report.image_proportion):.6f} "
                  f"(within slack: {report.within_image_slack})")
        if comparison is not None:
            print(f"tv distance vs prediction: {comparison.tv_float:.6f}")
        if report.warning:
            print(f"warning: {report.warning}")
    if ns.plot and comparison is not None:
        from .plots import plot_frobenius_histogram

        out = plot_frobenius_histogram(
            comparison, ns.plot, title=f"p={ns.p}, n={ns.n}"
        )
        print(f"# figure written to {out}")


def _cmd_factor(ns):
    poly = parse_polynomial(ns.poly)
    if not is_prime(ns.p):
        raise PercensusError(f"{ns.p} is not prime")
    f = poly_mod_p(poly, ns.p)
    degs = distinct_degree_factor(f)
    if ns.format == "json":
        _print_json({"poly": ns.poly, "p": ns.p, "degrees": degs})
    else:
        print(f"# {ns.poly} mod {ns.p}")
        print(_table(("factor_degree", "count"), sorted(degs.items())))


def _cmd_collide_preperiodic(ns):
    verdict = preperiodic_unicritical(ns.degree, Fraction(ns.c))
    if ns.format == "json":
        _print_json({"d": ns.degree, "c": Fraction(ns.c), "preperiodic": verdict})
    else:
        word = "preperiodic" if verdict else "not preperiodic (escapes)"
        print(f"0 is {word} under x^{ns.degree} + ({ns.c})")


def _cmd_report(ns):
    from .plots import plot_class_breakdown, plot_proportions

    store = ResultsStore(ns.results)
    records = store.load()
    if not records:
        raise PercensusError(f"no records found in {ns.results}")
    outdir = Path(ns.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    prefix = ns.prefix or "report"
    csv_path = outdir / f"{prefix}_records.csv"
    with csv_path.open("w") as fh:
        fh.write(SweepRecord.csv_header() + "\n")
        for rec in records:
            fh.write(rec.to_csv_row() + "\n")
    written = [csv_path]
    title = records[0].map_text if records else ""
    fig = plot_proportions(records, outdir / f"{prefix}_proportions.png",
                           title=title, hline=ns.hline)
    written.append(fig)
    cls = plot_class_breakdown(records, outdir / f"{prefix}_classes.png", title=title)
    if cls is not None:
        written.append(cls)
    s = summarize(records)
    if s.good:
        print(f"# {s.good} good-reduction records for {title}")
        print(f"# proportion min {_fmt_frac(s.min_proportion)} at p={s.argmin_prime}, "
              f"mean {float(s.mean_proportion):.6f}")
    for path in written:
        print(f"wrote {path}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="percensus",
        description="Census of periodic points of rational maps over P^1(F_p), "
        "wreath-product fixed-point statistics, and effective Chebotarev bounds.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="census a map over a range of primes")
    _add_sweep_flags(sp, need_map=True)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("preset", help="run a named preset experiment")
    sp.add_argument("name", help="powering-<d>, chebyshev-<d>, chebyshev-composite, "
                                 "unicritical-generic, lattes2-<a>-<b>")
    sp.add_argument("--depth", type=int, default=3,
                    help="congruence depth r for powering presets (filter mod d^r)")
    _add_sweep_flags(sp, need_map=False)
    sp.set_defaults(func=_cmd_preset)

    sp = sub.add_parser("fpp", help="exact wreath-power fixed-point proportions")
    sp.add_argument("group", help='group spec: "S:2", "C:4", or "d=3;0:2,1:3,3:1"')
    sp.add_argument("n", type=int, help="depth")
    sp.add_argument("--float", action="store_true", help="use the float path")
    sp.add_argument("--plot", help="write a decay figure to this path")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_fpp)

    sp = sub.add_parser("bounds", help="effective Chebotarev bound calculators")
    sp.add_argument("--q", type=int, required=True, help="residue field size")
    sp.add_argument("--ratio", default="1", help="#C/#G as a fraction")
    sp.add_argument("--order", type=int, help="group order #G_n")
    sp.add_argument("--genus", type=int, help="genus (else derived from order/n/degree)")
    sp.add_argument("--n", type=int, help="iterate depth (for the genus bound)")
    sp.add_argument("--degree", type=int, help="map degree (for the genus bound)")
    sp.add_argument("--ramified", type=int, default=0, help="#R ramified primes")
    sp.add_argument("--fpp", default="0", help="FPP(G_n) as a fraction")
    sp.add_argument("--delta", help="report the threshold prime for this delta")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("disc", help="iterate discriminant and ramified values")
    sp.add_argument("--map", required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_disc)

    sp = sub.add_parser("collide", help="critical-orbit collision test")
    sp.add_argument("--map", required=True)
    sp.add_argument("--depth", type=int, default=8, metavar="N")
    sp.add_argument("--points", help='comma list, e.g. "0,1/2,inf" '
                                     "(default: finite rational critical points)")
    sp.add_argument("--mod-primes", help="comma list of primes for modular evidence")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_collide)

    sp = sub.add_parser("preperiodic", help="is 0 preperiodic under x^d + c?")
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--c", required=True, help="parameter c as a fraction")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_collide_preperiodic)

    sp = sub.add_parser("frob", help="Frobenius cycle types over specializations")
    sp.add_argument("--map", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--a", type=int, help="single specialization t=a")
    sp.add_argument("--sample", type=int, help="sample size (default exhaustive)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--group", help="group spec for the wreath prediction")
    sp.add_argument("--plot", help="write the histogram figure to this path")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_frob)

    sp = sub.add_parser("factor", help="distinct-degree factorization mod p")
    sp.add_argument("--poly", required=True, help="polynomial expression")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=_cmd_factor)

    sp = sub.add_parser("report", help="render figures + CSV from a results store")
    sp.add_argument("--results", required=True, help="JSON-lines store from sweep --out")
    sp.add_argument("--outdir", default=".", help="directory for figures and CSV")
    sp.add_argument("--prefix", help="output filename prefix (default: report)")
    sp.add_argument("--hline", type=float, help="draw a predicted horizontal line")
    sp.set_defaults(func=_cmd_report)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        ns.func(ns)
    except PercensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
