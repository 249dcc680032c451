"""Figure rendering for the report path (headless matplotlib, files only)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def plot_proportions(records, path, title: str = "", hline: float | None = None) -> Path:
    """Scatter of periodic proportion vs p with the running-liminf trace."""
    good = sorted(
        (r for r in records if r.good_reduction and r.proportion is not None),
        key=lambda r: r.p,
    )
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))
    xs = [r.p for r in good]
    ys = [float(r.proportion) for r in good]
    ax.scatter(xs, ys, s=6, alpha=0.5, label="#Per / (p+1)")
    if good:
        suffix = []
        cur = None
        for r in reversed(good):
            v = float(r.proportion)
            cur = v if cur is None else min(cur, v)
            suffix.append(cur)
        suffix.reverse()
        ax.step(xs, suffix, where="post", color="crimson", lw=1.5, label="min over p' >= p")
    if hline is not None:
        ax.axhline(hline, color="gray", ls="--", lw=1, label=f"predicted {hline:g}")
    ax.set_xlabel("p")
    ax.set_ylabel("periodic proportion")
    ax.set_ylim(bottom=0)
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_class_breakdown(records, path, title: str = "") -> Path | None:
    """Proportion scatter split by annotated congruence class; None if no
    classes are annotated or there are too many to read."""
    good = [r for r in records if r.good_reduction and r.proportion is not None]
    classes: dict[tuple[int, int], list] = {}
    for r in good:
        for m, res in r.mod_classes:
            classes.setdefault((m, res), []).append(r)
    if not classes or len(classes) > 16:
        return None
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))
    for (m, res), rs in sorted(classes.items()):
        rs.sort(key=lambda r: r.p)
        ax.scatter(
            [r.p for r in rs],
            [float(r.proportion) for r in rs],
            s=8,
            alpha=0.6,
            label=f"p = {res} (mod {m})",
        )
    ax.set_xlabel("p")
    ax.set_ylabel("periodic proportion")
    ax.set_ylim(bottom=0)
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_fpp_decay(values, path, label: str = "FPP", guide: bool = True) -> Path:
    """Wreath-power FPP sequence vs depth, with a 2/n guide curve."""
    path = Path(path)
    ns = list(range(1, len(values) + 1))
    ys = [float(v) for v in values]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, ys, "o-", ms=3, lw=1, label=label)
    if guide and len(ns) >= 4:
        ax.plot(ns, [2 / n for n in ns], ls=":", color="gray", lw=1, label="2/n")
    ax.set_xlabel("depth n")
    ax.set_ylabel("fixed-point proportion")
    ax.set_yscale("log")
    ax.set_xscale("log")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3, which="both")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_frobenius_histogram(comparison, path, title: str = "") -> Path:
    """Observed linear-factor counts vs the predicted fix-count distribution."""
    path = Path(path)
    emp = dict(comparison.empirical)
    pred = dict(comparison.predicted)
    keys = sorted(set(emp) | set(pred))
    width = 0.4
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar(
        [k - width / 2 for k in keys],
        [float(emp.get(k, 0)) for k in keys],
        width=width,
        label="observed",
    )
    ax.bar(
        [k + width / 2 for k in keys],
        [float(pred.get(k, 0)) for k in keys],
        width=width,
        label="predicted",
    )
    ax.set_xlabel("rational points on the fiber")
    ax.set_ylabel("frequency")
    ax.set_title(title or f"TV distance {comparison.tv_float:.4f}")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3, axis="y")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
