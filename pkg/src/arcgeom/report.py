"""Report files: JSON, CSV and matplotlib figures."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import bounds  # noqa: E402
from .oracle import Oracle  # noqa: E402


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    return buf.getvalue()


def check_rows(results: list[dict]) -> list[dict]:
    """One row per check of every suite result (as produced by ``to_dict``)."""
    rows = []
    for res in results:
        for c in res["checks"]:
            rows.append({"suite": res["suite"], "q": res["q"], "check": c["name"],
                         "passed": c["passed"], "informational": c["informational"],
                         "total": c["total"], "failures": c["failures"]})
    return rows


def secant_count_distribution(orc: Oracle) -> dict[str, dict[int, int]]:
    """How many (q+1)-secants pass through each affine point, split by on/off curve."""
    ctx = orc.ctx
    q = ctx.q
    N = ctx.order
    full = orc.nonvert == q + 1
    vert = (orc.vert + 1) == q + 1
    on = np.zeros((N, N), dtype=bool)
    on[orc.pts.xs, orc.pts.ys] = True
    els = ctx.elements()
    counts = np.zeros((N, N), dtype=np.int64)
    for a in range(N):
        c = ctx.vsub(els[:, None], ctx.vmul(els[None, :], a))     # c[b, m]
        counts[a] = full[els[None, :], c].sum(axis=1) + vert[a]
    out = {}
    for name, mask in (("on_curve", on), ("off_curve", ~on)):
        vals, cnt = np.unique(counts[mask], return_counts=True)
        out[name] = dict(zip(vals.tolist(), cnt.tolist()))
    return out


def plot_spectrum(hist: dict[int, int], q: int, path: Path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    keys = sorted(hist)
    ax.bar([str(k) for k in keys], [hist[k] for k in keys], color="tab:blue")
    ax.set_xlabel("|line ∩ H|")
    ax.set_ylabel("lines")
    ax.set_yscale("log")
    ax.set_title(f"character spectrum, q = {q}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_secant_counts(dist: dict[str, dict[int, int]], q: int, path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for name, d in dist.items():
        ks = sorted(d)
        ax.plot(ks, [d[k] for k in ks], marker="o", label=name.replace("_", " "))
    ax.set_xlabel(f"({q}+1)-secants through the point")
    ax.set_ylabel("affine points")
    ax.set_yscale("log")
    ax.legend()
    ax.set_title(f"secant counts, q = {q}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_bounds(path: Path, q_star: int | None = None) -> None:
    """ultimosez1_lower(q) / q^3 on a log grid, with the sign change marked."""
    qs = np.unique(np.logspace(0.31, 9.5, 200).astype(np.int64))
    vals = [bounds.ultimosez1_lower(int(q)).approx() / float(q) ** 3 for q in qs]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(qs, vals)
    ax.axhline(0, color="grey", lw=0.8)
    if q_star:
        ax.axvline(q_star, color="tab:red", ls="--", label=f"q* = {q_star}")
        ax.legend()
    ax.set_xscale("log")
    ax.set_yscale("symlog", linthresh=1)
    ax.set_xlabel("q")
    ax.set_ylabel("lower bound / q^3")
    ax.set_title("secant-count lower bound")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_verify_report(out_dir, results: list[dict], orc: Oracle | None = None,
                        spectrum: dict[int, int] | None = None) -> list[str]:
    """Write verify.json, verify.csv and the figures; returns the file names."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    (out / "verify.json").write_text(dumps(results))
    (out / "verify.csv").write_text(to_csv(check_rows(results)))
    written += ["verify.json", "verify.csv"]
    q = results[0]["q"] if results else None
    if spectrum:
        plot_spectrum(spectrum, q, out / "spectrum.png")
        written.append("spectrum.png")
    if orc is not None:
        dist = secant_count_distribution(orc)
        (out / "secant_counts.json").write_text(
            dumps({k: {str(c): n for c, n in v.items()} for k, v in dist.items()}))
        plot_secant_counts(dist, orc.ctx.q, out / "secant_counts.png")
        written += ["secant_counts.json", "secant_counts.png"]
    golden = bounds.load_golden()
    plot_bounds(out / "bounds.png", golden["q_star"])
    written.append("bounds.png")
    return written
