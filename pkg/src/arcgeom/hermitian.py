"""The Hermitian curve X^{q+1} = Y^q + Y over GF(q^6).

Homogenised, the curve is X^{q+1} = Y^q Z + Y Z^q; on Z = 0 this forces X = 0,
so (0:1:0) is the only point at infinity.
"""
from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import plane, polys
from .fieldtower import FieldCtx

CACHE_MAGIC = b"ARCHQ\x01"
CACHE_ENV = "ARCGEOM_CACHE"


class CountMismatch(AssertionError):
    pass


class CharacterViolation(AssertionError):
    def __init__(self, line, size):
        super().__init__(f"line {line} meets the curve in {size} points")
        self.line = line
        self.size = size


class BudgetExceeded(RuntimeError):
    pass


INFINITE_POINT = plane.ProjPoint(0, 1, 0)


def expected_count(q: int) -> int:
    return q ** 6 + 1 + q * (q - 1) * q ** 3


@dataclass(frozen=True, eq=False)
class CurvePointSet:
    q: int
    xs: np.ndarray          # affine x-coordinates
    ys: np.ndarray          # matching y-coordinates

    @property
    def count(self) -> int:
        return len(self.xs) + 1

    def affine(self) -> set[tuple[int, int]]:
        return set(zip(self.xs.tolist(), self.ys.tolist()))

    def projective(self) -> set[plane.ProjPoint]:
        out = {plane.ProjPoint(x, y, 1) for x, y in zip(self.xs.tolist(), self.ys.tolist())}
        out.add(INFINITE_POINT)
        return out


def trace_map_matrix(ctx: FieldCtx) -> np.ndarray:
    """Matrix over GF(p) of the linear map y -> y^q + y."""
    return (ctx.frobenius_matrix + np.eye(ctx.n, dtype=np.int64)) % ctx.p


def _digits(ctx: FieldCtx, v: np.ndarray) -> np.ndarray:
    return (v[:, None] // ctx._powers[None, :]) % ctx.p


def enumerate_curve(ctx: FieldCtx, cache_dir: str | os.PathLike | None = None) -> CurvePointSet:
    """All affine points, solving y^q + y = x^{q+1} by linear algebra over GF(p)."""
    ctx._need_tables()
    path = _cache_path(ctx, cache_dir)
    if path is not None and path.exists():
        cached = load_cache(ctx, path)
        if cached is not None:
            return cached
    T = trace_map_matrix(ctx)
    S, C = polys.solver_mod_p(T, ctx.p)
    K = polys.kernel_mod_p(T, ctx.p)
    x = ctx.elements()
    rhs = _digits(ctx, ctx.vpow(x, ctx.q + 1))
    solvable = np.all((rhs @ C.T) % ctx.p == 0, axis=1) if C.size else np.ones(len(x), bool)
    part = ((rhs[solvable] @ S.T) % ctx.p) @ ctx._powers
    # every combination of kernel vectors
    kdim = K.shape[0]
    combos = np.array(np.meshgrid(*[np.arange(ctx.p)] * kdim, indexing="ij")).reshape(kdim, -1).T
    kern = ((combos @ K) % ctx.p) @ ctx._powers
    xs = np.repeat(x[solvable], len(kern))
    ys = ctx.vadd(part[:, None], kern[None, :]).ravel()
    order = np.lexsort((ys, xs))
    pts = CurvePointSet(ctx.q, xs[order], ys[order])
    if pts.count != expected_count(ctx.q):
        raise CountMismatch(f"{pts.count} != {expected_count(ctx.q)}")
    if path is not None:
        save_cache(ctx, path, pts)
    return pts


def enumerate_curve_bruteforce(ctx: FieldCtx) -> CurvePointSet:
    """Reference enumeration: tabulate y^q + y for every y and match."""
    y = ctx.elements()
    t = ctx.vadd(ctx.vfrob(y), y)
    x = ctx.elements()
    xq1 = ctx.vpow(x, ctx.q + 1)
    by_val: dict[int, list[int]] = {}
    for yy, tv in zip(y.tolist(), t.tolist()):
        by_val.setdefault(tv, []).append(yy)
    xs, ys = [], []
    for xx, v in zip(x.tolist(), xq1.tolist()):
        for yy in by_val.get(v, []):
            xs.append(xx)
            ys.append(yy)
    return CurvePointSet(ctx.q, np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64))


def on_curve(ctx: FieldCtx, P) -> bool:
    x, y, z = P
    lhs = ctx.pow(x, ctx.q + 1)
    rhs = ctx.add(ctx.mul(ctx.frob(y), z), ctx.mul(y, ctx.frob(z)))
    return lhs == rhs


# --- cache -----------------------------------------------------------------

def default_cache_dir() -> Path | None:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _cache_path(ctx: FieldCtx, cache_dir) -> Path | None:
    d = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    if d is None:
        return None
    mod = "".join(str(c) for c in ctx.modulus)
    return d / f"hermitian_p{ctx.p}_h{ctx.h}_{mod}.bin"


def save_cache(ctx: FieldCtx, path: Path, pts: CurvePointSet) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = CACHE_MAGIC + struct.pack("<III", ctx.p, ctx.h, len(ctx.modulus))
    header += struct.pack(f"<{len(ctx.modulus)}I", *ctx.modulus)
    header += struct.pack("<Q", pts.count)
    body = np.stack([pts.xs, pts.ys], axis=1).astype("<u8").tobytes()
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(header + body)
    tmp.replace(path)


def load_cache(ctx: FieldCtx, path: Path) -> CurvePointSet | None:
    """Return the cached set, or None if the file does not match ctx."""
    data = Path(path).read_bytes()
    if not data.startswith(CACHE_MAGIC):
        return None
    off = len(CACHE_MAGIC)
    p, h, k = struct.unpack_from("<III", data, off)
    off += 12
    mod = struct.unpack_from(f"<{k}I", data, off)
    off += 4 * k
    (count,) = struct.unpack_from("<Q", data, off)
    off += 8
    if (p, h, tuple(mod)) != (ctx.p, ctx.h, ctx.modulus):
        return None
    arr = np.frombuffer(data, dtype="<u8", offset=off).astype(np.int64).reshape(-1, 2)
    if len(arr) + 1 != count or count != expected_count(ctx.q):
        return None
    return CurvePointSet(ctx.q, arr[:, 0].copy(), arr[:, 1].copy())


# --- character spectrum ------------------------------------------------------

def line_counts(ctx: FieldCtx, pts: CurvePointSet) -> tuple[np.ndarray, np.ndarray]:
    """Affine intersection counts of every non-vertical and vertical line.

    Returns ``(nonvert, vert)`` with ``nonvert[m, c] = |{Y = mX + c} ∩ H|`` and
    ``vert[c]`` the number of affine points with X = c.
    """
    N = ctx.order
    nonvert = np.zeros((N, N), dtype=np.int32)
    for m in range(N):
        c = ctx.vsub(pts.ys, ctx.vmul(m, pts.xs))
        nonvert[m] = np.bincount(c, minlength=N)
    vert = np.bincount(pts.xs, minlength=N).astype(np.int32)
    return nonvert, vert


def character_spectrum(ctx: FieldCtx, pts: CurvePointSet, mode: str = "exhaustive",
                       samples: int = 0, seed: int = 0, budget: int = 729) -> dict[int, int]:
    """Histogram {intersection size: number of lines}.

    ``mode="exhaustive"`` covers every line of the plane and checks both
    double-counting identities; ``mode="sampled"`` draws ``samples`` lines.
    """
    q = ctx.q
    if mode == "exhaustive":
        if ctx.order > budget:
            raise BudgetExceeded(f"exhaustive spectrum needs q^6 <= {budget}")
        nonvert, vert = line_counts(ctx, pts)
        chars = np.concatenate([nonvert.ravel(), vert + 1, [1]])  # + line at infinity
        hist = dict(zip(*[a.tolist() for a in np.unique(chars, return_counts=True)]))
        _check_keys(ctx, hist, nonvert, vert)
        total = sum(k * v for k, v in hist.items())
        pairs = sum(k * (k - 1) // 2 * v for k, v in hist.items())
        if total != pts.count * (ctx.order + 1):
            raise AssertionError(f"incidence sum {total} != {pts.count * (ctx.order + 1)}")
        if pairs != pts.count * (pts.count - 1) // 2:
            raise AssertionError(f"pair sum {pairs} != C({pts.count}, 2)")
        return hist
    if mode == "sampled":
        from .rng import SplitMix64
        rng = SplitMix64(seed)
        affine = pts.affine()
        hist: dict[int, int] = {}
        for _ in range(samples):
            while True:
                t = (rng.below(ctx.order), rng.below(ctx.order), rng.below(ctx.order))
                if any(t):
                    break
            L = plane.line(ctx, *t)
            k = line_character(ctx, affine, L)
            if k not in (0, 1, 2, q + 1):
                raise CharacterViolation(plane.fmt(ctx, L), k)
            hist[k] = hist.get(k, 0) + 1
        return hist
    raise ValueError(mode)


def _check_keys(ctx, hist, nonvert, vert):
    q = ctx.q
    for k in hist:
        if k not in (0, 1, 2, q + 1):
            bad = np.argwhere(nonvert == k)
            if len(bad):
                m, c = bad[0].tolist()
                raise CharacterViolation(plane.fmt(ctx, plane.line(ctx, m, ctx.neg(1), c)), k)
            c = int(np.argwhere(vert + 1 == k)[0][0])
            raise CharacterViolation(plane.fmt(ctx, plane.line(ctx, 1, 0, ctx.neg(c))), k)


def line_character(ctx: FieldCtx, affine: set[tuple[int, int]], L) -> int:
    """|L ∩ H| by walking the points of L (membership only)."""
    n = 0
    for x, y, z in plane.points_on(ctx, plane.ProjLine(*L)):
        if z == 0:
            n += (x, y, z) == INFINITE_POINT
        else:
            zi = ctx.inv(z)
            n += (ctx.mul(x, zi), ctx.mul(y, zi)) in affine
    return n
