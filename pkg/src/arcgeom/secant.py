"""The intersection polynomial of a line Y = m(X - a) + b with the curve.

Substituting the line into X^{q+1} = Y^q + Y gives

    f(X) = X^{q+1} - m^q X^q - m X - (m t + m^q t^q + gamma),   gamma = b + b^q,

with t = -a, whose roots in GF(q^6) are the x-coordinates of the affine
intersections.  Every closed form built on f (the degeneracy quantity, the
Frobenius chain, the six-variable polynomials, the cubic of the GF(q^2)
branch) is written in the parameter t; :func:`param` is the single place
where a point's x-coordinate becomes t.  In characteristic 2, t = a.

Vertical lines have no slope and are left to the oracle.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import polys
from .fieldtower import FieldCtx, gamma_of


class SecantQuery(NamedTuple):
    a: int
    b: int
    m: int


def param(ctx: FieldCtx, a):
    """t = -a, the parameter the closed forms are written in."""
    return ctx.vneg(np.asarray(a, dtype=np.int64)) if np.ndim(a) else ctx.neg(int(a))


def build_f(ctx: FieldCtx, sq: SecantQuery) -> list[int]:
    """Coefficients of f, lowest degree first (length q+2, monic)."""
    q = ctx.q
    a, b, m = sq
    a = param(ctx, a)
    mq = ctx.frob(m)
    const = ctx.sum([ctx.mul(m, a), ctx.mul(mq, ctx.frob(a)), gamma_of(ctx, b)])
    f = [0] * (q + 2)
    f[q + 1] = 1
    f[q] = ctx.neg(mq)
    f[1] = ctx.add(f[1], ctx.neg(m))
    f[0] = ctx.neg(const)
    return f


def line_residual(ctx: FieldCtx, sq: SecantQuery, x: int) -> int:
    """x^{q+1} - y^q - y with y = m(x - a) + b."""
    a, b, m = sq
    y = ctx.add(ctx.mul(m, ctx.sub(x, a)), b)
    return ctx.sub(ctx.pow(x, ctx.q + 1), ctx.add(ctx.frob(y), y))


def degeneracy(ctx: FieldCtx, sq: SecantQuery) -> int:
    """D = m^{q+1} + m^q t^q + m t + gamma; D = 0 iff f = (X - m^q)(X^q - m)."""
    a, b, m = sq
    a = param(ctx, a)
    mq = ctx.frob(m)
    return ctx.sum([ctx.mul(mq, m), ctx.mul(mq, ctx.frob(a)), ctx.mul(m, a), gamma_of(ctx, b)])


def v_degeneracy(ctx: FieldCtx, a, b, m):
    a, b, m = (np.asarray(v, dtype=np.int64) for v in (a, b, m))
    a = param(ctx, a)
    mq = ctx.vfrob(m)
    lin = ctx.vadd(ctx.vmul(mq, ctx.vfrob(a)), ctx.vmul(m, a))
    return ctx.vadd(ctx.vadd(ctx.vmul(mq, m), lin), ctx.vadd(b, ctx.vfrob(b)))


def split_form(ctx: FieldCtx, m: int) -> list[int]:
    """(X - m^q)(X^q - m) expanded."""
    q = ctx.q
    lin = [ctx.neg(ctx.frob(m)), 1]
    qpart = [0] * (q + 1)
    qpart[0] = ctx.neg(m)
    qpart[q] = 1
    return polys.pmul(ctx, lin, qpart)


def derivative(ctx: FieldCtx, f: list[int]) -> list[int]:
    return polys.trim([ctx.smul(i, c) for i, c in enumerate(f)][1:])


def _roots_exhaustive(ctx: FieldCtx, f: list[int]) -> int:
    vals = polys.vpeval(ctx, f, ctx.elements())
    return int(np.count_nonzero(vals == 0))


def _roots_gcd(ctx: FieldCtx, f: list[int]) -> int:
    f = polys.trim(f)
    d = len(f) - 1
    if d <= 0:
        return 0
    q = ctx.q
    # X^{iq} mod f for i < d, so that g^q = sum c_i^q X^{iq} reduces quickly
    xq = polys.pmod(ctx, [0] * q + [1], f)
    powers = [[1]]
    for _ in range(1, d):
        powers.append(polys.pmod(ctx, polys.pmul(ctx, powers[-1], xq), f))
    g = polys.pmod(ctx, [0, 1], f)
    for _ in range(6):
        acc: list[int] = []
        for i, c in enumerate(g):
            if c:
                acc = polys.padd(ctx, acc, [ctx.mul(ctx.frob(c), t) for t in powers[i]])
        g = acc
    h = polys.psub(ctx, g, [0, 1])
    return polys.deg(polys.pgcd(ctx, f, h)) if h else d


def count_rational_roots(ctx: FieldCtx, f: list[int], method: str = "gcd") -> int:
    """Number of distinct roots of f in GF(q^6).

    ``method`` is ``"gcd"`` (degree of gcd(f, X^{q^6} - X)) or ``"exhaustive"``.
    """
    if method == "exhaustive":
        return _roots_exhaustive(ctx, f)
    if method == "gcd":
        return _roots_gcd(ctx, f)
    raise ValueError(method)


def is_full_secant(ctx: FieldCtx, sq: SecantQuery, method: str = "gcd") -> bool:
    # the split form (X - m^q)(X^q - m) has at most two distinct roots, since
    # X^q - m is a q-th power; counting distinct roots covers both cases
    return count_rational_roots(ctx, build_f(ctx, sq), method) == ctx.q + 1


def v_root_counts(ctx: FieldCtx, a: int, b: int, m=None, chunk: int = 1 << 20):
    """Distinct-root counts of f for every slope in ``m`` (default: all)."""
    m = ctx.elements() if m is None else np.asarray(m, dtype=np.int64)
    a = param(ctx, a)
    x = ctx.elements()
    xq = ctx.vfrob(x)[None, :]
    xq1 = ctx.vmul(x, xq)  # x^{q+1}
    step = max(1, chunk // len(x))
    out = np.empty(len(m), dtype=np.int64)
    for s in range(0, len(m), step):
        mm = m[s:s + step, None]
        mq = ctx.vfrob(mm)
        const = ctx.vadd(ctx.vadd(ctx.vmul(mm, a), ctx.vmul(mq, ctx.frob(a))), gamma_of(ctx, b))
        val = ctx.vsub(xq1, ctx.vmul(mq, xq))
        val = ctx.vsub(val, ctx.vmul(mm, x[None, :]))
        val = ctx.vsub(val, const)
        out[s:s + step] = np.count_nonzero(val == 0, axis=1)
    return out


def full_secant_slopes(ctx: FieldCtx, a: int, b: int) -> set[int]:
    counts = v_root_counts(ctx, a, b)
    return set(np.nonzero(counts == ctx.q + 1)[0].tolist())
