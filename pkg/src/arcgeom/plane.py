"""Points, lines and incidence in PG(2, q^6).

Points and lines are triples of field ints normalised so that the first
nonzero coordinate is 1; that makes them hashable and directly comparable.
The text form is ``x:y:z`` with hex coordinates.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

from .fieldtower import FieldCtx


class EqualPoints(ValueError):
    pass


class ZeroTriple(ValueError):
    pass


class ProjPoint(NamedTuple):
    x: int
    y: int
    z: int


class ProjLine(NamedTuple):
    u: int
    v: int
    w: int


def normalize(ctx: FieldCtx, t):
    for c in t:
        if c:
            inv = ctx.inv(c)
            return tuple(ctx.mul(inv, e) for e in t)
    raise ZeroTriple(t)


def point(ctx: FieldCtx, x: int, y: int, z: int = 1) -> ProjPoint:
    return ProjPoint(*normalize(ctx, (x, y, z)))


def line(ctx: FieldCtx, u: int, v: int, w: int) -> ProjLine:
    return ProjLine(*normalize(ctx, (u, v, w)))


def affine_line(ctx: FieldCtx, m: int, a: int, b: int) -> ProjLine:
    """Y = m(X - a) + b as (m : -1 : b - m a)."""
    return line(ctx, m, ctx.neg(1), ctx.sub(b, ctx.mul(m, a)))


LINE_AT_INFINITY = ProjLine(0, 0, 1)


def incident(ctx: FieldCtx, P, L) -> bool:
    return ctx.sum([ctx.mul(P[0], L[0]), ctx.mul(P[1], L[1]), ctx.mul(P[2], L[2])]) == 0


def cross(ctx: FieldCtx, P, Q):
    return (
        ctx.sub(ctx.mul(P[1], Q[2]), ctx.mul(P[2], Q[1])),
        ctx.sub(ctx.mul(P[2], Q[0]), ctx.mul(P[0], Q[2])),
        ctx.sub(ctx.mul(P[0], Q[1]), ctx.mul(P[1], Q[0])),
    )


def line_through(ctx: FieldCtx, P: ProjPoint, Q: ProjPoint) -> ProjLine:
    P, Q = normalize(ctx, P), normalize(ctx, Q)
    if P == Q:
        raise EqualPoints(P)
    return ProjLine(*normalize(ctx, cross(ctx, P, Q)))


def meet(ctx: FieldCtx, L: ProjLine, M: ProjLine) -> ProjPoint:
    L, M = normalize(ctx, L), normalize(ctx, M)
    if L == M:
        raise EqualPoints(L)
    return ProjPoint(*normalize(ctx, cross(ctx, L, M)))


def _kernel_pair(ctx: FieldCtx, t):
    """Two independent solutions of t . x = 0."""
    u, v, w = normalize(ctx, t)
    if u:
        return (ctx.neg(v), 1, 0), (ctx.neg(w), 0, 1)
    if v:
        return (1, 0, 0), (0, ctx.neg(w), 1)
    return (1, 0, 0), (0, 1, 0)


def _pencil(ctx: FieldCtx, t) -> list[tuple]:
    r, s = _kernel_pair(ctx, t)
    out = {normalize(ctx, s)}
    for k in range(ctx.order):
        out.add(normalize(ctx, tuple(ctx.add(ri, ctx.mul(k, si)) for ri, si in zip(r, s))))
    return sorted(out)


def points_on(ctx: FieldCtx, L: ProjLine) -> Iterator[ProjPoint]:
    """The q^6 + 1 points of L, in lexicographic order."""
    for t in _pencil(ctx, L):
        yield ProjPoint(*t)


def lines_through(ctx: FieldCtx, P: ProjPoint) -> Iterator[ProjLine]:
    """The q^6 + 1 lines through P, in lexicographic order."""
    for t in _pencil(ctx, P):
        yield ProjLine(*t)


def all_points(ctx: FieldCtx) -> Iterator[ProjPoint]:
    n = ctx.order
    yield ProjPoint(0, 0, 1)
    for y in range(n):
        yield ProjPoint(0, 1, y)
    for y in range(n):
        for z in range(n):
            yield ProjPoint(1, y, z)


def num_points(ctx: FieldCtx) -> int:
    return ctx.order ** 2 + ctx.order + 1


def fmt(ctx: FieldCtx, t) -> str:
    return ":".join(ctx.to_hex(c) for c in t)


def parse(ctx: FieldCtx, text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected x:y:z, got {text!r}")
    return normalize(ctx, tuple(ctx.from_hex(p) for p in parts))
