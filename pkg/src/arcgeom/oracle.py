"""Ground truth by exhaustion: line/curve incidence counted by membership only.

Nothing here touches the intersection polynomial.  For a fixed curve the
table ``nonvert[m, c] = |{Y = mX + c} ∩ H|`` is filled once by bucketing the
curve points by intercept, one slope at a time; every per-point question is
then a lookup.  :func:`bruteforce_secant_slopes_walk` answers the same
question by walking each line point by point and is used to audit the table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import hermitian, plane
from .fieldtower import FieldCtx


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Oracle:
    ctx: FieldCtx
    pts: hermitian.CurvePointSet

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        return hermitian.line_counts(self.ctx, self.pts)

    @property
    def nonvert(self) -> np.ndarray:
        return self.tables[0]

    @property
    def vert(self) -> np.ndarray:
        return self.tables[1]

    def slope_counts(self, a: int, b: int) -> np.ndarray:
        """|line ∩ H| for Y = m(X - a) + b, indexed by m."""
        ctx = self.ctx
        m = ctx.elements()
        c = ctx.vsub(b, ctx.vmul(m, a))
        return self.nonvert[m, c]

    def vertical_count(self, a: int) -> int:
        """|{X = a} ∩ H|, including the point at infinity."""
        return int(self.vert[a]) + 1


@dataclass
class SlopeVerdict:
    slopes: set[int]
    vertical: bool
    counts: dict[int, int] = field(default_factory=dict)


def bruteforce_secant_slopes(orc: Oracle, a: int, b: int) -> SlopeVerdict:
    q = orc.ctx.q
    counts = orc.slope_counts(a, b)
    if counts.max(initial=0) > q + 1:
        raise hermitian.CharacterViolation(f"slope {int(np.argmax(counts))} through ({a},{b})",
                                           int(counts.max()))
    slopes = set(np.nonzero(counts == q + 1)[0].tolist())
    return SlopeVerdict(slopes, orc.vertical_count(a) == q + 1,
                        dict(enumerate(counts.tolist())))


def bruteforce_secant_slopes_walk(ctx: FieldCtx, affine: set[tuple[int, int]], a: int, b: int) -> SlopeVerdict:
    """Same answer, counting each line by walking its points."""
    q = ctx.q
    slopes = set()
    counts = {}
    for m in range(ctx.order):
        L = plane.affine_line(ctx, m, a, b)
        k = hermitian.line_character(ctx, affine, L)
        counts[m] = k
        if k == q + 1:
            slopes.add(m)
    vert = hermitian.line_character(ctx, affine, plane.line(ctx, 1, 0, ctx.neg(a)))
    return SlopeVerdict(slopes, vert == q + 1, counts)


@dataclass
class Completeness:
    complete: bool
    strong: bool
    uncovered_outside: list[str]   # points off the curve on no full secant
    uncovered_on_curve: list[str]  # curve points on no full secant
    points_checked: int


def completeness_check(orc: Oracle, budget: int = 729, max_witnesses: int = 20) -> Completeness:
    """Is every point (outside / anywhere) on some (q+1)-secant?"""
    ctx = orc.ctx
    N = ctx.order
    if N > budget:
        raise BudgetExceeded(f"completeness sweep needs q^6 <= {budget}")
    q = ctx.q
    full = orc.nonvert == q + 1           # full[m, c]
    full_vert = (orc.vert + 1) == q + 1   # vertical X = c
    on = np.zeros((N, N), dtype=bool)
    on[orc.pts.xs, orc.pts.ys] = True
    covered = np.zeros((N, N), dtype=bool)
    xs = ctx.elements()
    for m in range(N):
        if not full[m].any():
            continue
        mx = ctx.vmul(m, xs)  # point (x, y) is on Y = mX + c with c = y - m x
        for c in np.nonzero(full[m])[0].tolist():
            covered[xs, ctx.vadd(mx, c)] = True
    covered |= full_vert[:, None]
    # points at infinity: (1:m:0) lies on every line of slope m, (0:1:0) on verticals
    inf_cov = full.any(axis=1)
    vert_inf = bool(full_vert.any())
    out_w: list[str] = []
    on_w: list[str] = []

    def note(lst, t):
        if len(lst) < max_witnesses:
            lst.append(plane.fmt(ctx, t))

    bad_out = np.argwhere(~covered & ~on)
    bad_on = np.argwhere(~covered & on)
    for x, y in bad_out[:max_witnesses].tolist():
        note(out_w, (x, y, 1))
    for x, y in bad_on[:max_witnesses].tolist():
        note(on_w, (x, y, 1))
    n_out, n_on = len(bad_out), len(bad_on)
    for m in np.nonzero(~inf_cov)[0].tolist():
        n_out += 1
        note(out_w, (1, m, 0))
    if not vert_inf:
        n_on += 1
        note(on_w, (0, 1, 0))
    return Completeness(n_out == 0, n_out == 0 and n_on == 0, out_w, on_w, N * N + N + 1)
