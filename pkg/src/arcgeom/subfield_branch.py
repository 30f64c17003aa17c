"""Slopes in GF(q^2) when A = 0: the two-variable cubic g(y0, y1).

For m in GF(q^2) the Frobenius chain collapses: the entry gam of the chain
matrix vanishes and x^{q^6} - x becomes linear,

    h(X) = g(m, m^q) (X - m^q) / D^{q^4+q^2+1},

D being the degeneracy quantity.  The coefficients B..F of g are available in
two ways: transcribed (``data/subfield.tex``) and interpolated from the chain
by solving for the eight monomial coefficients over many slopes.  The second
route is the oracle for the first.

The factors of g in the C = 0 case are called h1, h2 here; g1, g2, g3 stay
reserved for the six-variable polynomials of :mod:`arcgeom.appendix`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import frobchain, polys
from .fieldtower import FieldCtx, capital_A, v_capital_A
from .secant import SecantQuery, degeneracy, param


class PointInSubplane(ValueError):
    pass


class SlopeNotInFq2(ValueError):
    pass


class ForbiddenSlope(ValueError):
    pass


class AIsNotZero(ValueError):
    pass


class UnderdeterminedSystem(ValueError):
    pass


class PreconditionUnsatisfiable(ValueError):
    pass


class SkewViolation(AssertionError):
    pass


@dataclass(frozen=True)
class CubicCoeffs:
    B: int
    C: int
    D: int
    E: int
    F: int

    def monomials(self, ctx: FieldCtx) -> list[int]:
        """Coefficients in the order of :data:`MONOMIALS`."""
        nq = lambda v: ctx.neg(ctx.frob(v))  # noqa: E731
        return [nq(self.C), nq(self.D), self.C, self.E, nq(self.F), self.D, self.F, self.B]


# (deg y0, deg y1) for -C^q y0 y1^2 - D^q y1^2 + C y0^2 y1 + E y0 y1 - F^q y1 + D y0^2 + F y0 + B
MONOMIALS = ((1, 2), (0, 2), (2, 1), (1, 1), (0, 1), (2, 0), (1, 0), (0, 0))


def _subfield_exp(q: int) -> int:
    return q ** 4 + q ** 2 + 1


def in_fq2(ctx: FieldCtx, x: int) -> bool:
    return ctx.in_subfield(x, 2)


def cubic_coeffs(ctx: FieldCtx, a: int, b: int, corrected: bool = True, check: bool = True) -> CubicCoeffs:
    """B..F from the transcribed displays."""
    vals = v_cubic_coeffs(ctx, np.array([a]), np.array([b]), corrected)
    cc = CubicCoeffs(*(int(v[0]) for v in vals))
    if check and ctx.frob(cc.E) != ctx.neg(cc.E):
        raise SkewViolation(f"E^q != -E at a={ctx.to_hex(a)} b={ctx.to_hex(b)}")
    return cc


def v_cubic_coeffs(ctx: FieldCtx, a, b, corrected: bool = True) -> tuple[np.ndarray, ...]:
    """(B, C, D, E, F) as arrays over broadcast a, b."""
    a = param(ctx, np.asarray(a, dtype=np.int64))
    b = np.asarray(b, dtype=np.int64)
    zero = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    y = [zero] * 6
    return tuple(frobchain.v_eval_compiled(ctx, frobchain.compile_poly(k, corrected), y, a, zero, b)
                 for k in ("B", "C", "D", "E", "F"))


def g_value(ctx: FieldCtx, cc: CubicCoeffs, y0: int, y1: int) -> int:
    acc = 0
    for c, (i, j) in zip(cc.monomials(ctx), MONOMIALS):
        if c:
            acc = ctx.add(acc, ctx.mul(c, ctx.mul(ctx.pow(y0, i), ctx.pow(y1, j))))
    return acc


def v_g_value(ctx: FieldCtx, coeffs, y0, y1):
    """g at arrays; ``coeffs`` is (B, C, D, E, F) as broadcastable arrays."""
    B, C, D, E, F = (np.asarray(v, dtype=np.int64) for v in coeffs)
    nq = lambda v: ctx.vneg(ctx.vfrob(v))  # noqa: E731
    mons = [nq(C), nq(D), C, E, nq(F), D, F, B]
    acc = np.zeros(np.broadcast(B, y0, y1).shape, dtype=np.int64)
    for c, (i, j) in zip(mons, MONOMIALS):
        t = ctx.vmul(c, ctx.vmul(ctx.vpow(y0, i), ctx.vpow(y1, j)))
        acc = ctx.vadd(acc, t)
    return acc


# --- the chain as oracle ----------------------------------------------------

@dataclass(frozen=True)
class ChainSample:
    m: int
    gam: int              # must vanish for m in GF(q^2)
    root_ok: bool         # numerator of x^{q^6} - x vanishes at m^q
    g: int                # g(m, m^q) recovered from the chain


def chain_g(ctx: FieldCtx, a: int, b: int, m: int) -> ChainSample:
    """g(m, m^q) read off the chain matrix; m in GF(q^2), nondegenerate."""
    sq = SecantQuery(a, b, m)
    D = degeneracy(ctx, sq)
    if D == 0:
        raise frobchain.DegenerateSlope(sq)
    (al, be), (ga, de) = frobchain.chain_matrix(ctx, sq).product
    mq = ctx.frob(m)
    num_at_mq = ctx.sum([be, ctx.mul(ctx.sub(al, de), mq), ctx.neg(ctx.mul(ga, ctx.mul(mq, mq)))])
    g = ctx.div(ctx.mul(ctx.sub(al, de), ctx.pow(D, _subfield_exp(ctx.q))), de)
    return ChainSample(m, ga, num_at_mq == 0, g)


@dataclass
class Interpolation:
    coeffs: CubicCoeffs | None     # None when the system is underdetermined
    rank: int
    equations: int
    shape_ok: bool                 # solution has the -C^q, -D^q, -F^q pattern
    consistent_with: CubicCoeffs | None = None


def interpolate_cubic_coeffs(ctx: FieldCtx, a: int, b: int, allow_fallback: bool = False) -> Interpolation:
    """Solve for the eight coefficients of g from chain values over GF(q^2).

    At q = 2 only four slopes exist, so the system cannot pin down eight
    unknowns.  With ``allow_fallback`` the transcribed coefficients are
    instead checked for consistency with every available chain value.
    """
    rows, rhs = [], []
    for m in ctx.subfield_elements(2):
        if degeneracy(ctx, SecantQuery(a, b, m)) == 0:
            continue
        s = chain_g(ctx, a, b, m)
        if s.gam or not s.root_ok:
            raise AssertionError(f"chain not linear at m={ctx.to_hex(m)}")
        mq = ctx.frob(m)
        rows.append([ctx.mul(ctx.pow(m, i), ctx.pow(mq, j)) for i, j in MONOMIALS])
        rhs.append(s.g)
    if len(rows) < len(MONOMIALS) and not allow_fallback:
        raise UnderdeterminedSystem(f"{len(rows)} usable slopes")
    sol, rank = polys.solve_field(ctx, rows, rhs) if rows else (None, 0)
    if sol is None:
        if not allow_fallback:
            raise UnderdeterminedSystem(f"rank {rank}")
        cc = cubic_coeffs(ctx, a, b)
        mons = cc.monomials(ctx)
        ok = all(ctx.sum([ctx.mul(c, x) for c, x in zip(mons, r)]) == v for r, v in zip(rows, rhs))
        return Interpolation(None, rank, len(rows), ok, cc if ok else None)
    _, _, C, E, _, D, F, B = sol
    cc = CubicCoeffs(B, C, D, E, F)
    return Interpolation(cc, rank, len(rows), cc.monomials(ctx) == sol)


# --- the predicate ----------------------------------------------------------

def forbidden_slope(ctx: FieldCtx, a: int, b: int) -> int | None:
    """-(b^{q^2} - b)/(t^{q^2} - t), or None if a is in GF(q^2)."""
    t = param(ctx, a)
    da = ctx.sub(ctx.frob(t, 2), t)
    if da == 0:
        return None
    return ctx.neg(ctx.div(ctx.sub(ctx.frob(b, 2), b), da))


def in_subplane(ctx: FieldCtx, a: int, b: int) -> bool:
    return in_fq2(ctx, a) and in_fq2(ctx, b)


def prop2bis_predicate(ctx: FieldCtx, a: int, b: int, m: int, cc: CubicCoeffs | None = None) -> bool:
    """g(m, m^q) = 0, i.e. Y = m(X - a) + b is a (q+1)-secant.

    Only meaningful when A = 0: elsewhere the chain is not described by g.
    """
    if capital_A(ctx, a) != 0:
        raise AIsNotZero(a)
    if in_subplane(ctx, a, b):
        raise PointInSubplane((a, b))
    if not in_fq2(ctx, m):
        raise SlopeNotInFq2(m)
    if m == forbidden_slope(ctx, a, b):
        raise ForbiddenSlope(m)
    cc = cubic_coeffs(ctx, a, b) if cc is None else cc
    return g_value(ctx, cc, m, ctx.frob(m)) == 0


def v_prop2bis(ctx: FieldCtx, a, b):
    """Vectorised predicate over arrays a, b of one shape.

    Returns ``(pred, valid)`` of shape (len(a), q^2), columns in the order of
    ``ctx.subfield_elements(2)``; ``valid`` marks slopes inside the stated
    domain (A = 0, point off the subplane, slope not forbidden).
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    ms = np.asarray(ctx.subfield_elements(2), dtype=np.int64)
    coeffs = [v[:, None] for v in v_cubic_coeffs(ctx, a, b)]
    g = v_g_value(ctx, coeffs, ms[None, :], ctx.vfrob(ms)[None, :])
    sub = ctx.vfrob(a, 2) == a
    sub_b = ctx.vfrob(b, 2) == b
    t = param(ctx, a)
    da = ctx.vsub(ctx.vfrob(t, 2), t)
    db = ctx.vsub(ctx.vfrob(b, 2), b)
    forb = ctx.vneg(ctx.vmul(db, ctx.vinv(np.where(da == 0, 1, da))))
    forbidden = (~sub)[:, None] & (ms[None, :] == forb[:, None])
    valid = ((v_capital_A(ctx, a) == 0) & ~(sub & sub_b))[:, None] & ~forbidden
    return g == 0, valid


# --- search -----------------------------------------------------------------

@dataclass
class SearchResult:
    a: int
    b: int
    slope: int | None
    via: str | None                # "cubic" or "oracle"
    candidates: list[int] = field(default_factory=list)


def subfield_secant_search(ctx: FieldCtx, a: int, b: int, orc=None) -> SearchResult:
    """First m in GF(q^2) (ascending) giving a (q+1)-secant through (a, b).

    Slopes outside the predicate's domain (degenerate or forbidden, or the
    whole point in the subplane) are settled by the oracle.
    """
    if capital_A(ctx, a) != 0:
        raise AIsNotZero(a)
    if orc is None:
        from . import hermitian, oracle
        orc = oracle.Oracle(ctx, hermitian.enumerate_curve(ctx))
    counts = orc.slope_counts(a, b)
    sub = in_subplane(ctx, a, b)
    forb = forbidden_slope(ctx, a, b)
    cc = None if sub else cubic_coeffs(ctx, a, b)
    found: list[tuple[int, str]] = []
    for m in sorted(ctx.subfield_elements(2)):
        if sub or m == forb or degeneracy(ctx, SecantQuery(a, b, m)) == 0:
            if counts[m] == ctx.q + 1:
                found.append((m, "oracle"))
        elif g_value(ctx, cc, m, ctx.frob(m)) == 0:
            found.append((m, "cubic"))
    if not found:
        return SearchResult(a, b, None, None)
    return SearchResult(a, b, found[0][0], found[0][1], [m for m, _ in found])


# --- normal-basis pull-back -------------------------------------------------

def normal_basis_fq2(ctx: FieldCtx) -> int:
    """Smallest xi in GF(q^2) with {xi, xi^q} linearly independent over GF(q)."""
    for xi in sorted(ctx.subfield_elements(2)):
        if xi and not ctx.in_subfield(ctx.div(ctx.frob(xi), xi), 1):
            return xi
    raise AssertionError("no normal element")


def pullback_points(ctx: FieldCtx, cc: CubicCoeffs) -> tuple[int, list[int]]:
    """GF(q)-points of g(eta(x0, x1)) with eta(x0, x1) = x0 xi + x1 xi^q.

    Returns the point count and the slopes m = eta(x0, x1) they map to; the
    map is a bijection GF(q)^2 -> GF(q^2), so these are exactly the zeros of
    m -> g(m, m^q) in GF(q^2).
    """
    xi = normal_basis_fq2(ctx)
    xq = ctx.frob(xi)
    fq = sorted(ctx.subfield_elements(1))
    slopes = []
    seen = set()
    for x0 in fq:
        for x1 in fq:
            m = ctx.add(ctx.mul(x0, xi), ctx.mul(x1, xq))
            seen.add(m)
            if g_value(ctx, cc, m, ctx.frob(m)) == 0:
                slopes.append(m)
    if len(seen) != ctx.q ** 2:
        raise AssertionError("normal-basis substitution is not a bijection")
    return len(slopes), sorted(slopes)


# --- the C = 0 case ---------------------------------------------------------

def _h_parts(ctx: FieldCtx, a: int, b: int):
    """Linear coefficients (of m^q, m) and constants of h1, h2."""
    a = param(ctx, a)
    q = ctx.q
    fa = lambda k: ctx.frob(a, k)  # noqa: E731
    fb = lambda k: ctx.frob(b, k)  # noqa: E731
    d = ctx.sub(a, fa(2))                                           # a - a^{q^2}
    s = ctx.sum([fb(2), ctx.neg(b), ctx.pow(a, q + 1), ctx.neg(ctx.pow(a, q * q + q))])
    h1 = (ctx.mul(ctx.frob(d), s), ctx.mul(d, ctx.frob(s)))
    h2 = (ctx.pow(d, q + 1), ctx.mul(d, ctx.sub(a, fa(4))))
    zero = [0] * 6
    consts = []
    for k in ("h1c", "h2c"):
        cp = frobchain.compile_poly(k)
        consts.append(int(frobchain.v_eval_compiled(ctx, cp, zero, a, 0, b)))
    return (h1[0], h1[1], consts[0]), (h2[0], h2[1], consts[1]), d


def h_values(ctx: FieldCtx, a: int, b: int, m: int) -> tuple[int, int]:
    (p1, r1, c1), (p2, r2, c2), _ = _h_parts(ctx, a, b)
    mq = ctx.frob(m)
    return (ctx.sum([ctx.mul(p1, mq), ctx.mul(r1, m), c1]),
            ctx.sum([ctx.mul(p2, mq), ctx.mul(r2, m), c2]))


def aq5_holds(ctx: FieldCtx, a: int, sign: int = 1) -> bool:
    """t^{q^5} (t^{q^4} - t) = sign * (t^{q+1} - t^{q^2+q} + t^{q^3+q^2} - t^{q^4+q^3}).

    ``sign=1`` is the relation as displayed; expanding A = 0 gives ``sign=-1``.
    The two agree in characteristic 2.
    """
    a = param(ctx, a)
    q = ctx.q
    fa = lambda k: ctx.frob(a, k)  # noqa: E731
    num = ctx.sum([ctx.pow(a, q + 1), ctx.neg(ctx.mul(fa(2), fa(1))),
                   ctx.mul(fa(3), fa(2)), ctx.neg(ctx.mul(fa(4), fa(3)))])
    return ctx.mul(fa(5), ctx.sub(fa(4), a)) == ctx.smul(sign, num)


def czero_bis_holds(ctx: FieldCtx, a: int, b: int) -> bool:
    a = param(ctx, a)
    q = ctx.q
    fa = lambda k: ctx.frob(a, k)  # noqa: E731
    fb = lambda k: ctx.frob(b, k)  # noqa: E731
    d = ctx.sub(a, fa(2))
    rhs = ctx.sum([ctx.mul(ctx.sub(a, fa(4)), fb(2)), ctx.mul(ctx.sub(fa(4), fa(2)), b),
                   ctx.pow(d, q * q + q + 1)])
    return ctx.mul(fb(4), d) == rhs


def qualifies_czero(ctx: FieldCtx, a: int, b: int) -> bool:
    return (capital_A(ctx, a) == 0 and not in_fq2(ctx, a)
            and cubic_coeffs(ctx, a, b, check=False).C == 0)


def czero_inputs(ctx: FieldCtx, limit: int | None = None) -> list[tuple[int, int]]:
    """Every (a, b) with A = 0, a outside GF(q^2) and C = 0, ascending."""
    N = ctx.order
    a_all = ctx.elements()
    az = a_all[(v_capital_A(ctx, a_all) == 0) & (ctx.vfrob(a_all, 2) != a_all)]
    out = []
    b_all = ctx.elements()
    for a in az.tolist():
        C = v_cubic_coeffs(ctx, np.full(N, a), b_all)[1]
        out.extend((a, int(b)) for b in np.nonzero(C == 0)[0].tolist())
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def factor_scalars(ctx: FieldCtx, a: int) -> tuple[int, int]:
    """(stated, observed) constant in front of h1 h2.

    stated = d^{q^2}; observed = -d^{q^2} / d^{1+q^4}, with d = t - t^{q^2}.
    """
    t = param(ctx, a)
    d = ctx.sub(t, ctx.frob(t, 2))
    stated = ctx.frob(d, 2)
    return stated, ctx.neg(ctx.div(stated, ctx.mul(d, ctx.frob(d, 4))))


@dataclass
class CZeroReport:
    a: int
    b: int
    aq5_ok: bool                # relation as displayed
    aq5_sign_fixed_ok: bool     # relation with the sign implied by A = 0
    czero_bis_ok: bool
    proportional: bool          # g = kappa h1 h2 on GF(q^2) for one constant kappa
    kappa: int | None
    factorization_ok: bool      # kappa equals the stated constant
    kappa_observed_ok: bool     # kappa equals -d^{q^2} / d^{1+q^4}
    h2_root_count: int
    bad_slopes: list[int]       # slopes where g != stated * h1 * h2


def czero_factorization_check(ctx: FieldCtx, a: int, b: int) -> CZeroReport:
    """Compare g(m, m^q) with const * h1(m) h2(m) for every m in GF(q^2)."""
    if not qualifies_czero(ctx, a, b):
        raise PreconditionUnsatisfiable((a, b))
    cc = cubic_coeffs(ctx, a, b)
    stated, observed = factor_scalars(ctx, a)
    bad = []
    roots = 0
    kappas = set()
    proportional = True
    for m in sorted(ctx.subfield_elements(2)):
        h1, h2 = h_values(ctx, a, b, m)
        roots += h2 == 0
        g = g_value(ctx, cc, m, ctx.frob(m))
        hh = ctx.mul(h1, h2)
        if g != ctx.mul(stated, hh):
            bad.append(m)
        if hh:
            kappas.add(ctx.div(g, hh))
        elif g:
            proportional = False
    proportional = proportional and len(kappas) <= 1 and 0 not in kappas
    kappa = next(iter(kappas)) if proportional and kappas else None
    return CZeroReport(a, b, aq5_holds(ctx, a), aq5_holds(ctx, a, -1), czero_bis_holds(ctx, a, b),
                       proportional, kappa, not bad,
                       proportional and (kappa is None or kappa == observed), roots, bad)


def czero_sweep(ctx: FieldCtx, limit: int | None = None) -> list[CZeroReport]:
    inputs = czero_inputs(ctx, limit)
    if not inputs:
        raise PreconditionUnsatisfiable(f"no (a, b) with A = 0, a outside GF(q^2), C = 0 at q={ctx.q}")
    return [czero_factorization_check(ctx, a, b) for a, b in inputs]
