"""Verification suites.

Each suite returns a :class:`SuiteResult` holding named checks.  A check is
either a claim (it must hold; a failure makes the suite fail) or report data
(``informational``: recorded, never fails the run).  Inputs are exhaustive
when the field is small enough and seeded samples otherwise; the detail of
every check says which.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import bounds, frobchain, hermitian, oracle, subfield_branch as sb
from .fieldtower import FieldCtx, build_ctx, is_irreducible, v_capital_A
from .rng import SplitMix64
from .secant import SecantQuery, build_f, is_full_secant, param, split_form, v_degeneracy

# exhaustive over triples (a, b, m) when q^18 stays below this
EXHAUSTIVE_TRIPLES = 1 << 18
EXHAUSTIVE_PAIRS = 1 << 12


@dataclass
class Check:
    name: str
    passed: bool
    total: int = 0
    failures: int = 0
    informational: bool = False
    detail: dict = field(default_factory=dict)


@dataclass
class SuiteResult:
    suite: str
    q: int
    checks: list[Check]
    seconds: float

    @property
    def passed(self) -> bool:
        return all(c.passed or c.informational for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "q": self.q, "passed": self.passed,
                "seconds": round(self.seconds, 3),
                "checks": [asdict(c) for c in self.checks]}


@dataclass(frozen=True)
class Options:
    seed: int = 0
    trials: int = 10_000
    threads: int = 1
    budget: int = 729
    cache_dir: str | None = None


def _count(name: str, ok: np.ndarray, mode: str, informational: bool = False, **detail) -> Check:
    ok = np.asarray(ok, dtype=bool)
    bad = int(np.count_nonzero(~ok))
    return Check(name, bad == 0, int(ok.size), bad, informational, {"mode": mode, **detail})


class Run:
    """Per-field state shared by the suites (curve, oracle, samplers)."""

    def __init__(self, ctx: FieldCtx, opts: Options):
        self.ctx = ctx
        self.opts = opts

    @cached_property
    def pts(self) -> hermitian.CurvePointSet:
        return hermitian.enumerate_curve(self.ctx, self.opts.cache_dir)

    @cached_property
    def orc(self) -> oracle.Oracle:
        if self.ctx.order > self.opts.budget:
            raise oracle.BudgetExceeded(f"oracle tables need q^6 <= {self.opts.budget}")
        return oracle.Oracle(self.ctx, self.pts)

    @property
    def has_oracle(self) -> bool:
        return self.ctx.order <= self.opts.budget

    def rng(self, salt: int) -> SplitMix64:
        return SplitMix64(self.opts.seed * 0x100000001B3 + salt)

    def sample(self, salt: int, k: int, width: int) -> list[np.ndarray]:
        r = self.rng(salt)
        cols = [[] for _ in range(width)]
        for _ in range(k):
            for c in cols:
                c.append(r.below(self.ctx.order))
        return [np.array(c, dtype=np.int64) for c in cols]

    def triples(self, salt: int):
        N = self.ctx.order
        if N ** 3 <= EXHAUSTIVE_TRIPLES:
            a, b, m = np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij")
            return "exhaustive", a.ravel(), b.ravel(), m.ravel()
        return ("sampled", *self.sample(salt, self.opts.trials, 3))

    def pairs(self, salt: int):
        N = self.ctx.order
        if N ** 2 <= EXHAUSTIVE_PAIRS:
            a, b = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
            return "exhaustive", a.ravel(), b.ravel()
        return ("sampled", *self.sample(salt, self.opts.trials, 2))

    def pmap(self, fn, items):
        items = list(items)
        if self.opts.threads <= 1 or len(items) <= 1:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(self.opts.threads) as ex:
            return list(ex.map(fn, items))

    def chunked(self, fn, arrays, size: int = 1 << 15):
        """Apply fn to aligned slices of the arrays; results concatenated in order."""
        n = len(arrays[0])
        parts = self.pmap(lambda s: fn(*(x[s:s + size] for x in arrays)), range(0, n, size))
        if not parts:
            return ()
        if isinstance(parts[0], tuple):
            return tuple(np.concatenate(p) for p in zip(*parts))
        return np.concatenate(parts)


def _vnorm(ctx: FieldCtx, x):
    acc = np.ones_like(x)
    c = x
    for _ in range(6):
        acc = ctx.vmul(acc, c)
        c = ctx.vfrob(c)
    return acc


def _vtrace(ctx: FieldCtx, x, e: int):
    acc = np.zeros_like(x)
    for j in range(6 // e):
        acc = ctx.vadd(acc, ctx.vfrob(x, e * j))
    return acc


def alternative_modulus(ctx: FieldCtx) -> list[int] | None:
    """Second irreducible of the same degree in lexicographic order."""
    p, n = ctx.p, ctx.n
    for code in range(p ** n):
        coeffs = [(code // p ** i) % p for i in range(n)] + [1]
        if coeffs[0] and tuple(coeffs) != tuple(ctx.modulus) and is_irreducible(coeffs, p):
            return coeffs
    return None


# --- field ------------------------------------------------------------------

def suite_field(run: Run) -> list[Check]:
    ctx = run.ctx
    out = [Check("modulus_irreducible", is_irreducible(list(ctx.modulus), ctx.p), 1)]
    mode, x, y, z = run.triples(1)
    out.append(_count("mul_associative", ctx.vmul(ctx.vmul(x, y), z) == ctx.vmul(x, ctx.vmul(y, z)), mode))
    out.append(_count("distributive", ctx.vmul(x, ctx.vadd(y, z)) == ctx.vadd(ctx.vmul(x, y), ctx.vmul(x, z)), mode))
    nz = x[x != 0]
    out.append(_count("inverse", ctx.vmul(nz, ctx.vinv(nz)) == 1, mode))
    pmode, u, v = run.pairs(2)
    out.append(_count("frob_additive", ctx.vfrob(ctx.vadd(u, v)) == ctx.vadd(ctx.vfrob(u), ctx.vfrob(v)), pmode))
    out.append(_count("frob_multiplicative", ctx.vfrob(ctx.vmul(u, v)) == ctx.vmul(ctx.vfrob(u), ctx.vfrob(v)), pmode))
    allx = ctx.elements() if ctx.order <= 1 << 16 else u
    emode = "exhaustive" if ctx.order <= 1 << 16 else pmode
    w = allx
    for _ in range(6):
        w = ctx.vfrob(w)
    out.append(_count("frob_order_6", w == allx, emode))
    out.append(_count("frob_matches_power", ctx.vfrob(allx) == ctx.vpow(allx, ctx.q), emode))
    for e in (1, 2, 3):
        tr = _vtrace(ctx, allx, e)
        out.append(_count(f"trace_{e}_fixed", ctx.vfrob(tr, e) == tr, emode))
    A = v_capital_A(ctx, allx)
    out.append(_count("A_in_Fq2", ctx.vfrob(A, 2) == A, emode))
    nrm = _vnorm(ctx, allx)
    out.append(_count("norm_in_Fq", ctx.vfrob(nrm) == nrm, emode))
    sizes = {e: len(ctx.subfield_elements(e)) for e in (1, 2, 3, 6)}
    out.append(Check("subfield_sizes", all(sizes[e] == ctx.q ** e for e in sizes), 4, 0, False,
                     {"sizes": {str(k): v for k, v in sizes.items()}}))
    return out


# --- curve ------------------------------------------------------------------

def suite_curve(run: Run) -> list[Check]:
    ctx, pts = run.ctx, run.pts
    q = ctx.q
    exp = hermitian.expected_count(q)
    out = [Check("count_formula", pts.count == exp, 1, int(pts.count != exp), False,
                 {"count": pts.count, "expected": exp})]
    lhs = ctx.vpow(pts.xs, q + 1)
    rhs = ctx.vadd(ctx.vfrob(pts.ys), pts.ys)
    out.append(_count("points_on_curve", lhs == rhs, "exhaustive"))
    if run.has_oracle:
        bf = hermitian.enumerate_curve_bruteforce(ctx)
        same = bf.affine() == pts.affine()
        out.append(Check("bruteforce_enumeration_agrees", same, 1, int(not same)))
    # vertical lines X = c: q+1 iff c^{q+1} is some y^q + y
    els = ctx.elements() if ctx.order <= 1 << 16 else None
    if els is not None:
        image = np.zeros(ctx.order, dtype=bool)
        image[ctx.vadd(ctx.vfrob(els), els)] = True
        vert = np.bincount(pts.xs, minlength=ctx.order) + 1
        pred = image[ctx.vpow(els, q + 1)]
        out.append(_count("vertical_character", np.where(pred, vert == q + 1, vert == 1), "exhaustive"))
    alt = alternative_modulus(ctx)
    if alt is not None and ctx.order <= 1 << 12:
        actx = build_ctx(ctx.p, ctx.h, alt)
        acount = hermitian.enumerate_curve(actx).count
        out.append(Check("representation_independent_count", acount == pts.count, 1,
                         int(acount != pts.count), False, {"alt_modulus": alt, "count": acount}))
    return out


# --- spectrum ---------------------------------------------------------------

def suite_spectrum(run: Run) -> list[Check]:
    ctx, pts = run.ctx, run.pts
    q = ctx.q
    if run.has_oracle:
        hist = hermitian.character_spectrum(ctx, pts, "exhaustive", budget=run.opts.budget)
        mode = "exhaustive"
    else:
        hist = hermitian.character_spectrum(ctx, pts, "sampled", samples=run.opts.trials, seed=run.opts.seed)
        mode = "sampled"
    keys_ok = set(hist) <= {0, 1, 2, q + 1}
    out = [Check("character_keys", keys_ok, sum(hist.values()), 0 if keys_ok else 1, False,
                 {"mode": mode, "spectrum": {str(k): v for k, v in sorted(hist.items())}})]
    if mode == "exhaustive":
        n, L = pts.count, ctx.order ** 2 + ctx.order + 1
        inc = sum(k * v for k, v in hist.items())
        pairs = sum(math.comb(k, 2) * v for k, v in hist.items())
        out.append(Check("incidence_sum", inc == n * (ctx.order + 1), 1, int(inc != n * (ctx.order + 1)),
                         False, {"sum": inc, "expected": n * (ctx.order + 1)}))
        out.append(Check("pair_sum", pairs == math.comb(n, 2), 1, int(pairs != math.comb(n, 2)),
                         False, {"sum": pairs, "expected": math.comb(n, 2)}))
        out.append(Check("line_total", sum(hist.values()) == L, 1, int(sum(hist.values()) != L)))
        alt = alternative_modulus(ctx)
        if alt is not None:
            actx = build_ctx(ctx.p, ctx.h, alt)
            ahist = hermitian.character_spectrum(actx, hermitian.enumerate_curve(actx), "exhaustive",
                                                 budget=run.opts.budget)
            out.append(Check("representation_independent_spectrum", ahist == hist, 1, int(ahist != hist),
                             False, {"alt_modulus": alt}))
    return out


# --- secants: oracle, roots of f, and the f_i predicate ----------------------

def _root_counts(ctx: FieldCtx, a, b, m):
    """Distinct roots of f in GF(q^6) for aligned arrays a, b, m."""
    t = param(ctx, a)
    mq = ctx.vfrob(m)
    const = ctx.vadd(ctx.vadd(ctx.vmul(m, t), ctx.vmul(mq, ctx.vfrob(t))), ctx.vadd(b, ctx.vfrob(b)))
    x = ctx.elements()[None, :]
    val = ctx.vsub(ctx.vpow(x, ctx.q + 1), ctx.vmul(mq[:, None], ctx.vfrob(x)))
    val = ctx.vsub(ctx.vsub(val, ctx.vmul(m[:, None], x)), const[:, None])
    return np.count_nonzero(val == 0, axis=1)


def _fi_predicate(ctx: FieldCtx, a, b, m):
    f = [frobchain.v_appendix_at_slopes(ctx, k, a, b, m) for k in ("f1", "f2", "f3")]
    _, _, _, F4, F5 = frobchain.v_derived(ctx, a, b, m)
    return (f[0] == 0) & (f[1] == 0) & (f[2] == 0) & ((F4 != 0) | (F5 != 0))


def suite_secant(run: Run) -> list[Check]:
    ctx = run.ctx
    q = ctx.q
    if not run.has_oracle:
        return [Check("three_way", True, 0, 0, True, {"skipped": "oracle over budget"})]
    nonvert = run.orc.nonvert
    mode, a, b, m = run.triples(10)

    def block(a, b, m):
        o = nonvert[m, ctx.vsub(b, ctx.vmul(m, a))]
        r = _root_counts(ctx, a, b, m)
        fi = _fi_predicate(ctx, a, b, m)
        nd = v_degeneracy(ctx, a, b, m) != 0
        return o, r, fi, nd

    o, r, fi, nd = run.chunked(block, (a, b, m), 1 << 12)
    full = o == q + 1
    out = [
        _count("roots_equal_oracle_counts", r == o, mode),
        _count("oracle_iff_full_secant", (full == (r == q + 1))[nd], mode),
        _count("oracle_iff_fi", (full == fi)[nd], mode),
        Check("degenerate_inputs", True, int(np.count_nonzero(~nd)), 0, True,
              {"degenerate": int(np.count_nonzero(~nd)),
               "degenerate_full": int(np.count_nonzero(full & ~nd))}),
    ]
    # the gcd root count and the split form, on a sample
    sa, sbb, sm = run.sample(11, min(run.opts.trials, 400), 3)
    so = nonvert[sm, ctx.vsub(sbb, ctx.vmul(sm, sa))]
    gcd_ok = [is_full_secant(ctx, SecantQuery(int(x), int(y), int(z))) == (c == q + 1)
              for x, y, z, c in zip(sa.tolist(), sbb.tolist(), sm.tolist(), so.tolist())]
    out.append(_count("gcd_path_equals_oracle", gcd_ok, "sampled"))
    da = np.nonzero(~nd)[0][:200]
    split_ok = [build_f(ctx, SecantQuery(int(a[i]), int(b[i]), int(m[i]))) == split_form(ctx, int(m[i]))
                for i in da.tolist()]
    out.append(_count("degenerate_f_splits", split_ok, f"first {len(split_ok)} degenerate ({mode})"))
    # the walk oracle audits the table
    walk = []
    affine = run.pts.affine()
    for x, y in zip(*run.sample(12, 4, 2)):
        v1 = oracle.bruteforce_secant_slopes(run.orc, int(x), int(y))
        v2 = oracle.bruteforce_secant_slopes_walk(ctx, affine, int(x), int(y))
        walk.append(v1.slopes == v2.slopes and v1.vertical == v2.vertical)
    out.append(_count("walk_oracle_agrees", walk, "sampled"))
    return out


# --- chain: determinant, minors, the rational identity ----------------------

def suite_chain(run: Run) -> list[Check]:
    ctx = run.ctx
    mode, a, b, m = run.triples(20)

    def block(a, b, m):
        al, be, ga, de = frobchain.v_chain_product(ctx, a, b, m)
        D = v_degeneracy(ctx, a, b, m)
        det = ctx.vsub(ctx.vmul(al, de), ctx.vmul(be, ga))
        f = [frobchain.v_appendix_at_slopes(ctx, k, a, b, m) for k in ("f1", "f2", "f3", "f4")]
        F = (ctx.vneg(ga), ctx.vsub(al, de), be, ga, de)
        minors = np.ones(len(a), dtype=bool)
        for i in range(3):
            for j in range(i + 1, 3):
                minors &= ctx.vmul(f[i], F[j]) == ctx.vmul(f[j], F[i])
        scale = np.ones(len(a), dtype=bool)
        for fi, Fi in zip(f, (F[0], F[1], F[2], F[4])):
            scale &= fi == ctx.vneg(Fi)
        return D, det, minors, scale

    D, det, minors, scale = run.chunked(block, (a, b, m), 1 << 14)
    nd = D != 0
    out = [
        _count("det_equals_norm", det == _vnorm(ctx, D), mode),
        _count("det_in_Fq", ctx.vfrob(det) == det, mode),
        _count("degenerate_chain_singular", det[~nd] == 0, mode),
        _count("minors_vanish", minors[nd], mode),
        _count("f_equals_minus_F_with_f4_minus_F5", scale[nd], mode, informational=True),
    ]
    # rational identity: every X at q=2, 8 seeded X per input otherwise
    N = ctx.order
    every_x = mode == "exhaustive" and N ** 4 <= 1 << 24
    xmode = "all X" if every_x else "8 seeded X"
    reps = N if every_x else 8
    if not every_x:
        r = run.rng(21)
        xs_all = np.array(r.elements(N, 8 * len(a)), dtype=np.int64).reshape(len(a), 8)
    idx = np.nonzero(nd)[0]

    def rat(start):
        sel = idx[start:start + 4096]
        aa, bb, mm = (np.repeat(v[sel], reps) for v in (a, b, m))
        x = np.tile(np.arange(N), len(sel)) if every_x else xs_all[sel].ravel()
        x6, pole = frobchain.v_chain_eval(ctx, aa, bb, mm, x)
        F1, F2, F3, F4, F5 = frobchain.v_derived(ctx, aa, bb, mm)
        num = ctx.vadd(ctx.vadd(F3, ctx.vmul(F2, x)), ctx.vmul(F1, ctx.vmul(x, x)))
        den = ctx.vadd(F5, ctx.vmul(F4, x))
        rhs = ctx.vmul(num, ctx.vinv(np.where(den == 0, 1, den)))
        ok = (den != 0) & (ctx.vsub(x6, x) == rhs)
        return ok[~pole], int(np.count_nonzero(pole))

    res = run.pmap(rat, range(0, len(idx), 4096))
    ok = np.concatenate([r[0] for r in res]) if res else np.array([], dtype=bool)
    out.append(_count("rational_identity", ok, mode, x=xmode, poles=sum(r[1] for r in res)))
    return out


# --- the GF(q^2)-slope branch -----------------------------------------------

def _a_zero_elements(ctx: FieldCtx) -> np.ndarray:
    els = ctx.elements()
    return els[v_capital_A(ctx, els) == 0]


def suite_cubic(run: Run) -> list[Check]:
    ctx = run.ctx
    q = ctx.q
    N = ctx.order
    out = []
    mode, a, b = run.pairs(30)
    E = sb.v_cubic_coeffs(ctx, a, b)[3]
    out.append(_count("E_skew", ctx.vfrob(E) == ctx.vneg(E), mode))

    ms = np.array(ctx.subfield_elements(2), dtype=np.int64)
    mq = ctx.vfrob(ms)
    ex = q ** 4 + q ** 2 + 1

    def eqh(a, b):
        coeffs = [v[:, None] for v in sb.v_cubic_coeffs(ctx, a, b)]
        g = sb.v_g_value(ctx, coeffs, ms[None, :], mq[None, :])
        al, be, ga, de = frobchain.v_chain_product(ctx, a[:, None], b[:, None], ms[None, :])
        D = v_degeneracy(ctx, a[:, None], b[:, None], ms[None, :])
        nd = D != 0
        lhs = ctx.vmul(ctx.vsub(al, de), ctx.vinv(np.where(de == 0, 1, de)))
        rhs = ctx.vmul(g, ctx.vinv(ctx.vpow(np.where(nd, D, 1), ex)))
        # numerator of x^{q^6} - x vanishes at X = m^q, so it is linear through m^q
        at = ctx.vadd(be, ctx.vmul(ctx.vsub(al, de), mq[None, :]))
        return ((ga == 0) & (de != 0) & (at == 0))[nd], (lhs == rhs)[nd]

    A = v_capital_A(ctx, a)
    az = A == 0
    lin, same = eqh(a[az], b[az])
    out.append(_count("chain_linear_on_Fq2", lin, mode))
    out.append(_count("eq_h_identity", same, mode))
    _, same_nz = eqh(a[~az][:4096], b[~az][:4096])
    out.append(_count("eq_h_identity_A_nonzero", same_nz, mode, informational=True))

    # degenerate with m in GF(q^2), point off the subplane => forbidden slope
    t = param(ctx, a)
    da = ctx.vsub(ctx.vfrob(t, 2), t)
    db = ctx.vsub(ctx.vfrob(b, 2), b)
    forb = ctx.vneg(ctx.vmul(db, ctx.vinv(np.where(da == 0, 1, da))))
    sub = (da == 0) & (db == 0)
    D = v_degeneracy(ctx, a[:, None], b[:, None], ms[None, :])
    deg = (D == 0) & ~sub[:, None]
    hit = (da != 0)[:, None] & (ms[None, :] == forb[:, None])
    out.append(_count("degenerate_means_forbidden", hit[deg], mode))

    # the transcribed cubic against the coefficients interpolated from the chain
    azs = _a_zero_elements(ctx)
    r = run.rng(31)
    interp = []
    fallback = q ** 2 < len(sb.MONOMIALS)
    n_int = 64 if fallback else min(run.opts.trials, 200)
    for _ in range(n_int):
        x = int(azs[r.below(len(azs))])
        y = r.below(N)
        if sb.in_subplane(ctx, x, y):
            continue
        it = sb.interpolate_cubic_coeffs(ctx, x, y, allow_fallback=fallback)
        if it.coeffs is None:
            interp.append(it.shape_ok)
        else:
            interp.append(it.shape_ok and it.coeffs == sb.cubic_coeffs(ctx, x, y))
    out.append(_count("transcribed_equals_interpolated" if not fallback else "transcribed_consistent_with_chain",
                      interp, "sampled"))

    if run.has_oracle:
        out.extend(_prop2bis_checks(run, azs))
    return out


def _prop2bis_checks(run: Run, azs: np.ndarray) -> list[Check]:
    ctx = run.ctx
    q = ctx.q
    N = ctx.order
    nonvert = run.orc.nonvert
    ms = np.array(ctx.subfield_elements(2), dtype=np.int64)
    els = ctx.elements()

    def per_a(x):
        av = np.full(N, x, dtype=np.int64)
        pred, valid = sb.v_prop2bis(ctx, av, els)
        c = ctx.vsub(els[:, None], ctx.vmul(ms[None, :], x))
        full = nonvert[ms[None, :], c] == q + 1
        nd = v_degeneracy(ctx, av[:, None], els[:, None], ms[None, :]) != 0
        return (int(np.count_nonzero(valid)), int(np.count_nonzero((pred != full) & valid)),
                int(np.count_nonzero(valid & ~nd)), int(np.count_nonzero(full.any(axis=1))))

    res = run.pmap(per_a, azs.tolist())
    total = sum(r[0] for r in res)
    bad = sum(r[1] for r in res)
    out = [Check("prop2bis_iff_oracle", bad == 0, total, bad, False,
                 {"mode": "exhaustive", "points": len(azs) * N,
                  "degenerate_in_domain": sum(r[2] for r in res),
                  "points_with_Fq2_secant": sum(r[3] for r in res)})]
    # off its domain the cubic says nothing; record how often it is wrong there
    r = run.rng(32)
    nz = els[v_capital_A(ctx, els) != 0]
    sa = np.array([int(nz[r.below(len(nz))]) for _ in range(256)], dtype=np.int64)
    sbb = np.array([r.below(N) for _ in range(256)], dtype=np.int64)
    coeffs = [v[:, None] for v in sb.v_cubic_coeffs(ctx, sa, sbb)]
    g = sb.v_g_value(ctx, coeffs, ms[None, :], ctx.vfrob(ms)[None, :])
    full = nonvert[ms[None, :], ctx.vsub(sbb[:, None], ctx.vmul(ms[None, :], sa[:, None]))] == q + 1
    out.append(_count("cubic_iff_oracle_A_nonzero", (g == 0) == full, "sampled", informational=True))

    # search and normal-basis pull-back, cross-checked with the oracle
    r = run.rng(33)
    n = min(len(azs) * N, 256)
    found, srch, pull = 0, [], []
    for _ in range(n):
        x, y = int(azs[r.below(len(azs))]), r.below(N)
        res_ = sb.subfield_secant_search(ctx, x, y, run.orc)
        counts = run.orc.slope_counts(x, y)
        truth = sorted(int(mm) for mm in ms.tolist() if counts[mm] == q + 1)
        srch.append(res_.candidates == truth)
        found += res_.slope is not None
        if not sb.in_subplane(ctx, x, y):
            cc = sb.cubic_coeffs(ctx, x, y)
            cnt, slopes = sb.pullback_points(ctx, cc)
            zeros = [int(mm) for mm in sorted(ms.tolist()) if sb.g_value(ctx, cc, mm, ctx.frob(mm)) == 0]
            pull.append(cnt == len(zeros) and slopes == zeros)
    out.append(_count("search_equals_oracle", srch, "sampled", found=found))
    out.append(_count("pullback_bijection", pull, "sampled", xi=sb.normal_basis_fq2(ctx)))
    return out


def suite_czero(run: Run) -> list[Check]:
    ctx = run.ctx
    q = ctx.q
    limit = None if q == 2 else min(run.opts.trials, 200)
    try:
        reps = sb.czero_sweep(ctx, limit)
    except sb.PreconditionUnsatisfiable as e:
        return [Check("czero_inputs", True, 0, 0, True, {"inputs": 0, "note": str(e)})]
    mode = "exhaustive" if limit is None else f"first {limit}"
    return [
        Check("czero_inputs", True, len(reps), 0, True, {"inputs": len(reps), "mode": mode}),
        _count("czero_bis", [r.czero_bis_ok for r in reps], mode),
        _count("aq5_sign_from_A_zero", [r.aq5_sign_fixed_ok for r in reps], mode),
        _count("aq5_as_displayed", [r.aq5_ok for r in reps], mode, informational=True),
        _count("g_proportional_to_h1h2", [r.proportional for r in reps], mode),
        _count("kappa_equals_observed_constant", [r.kappa_observed_ok for r in reps], mode),
        _count("kappa_equals_stated_constant", [r.factorization_ok for r in reps], mode, informational=True),
        _count("h2_has_q_roots", [r.h2_root_count == q for r in reps], mode),
    ]


# --- the g-system -----------------------------------------------------------

def suite_gsystem(run: Run) -> list[Check]:
    ctx = run.ctx
    N = ctx.order
    els = ctx.elements()
    nz = els[v_capital_A(ctx, els) != 0]
    r = run.rng(40)
    if len(nz) <= 1000:
        a = nz
        mode = "every a with A != 0"
    else:
        a = np.array([int(nz[r.below(len(nz))]) for _ in range(1000)], dtype=np.int64)
        mode = "1000 seeded a with A != 0"
    b = np.array([r.below(N) for _ in range(len(a))], dtype=np.int64)
    t = param(ctx, a)
    g = ctx.vadd(b, ctx.vfrob(b))
    A = v_capital_A(ctx, a)
    c1 = frobchain.extract_coefficient(ctx, "g1", t, g, {2: 1, 4: 1})
    c3 = frobchain.extract_coefficient(ctx, "g3", t, g, {2: 1, 4: 1, 5: 2})
    c2 = frobchain.extract_coefficient(ctx, "g2", t, g, {2: 1, 4: 1, 5: 1})
    want1 = ctx.vsub(ctx.vfrob(t, 2), ctx.vfrob(t, 4))
    literal1 = ctx.vsub(ctx.vfrob(a, 2), ctx.vfrob(a, 4))
    out = [
        _count("G1_y2y4_is_t_q2_minus_t_q4", c1 == want1, mode),
        _count("G1_y2y4_is_a_q2_minus_a_q4", c1 == literal1, mode, informational=True),
        _count("G3_y2y4y5sq_is_A", c3 == A, mode),
        _count("G2_y2y4y5_is_A", c2 == A, mode),
    ]
    y = [np.array(r.elements(N, len(a)), dtype=np.int64) for _ in range(6)]
    tt = np.array(r.elements(N, len(a)), dtype=np.int64)
    lin = np.ones(len(a), dtype=bool)
    for k in frobchain.LINEAR_VAR:
        lin &= frobchain.check_linearity(ctx, k, t, g, y, tt)
    out.append(_count("g_linear_in_named_variable", lin, mode))

    # containment of the g-zero set in the f-zero set
    if N ** 2 <= EXHAUSTIVE_PAIRS:
        pa = nz
        cmode = "exhaustive"
    else:
        pa = np.array([int(nz[r.below(len(nz))]) for _ in range(64)], dtype=np.int64)
        cmode = "sampled"

    def per_a(x):
        bb = els if cmode == "exhaustive" else np.array(run.rng(41 + x).elements(N, 8), dtype=np.int64)
        bcol = bb[:, None]
        mm = els[None, :]
        gz = np.ones((len(bb), N), dtype=bool)
        fz = np.ones((len(bb), N), dtype=bool)
        for k in ("g1", "g2", "g3"):
            gz &= frobchain.v_appendix_at_slopes(ctx, k, x, bcol, mm) == 0
        for k in ("f1", "f2", "f3"):
            fz &= frobchain.v_appendix_at_slopes(ctx, k, x, bcol, mm) == 0
        return int(np.count_nonzero(gz)), int(np.count_nonzero(gz & ~fz))

    res = run.pmap(per_a, pa.tolist())
    zeros = sum(z for z, _ in res)
    viol = sum(v for _, v in res)
    out.append(Check("g_zeros_inside_f_zeros", viol == 0, zeros, viol, cmode != "exhaustive",
                     {"mode": cmode, "g_zero_triples": zeros}))

    # normal basis of GF(q^6)/GF(q) and the substitution eta
    nb = frobchain.normal_basis_find(ctx)
    fq = np.array(sorted(ctx.subfield_elements(1)), dtype=np.int64)
    if ctx.q ** 6 <= 1 << 16:
        grid = np.array(np.meshgrid(*[fq] * 6, indexing="ij")).reshape(6, -1)
        yv = nb.v_eta(ctx, list(grid))
        bij = len(np.unique(yv[0])) == ctx.order
        frob_ok = all(np.array_equal(yv[j], ctx.vfrob(yv[0], j)) for j in range(6))
        out.append(Check("normal_basis_eta", bij and frob_ok, ctx.order, int(not (bij and frob_ok)), False,
                         {"xi": ctx.to_hex(nb.xi)}))
    return out


# --- scalar identities --------------------------------------------------------

HOLDS = ("gamma_alternating", "A_expansion", "shift_identity_minus", "p2_is_p1_frob3", "p2_minus_p1_is_A")
REPORTED = ("shift_identity_plus", "p1_plus_p2_is_A")


def suite_identities(run: Run) -> list[Check]:
    ctx = run.ctx
    mode, a, b = run.pairs(50)
    reps = [frobchain.identity_checks(ctx, x, y) for x, y in zip(a.tolist(), b.tolist())]
    out = [_count(k, [getattr(r, k) for r in reps], mode) for k in HOLDS]
    out += [_count(k, [getattr(r, k) for r in reps], mode, informational=True) for k in REPORTED]
    return out


# --- bounds -------------------------------------------------------------------

def _decimal_ultimosez1(q: int) -> Decimal:
    getcontext().prec = 60
    Q = Decimal(q)
    s60 = Decimal(60) ** (Decimal(13) / 3)
    s1500 = Decimal(1500) ** (Decimal(13) / 3)
    p1 = Q ** 3 - 3422 * Q ** Decimal("2.5") - 5 * s60 * Q * Q - 9 * Q * Q
    p2 = Q * Q + 1499 * 1500 * Q.sqrt() + 5 * s1500 * Q
    return p1 - p2 - (Q + 1)


def suite_bounds(run: Run | None = None) -> list[Check]:
    out = []
    cm60 = bounds.cafure_matera(bounds.BoundQuery(28801, 3, 60))
    out.append(Check("threshold_r3_delta60", cm60.threshold == 28800, 1, int(cm60.threshold != 28800)))
    out.append(Check("coefficient_delta60", cm60.coefficient == bounds.PROP_A_COEFF == 3422, 1,
                     int(cm60.coefficient != 3422)))
    cm1500 = bounds.cafure_matera(bounds.BoundQuery(2, 2, 1500))
    out.append(Check("quoted_constant_1499x1500", bounds.PROP_B_COEFF == 2248500, 1,
                     int(bounds.PROP_B_COEFF != 2248500), False,
                     {"quoted": bounds.PROP_B_COEFF, "cafure_matera_coefficient": cm1500.coefficient,
                      "quoted_is_conservative": bounds.PROP_B_COEFF >= cm1500.coefficient}))
    qs = list(range(2, 1001)) + [10 ** k for k in range(4, 7)]
    neg = [bounds.ultimosez1_lower(q).sign() < 0 for q in qs]
    out.append(_count("ultimosez1_negative_up_to_1e6", neg, "grid + monotonicity"))
    golden = bounds.load_golden()
    qstar = bounds.threshold_q_star(lo=2, hi=golden["q_star"] * 2)
    out.append(Check("q_star_matches_golden", qstar == golden["q_star"], 1, int(qstar != golden["q_star"]),
                     False, {"q_star": qstar, "q_star_prime_power": golden["q_star_prime_power"]}))
    edge = (bounds.ultimosez1_lower(qstar).sign() > 0 and bounds.ultimosez1_lower(qstar - 1).sign() < 0)
    out.append(Check("q_star_is_sign_change", edge, 2, int(not edge)))
    dec = _decimal_ultimosez1(qstar) > 0 and _decimal_ultimosez1(qstar - 1) < 0
    out.append(Check("q_star_decimal_crosscheck", dec, 2, int(not dec)))
    out.append(Check("q_star_above_1e6", qstar > 10 ** 6, 1, int(qstar <= 10 ** 6)))
    p4 = bounds.propmain2_upper(4)
    out.append(Check("propmain2_upper_4_golden", p4.floor() == golden["propmain2_upper_4_floor"], 1,
                     int(p4.floor() != golden["propmain2_upper_4_floor"]), False,
                     {"bracket": list(p4.bracket(6))}))
    hw9 = bounds.hasse_weil_lower(9)
    out.append(Check("hasse_weil_9_is_4", hw9.compare(4) == 0, 1, int(hw9.compare(4) != 0)))
    hw2 = bounds.hasse_weil_lower(2).compare(1) < 0
    out.append(Check("hasse_weil_2_below_1", hw2, 1, int(not hw2)))
    signs = [bounds.propmain1_lower(q).sign() < 0 and bounds.ultimosez1_lower(q).sign() < 0 for q in (2, 3)]
    out.append(_count("small_q_negative", signs, "q in {2, 3}"))
    cons = []
    for q in (2, 3, 4, 1000, qstar):
        d = (bounds.ultimosez1_lower(q) - bounds.propmain1_lower(q) + bounds.propmain2_upper(q)
             + bounds.ExactReal.of((q + 1, 1, 1)))
        iv = d.interval(256)
        cons.append(iv.lo <= 0 <= iv.hi and iv.width < Fraction(1, 1 << 100))
    out.append(_count("definitional_consistency", cons, "spot q"))
    return out


# --- completeness -------------------------------------------------------------

def suite_complete(run: Run) -> list[Check]:
    if not run.has_oracle:
        return [Check("completeness", True, 0, 0, True, {"skipped": "over budget"})]
    c = oracle.completeness_check(run.orc, run.opts.budget)
    return [
        Check("completeness_verdict", True, c.points_checked, 0, True,
              {"complete": c.complete, "strong": c.strong,
               "uncovered_outside": c.uncovered_outside, "uncovered_on_curve": c.uncovered_on_curve}),
        Check("strong_implies_complete", (not c.strong) or c.complete, 1, 0),
    ]


SUITES = {
    "field": suite_field,
    "curve": suite_curve,
    "spectrum": suite_spectrum,
    "secant": suite_secant,
    "chain": suite_chain,
    "cubic": suite_cubic,
    "czero": suite_czero,
    "gsystem": suite_gsystem,
    "identities": suite_identities,
    "bounds": suite_bounds,
    "complete": suite_complete,
}


def run_suite(name: str, ctx: FieldCtx, opts: Options | None = None, run: Run | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    run = run or Run(ctx, opts or Options())
    t0 = time.perf_counter()
    checks = SUITES[name](run)
    return SuiteResult(name, ctx.q, checks, time.perf_counter() - t0)


def run_suites(names, ctx: FieldCtx, opts: Options | None = None) -> list[SuiteResult]:
    run = Run(ctx, opts or Options())
    return [run_suite(n, ctx, run=run) for n in names]
