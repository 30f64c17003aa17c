from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcgeom import appendix, frobchain
from arcgeom.fieldtower import capital_A, ctx_for_q, gamma_of
from arcgeom.secant import SecantQuery, degeneracy, is_full_secant, param

CTXS = {q: ctx_for_q(q) for q in (2, 3, 4)}


def norm(ctx, x):
    return reduce(ctx.mul, ctx.conjugates(x), 1)


def triple(q):
    n = CTXS[q].order - 1
    return st.builds(SecantQuery, st.integers(0, n), st.integers(0, n), st.integers(0, n))


@pytest.mark.parametrize("q", [2, 3, 4])
@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_det_is_norm_of_degeneracy(q, data):
    ctx = CTXS[q]
    sq = data.draw(triple(q))
    det = frobchain.chain_det(ctx, frobchain.chain_matrix(ctx, sq))
    assert det == norm(ctx, degeneracy(ctx, sq))
    assert ctx.frob(det) == det


@pytest.mark.parametrize("q", [2, 3, 4])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_rational_form_of_chain(q, data):
    ctx = CTXS[q]
    sq = data.draw(triple(q))
    if degeneracy(ctx, sq) == 0:
        with pytest.raises(frobchain.DegenerateSlope):
            frobchain.derived_coeffs(ctx, sq)
        return
    d = frobchain.derived_coeffs(ctx, sq)
    x = data.draw(st.integers(0, ctx.order - 1))
    x6 = frobchain.chain_eval(ctx, sq, x)
    den = d.denominator(ctx, x)
    if x6 is None or den == 0:
        return
    assert ctx.sub(x6, x) == ctx.div(d.numerator(ctx, x), den)


@pytest.mark.parametrize("q", [2, 3])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_transcribed_f_is_minus_chain_coefficients(q, data):
    ctx = CTXS[q]
    sq = data.draw(triple(q))
    if degeneracy(ctx, sq) == 0:
        return
    d = frobchain.derived_coeffs(ctx, sq)
    y = frobchain.frob_tuple(ctx, sq.m)
    t, g = param(ctx, sq.a), gamma_of(ctx, sq.b)
    f = [frobchain.eval_appendix(ctx, k, y, t, g) for k in ("f1", "f2", "f3", "f4")]
    assert f == [ctx.neg(v) for v in (d.F1, d.F2, d.F3, d.F5)]


def test_vector_chain_matches_scalar(ctx3):
    r = np.random.default_rng(5)
    a, b, m = (r.integers(0, 729, 50) for _ in range(3))
    al, be, ga, de = frobchain.v_chain_product(ctx3, a, b, m)
    for i in range(50):
        P = frobchain.chain_matrix(ctx3, SecantQuery(int(a[i]), int(b[i]), int(m[i]))).product
        assert P == ((al[i], be[i]), (ga[i], de[i]))


def test_fi_predicate_matches_root_count_q2(ctx2):
    for a in range(0, 64, 9):
        for b in range(0, 64, 13):
            mask = frobchain.v_secant_predicate_fi(ctx2, a, b)
            for m in range(64):
                sq = SecantQuery(a, b, m)
                if degeneracy(ctx2, sq) == 0:
                    assert not mask[m]
                    continue
                assert mask[m] == is_full_secant(ctx2, sq) == frobchain.secant_predicate_fi(ctx2, sq)


# --- transcription -----------------------------------------------------------

def test_every_correction_matches_once_verbatim():
    src = appendix.raw_sources()
    for c in appendix.CORRECTIONS:
        assert src[c.poly].count(c.original) == 1, c.original
        assert c.original != c.replacement


def test_correction_table_is_strict():
    bad = appendix.Correction("f1", "no such fragment", "x", "")
    with pytest.raises(appendix.ParseError):
        appendix.apply_corrections("f1", appendix.raw_sources()["f1"], (bad,))


def test_all_blocks_parse():
    for ident in appendix.POLY_IDS + appendix.CUBIC_IDS + appendix.FACTOR_IDS:
        p = appendix.load(ident)
        assert p.terms
        assert all(t.coeff in (1, -1) or t.coeff for t in p.terms)


def test_uncorrected_sources_fail_or_differ():
    for ident in ("f2", "g3"):
        with pytest.raises(appendix.ParseError):
            appendix.load(ident, corrected=False)
    assert appendix.load("B", corrected=False).terms != appendix.load("B").terms


def test_resultant_polys_flagged_unverified():
    assert {i for i in appendix.POLY_IDS if not appendix.load(i).verified} == {"r1", "r2", "r3"}


def test_unknown_poly():
    with pytest.raises(appendix.UnknownPolyId):
        appendix.load("f9")


def test_weights_f_block_homogeneous():
    for ident, w in (("f1", None), ("f2", None), ("f3", None)):
        ws = {t.weight() for t in appendix.load(ident).terms}
        assert len(ws) == 1, (ident, ws)


def test_parse_exponent():
    assert appendix.parse_exponent("q^3+q^2+1") == (1, 0, 1, 1, 0, 0)
    assert appendix.parse_exponent("2q") == (0, 2, 0, 0, 0, 0)


# --- g-system ----------------------------------------------------------------

def test_g_system_claims_q2_every_a(ctx2):
    for a in range(64):
        if capital_A(ctx2, a) == 0:
            with pytest.raises(frobchain.AIsZero):
                frobchain.g_system_checks(ctx2, a, 0)
            continue
        rep = frobchain.g_system_checks(ctx2, a, 3 * a % 64, seed=a)
        assert rep.failures == [], (a, rep.failures)


def test_g_system_coefficients_q3(ctx3):
    done = 0
    for a in range(1, 729, 17):
        if capital_A(ctx3, a) == 0:
            continue
        rep = frobchain.g_system_checks(ctx3, a, a, seed=a, enumerate_slopes=False)
        assert rep.linear_ok and rep.coeff_G1_y2y4 and rep.coeff_G3_y2y4y5sq and rep.coeff_G2_y2y4y5
        done += 1
    assert done > 20


def test_count_secants_report(ctx2, orc2):
    from arcgeom import oracle
    for a in range(64):
        if capital_A(ctx2, a) != 0:
            break
    rep = frobchain.count_secants_A_nonzero(ctx2, a, 5)
    v = oracle.bruteforce_secant_slopes(orc2, a, 5)
    assert rep.secant_count == len(v.slopes)


# --- normal basis and identities ---------------------------------------------

@pytest.mark.parametrize("q", [2, 3])
def test_normal_basis(q):
    ctx = CTXS[q]
    nb = frobchain.normal_basis_find(ctx)
    assert frobchain.field_det(ctx, frobchain.orbit_matrix(ctx, nb.xi)) != 0
    fq = sorted(ctx.subfield_elements(1))
    x = [fq[1]] + [0] * 5
    y = nb.eta(ctx, x)
    assert all(y[j] == ctx.frob(y[0], j) for j in range(6))


def test_field_det_matches_integer_det_over_prime_field(ctx3):
    rows = [[1, 2, 0], [0, 1, 1], [2, 0, 1]]
    # det over GF(3) of the integer matrix: 1*1 - 2*(0-2) = 5 = 2 mod 3
    assert frobchain.field_det(ctx3, rows) == 2


@pytest.mark.parametrize("q", [2, 3])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_identities(q, data):
    ctx = CTXS[q]
    a, b = data.draw(st.integers(0, ctx.order - 1)), data.draw(st.integers(0, ctx.order - 1))
    r = frobchain.identity_checks(ctx, a, b)
    assert r.gamma_alternating and r.A_expansion and r.shift_identity_minus
    assert r.p2_is_p1_frob3 and r.p2_minus_p1_is_A
    if q == 2:
        assert r.shift_identity_plus and r.p1_plus_p2_is_A
