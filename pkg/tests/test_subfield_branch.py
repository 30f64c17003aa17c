import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcgeom import oracle, subfield_branch as sb
from arcgeom.fieldtower import capital_A, ctx_for_q, v_capital_A
from arcgeom.secant import SecantQuery, degeneracy

CTXS = {q: ctx_for_q(q) for q in (2, 3, 4)}


def a_zero(ctx, inside_fq2=False):
    els = ctx.elements()
    az = els[v_capital_A(ctx, els) == 0].tolist()
    return [a for a in az if sb.in_fq2(ctx, a) == inside_fq2]


@pytest.mark.parametrize("q", [2, 3, 4])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_E_is_skew(q, data):
    ctx = CTXS[q]
    a = data.draw(st.integers(0, ctx.order - 1))
    b = data.draw(st.integers(0, ctx.order - 1))
    E = sb.cubic_coeffs(ctx, a, b).E
    assert ctx.frob(E) == ctx.neg(E)


def test_interpolation_equals_transcription_q3(ctx3):
    az = a_zero(ctx3)
    n = 0
    for a in az[:12]:
        for b in (1, 100, 500):
            it = sb.interpolate_cubic_coeffs(ctx3, a, b)
            assert it.shape_ok and it.coeffs == sb.cubic_coeffs(ctx3, a, b)
            n += 1
    assert n == 36


def test_interpolation_underdetermined_q2(ctx2):
    a = a_zero(ctx2)[0]
    with pytest.raises(sb.UnderdeterminedSystem):
        sb.interpolate_cubic_coeffs(ctx2, a, 7)
    it = sb.interpolate_cubic_coeffs(ctx2, a, 7, allow_fallback=True)
    assert it.coeffs is None and it.shape_ok


def test_predicate_matches_oracle_q2_exhaustive(ctx2, orc2):
    checked = 0
    for a in a_zero(ctx2):
        for b in range(64):
            if sb.in_subplane(ctx2, a, b):
                continue
            counts = orc2.slope_counts(a, b)
            forb = sb.forbidden_slope(ctx2, a, b)
            cc = sb.cubic_coeffs(ctx2, a, b)
            for m in ctx2.subfield_elements(2):
                if m == forb:
                    continue
                assert sb.prop2bis_predicate(ctx2, a, b, m, cc) == (counts[m] == 3)
                checked += 1
    assert checked > 0


def test_vector_predicate_matches_scalar_q3(ctx3, orc3):
    az = np.array(a_zero(ctx3)[:20])
    b = (az * 7 + 3) % 729
    pred, valid = sb.v_prop2bis(ctx3, az, b)
    ms = ctx3.subfield_elements(2)
    for i, (x, y) in enumerate(zip(az.tolist(), b.tolist())):
        counts = orc3.slope_counts(x, y)
        for j, m in enumerate(ms):
            if valid[i, j]:
                assert pred[i, j] == sb.prop2bis_predicate(ctx3, x, y, m) == (counts[m] == 4)


def test_predicate_preconditions(ctx3):
    az_out = a_zero(ctx3)[0]
    with pytest.raises(sb.AIsNotZero):
        a_nz = next(a for a in range(729) if capital_A(ctx3, a))
        sb.prop2bis_predicate(ctx3, a_nz, 0, 0)
    a_in = a_zero(ctx3, inside_fq2=True)[1]
    b_in = ctx3.subfield_elements(2)[2]
    with pytest.raises(sb.PointInSubplane):
        sb.prop2bis_predicate(ctx3, a_in, b_in, 0)
    m_out = next(m for m in range(729) if not sb.in_fq2(ctx3, m))
    with pytest.raises(sb.SlopeNotInFq2):
        sb.prop2bis_predicate(ctx3, az_out, 5, m_out)
    b = next(b for b in range(729) if sb.in_fq2(ctx3, sb.forbidden_slope(ctx3, az_out, b)))
    with pytest.raises(sb.ForbiddenSlope):
        sb.prop2bis_predicate(ctx3, az_out, b, sb.forbidden_slope(ctx3, az_out, b))


def test_degenerate_off_subplane_is_forbidden_q2(ctx2):
    for a in range(64):
        for b in range(64):
            if sb.in_subplane(ctx2, a, b):
                continue
            forb = sb.forbidden_slope(ctx2, a, b)
            for m in ctx2.subfield_elements(2):
                if degeneracy(ctx2, SecantQuery(a, b, m)) == 0:
                    assert m == forb


def test_search_agrees_with_oracle(ctx3, orc3):
    for a in a_zero(ctx3)[:15]:
        for b in (0, 11, 400):
            res = sb.subfield_secant_search(ctx3, a, b, orc3)
            counts = orc3.slope_counts(a, b)
            want = sorted(m for m in ctx3.subfield_elements(2) if counts[m] == 4)
            assert res.candidates == want
            assert res.slope == (want[0] if want else None)


def test_pullback_counts_zeros(ctx3):
    xi = sb.normal_basis_fq2(ctx3)
    assert not ctx3.in_subfield(ctx3.div(ctx3.frob(xi), xi), 1)
    for a in a_zero(ctx3)[:10]:
        cc = sb.cubic_coeffs(ctx3, a, 77)
        n, slopes = sb.pullback_points(ctx3, cc)
        zeros = [m for m in sorted(ctx3.subfield_elements(2)) if sb.g_value(ctx3, cc, m, ctx3.frob(m)) == 0]
        assert (n, slopes) == (len(zeros), zeros)


# --- C = 0 ------------------------------------------------------------------

def test_czero_inputs_exist():
    assert len(sb.czero_inputs(CTXS[2])) == 576


@pytest.mark.parametrize("q,limit", [(2, None), (3, 60)])
def test_czero_claims(q, limit):
    ctx = CTXS[q]
    for r in sb.czero_sweep(ctx, limit):
        assert r.czero_bis_ok and r.aq5_sign_fixed_ok
        assert r.proportional and r.kappa_observed_ok
        assert r.h2_root_count == q
        if q % 2 == 0:
            assert r.aq5_ok


def test_czero_stated_sign_fails_q3():
    assert not any(r.aq5_ok for r in sb.czero_sweep(CTXS[3], 20))


def test_factor_scalars_agree_on_sign_in_char2(ctx2):
    for a, _ in sb.czero_inputs(ctx2, 20):
        stated, observed = sb.factor_scalars(ctx2, a)
        assert stated != 0 and observed != 0


def test_czero_precondition(ctx3):
    with pytest.raises(sb.PreconditionUnsatisfiable):
        sb.czero_factorization_check(ctx3, 0, 0)
