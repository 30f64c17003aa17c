import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcgeom import polys, secant
from arcgeom.fieldtower import ctx_for_q
from arcgeom.secant import SecantQuery

CTXS = {q: ctx_for_q(q) for q in (2, 3, 4)}


def triples(q):
    n = CTXS[q].order - 1
    return st.tuples(st.integers(0, n), st.integers(0, n), st.integers(0, n))


@pytest.mark.parametrize("q", [2, 3, 4])
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_f_vanishes_exactly_on_line_intersections(q, data):
    ctx = CTXS[q]
    a, b, m = data.draw(triples(q))
    sq = SecantQuery(a, b, m)
    f = secant.build_f(ctx, sq)
    for x in data.draw(st.lists(st.integers(0, ctx.order - 1), min_size=4, max_size=4)):
        assert polys.peval(ctx, f, x) == secant.line_residual(ctx, sq, x)


def test_param_is_negation(ctx3):
    assert secant.param(ctx3, 5) == ctx3.neg(5)
    arr = np.array([0, 5, 700])
    assert np.array_equal(secant.param(ctx3, arr), ctx3.vneg(arr))


def test_derivative_is_xq_minus_m(ctx3):
    f = secant.build_f(ctx3, SecantQuery(4, 9, 11))
    d = secant.derivative(ctx3, f)
    want = [ctx3.neg(11)] + [0] * (ctx3.q - 1) + [1]
    assert d == polys.trim([c if i != ctx3.q else ctx3.smul(ctx3.q + 1, 1) for i, c in enumerate(want)])


def test_degenerate_means_split_form_q2(ctx2):
    hits = 0
    for a in range(0, 64, 3):
        for b in range(0, 64, 5):
            for m in range(64):
                sq = SecantQuery(a, b, m)
                split = secant.build_f(ctx2, sq) == secant.split_form(ctx2, m)
                assert split == (secant.degeneracy(ctx2, sq) == 0)
                hits += split
    assert hits > 0


@pytest.mark.parametrize("q", [2, 3])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_gcd_and_exhaustive_root_counts_agree(q, data):
    ctx = CTXS[q]
    a, b, m = data.draw(triples(q))
    f = secant.build_f(ctx, SecantQuery(a, b, m))
    n = secant.count_rational_roots(ctx, f)
    assert n == secant.count_rational_roots(ctx, f, "exhaustive")
    assert n <= q + 1


def test_vector_root_counts_match_scalar(ctx3):
    a, b = 100, 200
    counts = secant.v_root_counts(ctx3, a, b)
    for m in range(0, 729, 37):
        assert counts[m] == secant.count_rational_roots(ctx3, secant.build_f(ctx3, SecantQuery(a, b, m)))


def test_unknown_method(ctx2):
    with pytest.raises(ValueError):
        secant.count_rational_roots(ctx2, [1, 1], "magic")


def test_v_degeneracy_matches_scalar(ctx3):
    for a, b, m in [(1, 2, 3), (700, 5, 9), (0, 0, 0)]:
        assert int(secant.v_degeneracy(ctx3, a, b, m)) == secant.degeneracy(ctx3, SecantQuery(a, b, m))


def test_root_set_matches_oracle_counts_q2(ctx2, orc2):
    for a in range(0, 64, 7):
        for b in range(0, 64, 11):
            counts = secant.v_root_counts(ctx2, a, b)
            assert np.array_equal(counts, orc2.slope_counts(a, b))
