import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcgeom import fieldtower as ft
from arcgeom.fieldtower import ctx_for_q


CTXS = {q: ctx_for_q(q) for q in (2, 3, 4)}


def elems(q):
    return st.integers(0, CTXS[q].order - 1)


def test_default_modulus_q2_is_t6_t_1():
    assert list(CTXS[2].modulus) == [1, 1, 0, 0, 0, 0, 1]


@pytest.mark.parametrize("q,p,h", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2)])
def test_split_prime_power(q, p, h):
    assert ft.split_prime_power(q) == (p, h)


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_split_rejects_non_prime_powers(q):
    with pytest.raises(ft.NonPrime):
        ft.split_prime_power(q)


def test_build_ctx_errors():
    with pytest.raises(ft.NonPrime):
        ft.build_ctx(4, 1)
    with pytest.raises(ft.DegreeMismatch):
        ft.build_ctx(2, 1, [1, 1, 1])
    with pytest.raises(ft.NotIrreducible):
        ft.build_ctx(2, 1, [1, 0, 0, 0, 0, 0, 1])       # t^6 + 1 = (t^3 + 1)^2


def test_modulus_override_is_used():
    ctx = ft.build_ctx(2, 1, [1, 0, 0, 1, 0, 0, 1])
    assert ctx.modulus == (1, 0, 0, 1, 0, 0, 1)
    assert ctx.mul(2, ctx.inv(2)) == 1


def test_subfield_index_checked(ctx2):
    with pytest.raises(ft.BadSubfieldIndex):
        ctx2.in_subfield(3, 4)
    with pytest.raises(ft.BadSubfieldIndex):
        ctx2.trace_to_subfield(3, 6)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_subfield_sizes(q):
    ctx = CTXS[q]
    for e in (1, 2, 3, 6):
        assert len(ctx.subfield_elements(e)) == q ** e


def test_hex_round_trip(ctx3):
    for x in (0, 1, 5, 728):
        assert ctx3.from_hex(ctx3.to_hex(x)) == x
    with pytest.raises(ft.FieldError):
        ctx3.from_hex("2d9")                       # 729 is out of range


def test_frob_matches_power_exhaustive(ctx2):
    x = ctx2.elements()
    assert np.array_equal(ctx2.vfrob(x), ctx2.vpow(x, 2))
    assert all(ctx2.frob1_matrix(int(v)) == ctx2.frob(int(v)) for v in x)


def test_frob_ring_hom_exhaustive_q2(ctx2):
    x, y = np.meshgrid(ctx2.elements(), ctx2.elements())
    assert np.array_equal(ctx2.vfrob(x ^ y), ctx2.vfrob(x) ^ ctx2.vfrob(y))
    assert np.array_equal(ctx2.vfrob(ctx2.vmul(x, y)), ctx2.vmul(ctx2.vfrob(x), ctx2.vfrob(y)))


def test_frob_period_six_exhaustive_q2(ctx2):
    x = ctx2.elements()
    y = x
    for _ in range(6):
        y = ctx2.vfrob(y)
    assert np.array_equal(x, y)
    assert all(ctx2.frob(int(v), 7) == ctx2.frob(int(v), 1) for v in x)


def test_field_axioms_exhaustive_q2(ctx2):
    x, y, z = (a.ravel() for a in np.meshgrid(*[ctx2.elements()] * 3))
    assert np.array_equal(ctx2.vmul(ctx2.vmul(x, y), z), ctx2.vmul(x, ctx2.vmul(y, z)))
    assert np.array_equal(ctx2.vmul(x, ctx2.vadd(y, z)), ctx2.vadd(ctx2.vmul(x, y), ctx2.vmul(x, z)))


def test_A_in_fq2_exhaustive_q2(ctx2):
    A = ft.v_capital_A(ctx2, ctx2.elements())
    assert np.array_equal(ctx2.vfrob(A, 2), A)
    assert all(ft.capital_A(ctx2, int(a)) == int(v) for a, v in zip(ctx2.elements(), A))


def test_gamma_of(ctx3):
    b = 17
    assert ft.gamma_of(ctx3, b) == ctx3.add(b, ctx3.frob(b))
    assert ft.alternating_gamma_sum(ctx3, ft.gamma_of(ctx3, b)) == 0


@pytest.mark.parametrize("q", [3, 4])
@settings(max_examples=300, deadline=None)
@given(data=st.data())
def test_field_axioms_sampled(q, data):
    ctx = CTXS[q]
    x, y, z = (data.draw(elems(q)) for _ in range(3))
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.sub(ctx.add(x, y), y) == x
    if x:
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.div(ctx.mul(x, y), x) == y


@pytest.mark.parametrize("q", [3, 4])
@settings(max_examples=300, deadline=None)
@given(data=st.data())
def test_frob_is_ring_hom_sampled(q, data):
    ctx = CTXS[q]
    x, y = data.draw(elems(q)), data.draw(elems(q))
    assert ctx.frob(ctx.add(x, y)) == ctx.add(ctx.frob(x), ctx.frob(y))
    assert ctx.frob(ctx.mul(x, y)) == ctx.mul(ctx.frob(x), ctx.frob(y))
    assert ctx.frob(x) == ctx.pow(x, q)


@pytest.mark.parametrize("q", [2, 3, 4])
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_trace_and_norm_land_in_subfields(q, data):
    ctx = CTXS[q]
    x = data.draw(elems(q))
    for e in (1, 2, 3):
        t = ctx.trace_to_subfield(x, e)
        assert ctx.frob(t, e) == t
    n = ctx.norm(x)
    assert ctx.in_subfield(n, 1)
    assert ctx.in_subfield(ft.capital_A(ctx, x), 2)


@pytest.mark.parametrize("q", [3, 4])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_scalar_and_vector_agree(q, data):
    ctx = CTXS[q]
    x, y = data.draw(elems(q)), data.draw(elems(q))
    assert int(ctx.vadd(x, y)) == ctx.add(x, y)
    assert int(ctx.vmul(x, y)) == ctx.mul(x, y)
    assert int(ctx.vfrob(x, 2)) == ctx.frob(x, 2)
    assert int(ctx.vneg(x)) == ctx.neg(x)


def test_untabled_arithmetic_matches_polynomial_product():
    ctx = CTXS[2]
    # the slow path agrees with the tables
    for x, y in [(3, 5), (63, 17), (40, 41)]:
        assert ctx._slow_mul(x, y) == ctx.mul(x, y)
