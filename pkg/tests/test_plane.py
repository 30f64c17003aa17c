import itertools

import pytest
from hypothesis import given, settings, strategies as st

from arcgeom import plane


def test_num_points(ctx2, ctx3):
    assert plane.num_points(ctx2) == 4161
    assert plane.num_points(ctx3) == 532171
    assert sum(1 for _ in plane.all_points(ctx2)) == 4161


def test_normalization(ctx3):
    P = plane.point(ctx3, 5, 7, 2)
    assert next(c for c in P if c) == 1
    assert plane.point(ctx3, *P) == P
    with pytest.raises(plane.ZeroTriple):
        plane.point(ctx3, 0, 0, 0)


def test_line_through_and_meet(ctx2):
    P, Q = plane.point(ctx2, 1, 2), plane.point(ctx2, 3, 4)
    L = plane.line_through(ctx2, P, Q)
    assert plane.incident(ctx2, P, L) and plane.incident(ctx2, Q, L)
    M = plane.line_through(ctx2, P, plane.point(ctx2, 9, 9))
    assert plane.meet(ctx2, L, M) == P
    with pytest.raises(plane.EqualPoints):
        plane.line_through(ctx2, P, P)


def test_pencils_have_q6_plus_1_members(ctx2):
    L = plane.affine_line(ctx2, 5, 1, 2)
    pts = list(plane.points_on(ctx2, L))
    assert len(pts) == len(set(pts)) == ctx2.order + 1
    assert all(plane.incident(ctx2, P, L) for P in pts)
    P = plane.point(ctx2, 3, 4)
    lines = list(plane.lines_through(ctx2, P))
    assert len(lines) == len(set(lines)) == ctx2.order + 1
    assert all(plane.incident(ctx2, P, M) for M in lines)


def test_pencil_order_is_lexicographic(ctx2):
    pts = list(plane.points_on(ctx2, plane.LINE_AT_INFINITY))
    assert pts == sorted(pts)


def test_affine_line_contains_base_point(ctx3):
    for m, a, b in [(0, 1, 2), (7, 100, 3), (728, 5, 5)]:
        L = plane.affine_line(ctx3, m, a, b)
        assert plane.incident(ctx3, (a, b, 1), L)
        assert plane.incident(ctx3, (1, m, 0), L)


def test_text_form_round_trip(ctx3):
    P = plane.point(ctx3, 10, 255, 1)
    assert plane.parse(ctx3, plane.fmt(ctx3, P)) == P
    with pytest.raises(ValueError):
        plane.parse(ctx3, "1:2")


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 63), min_size=6, max_size=6))
def test_duality_and_unique_join(ctx2, v):
    P, Q = (v[0], v[1], 1), (v[2], v[3], v[4] % 2)
    if Q == (0, 0, 0):
        Q = (1, 0, 0)
    P, Q = plane.point(ctx2, *P), plane.point(ctx2, *Q)
    if P == Q:
        return
    L = plane.line_through(ctx2, P, Q)
    # duality: P on L iff L on P with roles swapped
    assert plane.incident(ctx2, L, P)
    common = [M for M in plane.lines_through(ctx2, P) if plane.incident(ctx2, Q, M)]
    assert common == [L]


def test_two_points_one_line_sampled_triples(ctx2):
    pts = [plane.point(ctx2, x, y) for x, y in itertools.product(range(0, 64, 9), range(0, 64, 13))]
    for P, Q, R in itertools.islice(itertools.combinations(pts, 3), 200):
        L = plane.line_through(ctx2, P, Q)
        collinear = plane.incident(ctx2, R, L)
        assert collinear == (plane.line_through(ctx2, P, R) == L)
