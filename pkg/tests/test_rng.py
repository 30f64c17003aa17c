from hypothesis import given, strategies as st

from arcgeom.rng import SplitMix64


def test_reference_stream():
    assert SplitMix64(1234567).next() == 0x599ED017FB08FC85


def test_reproducible():
    a, b = SplitMix64(9), SplitMix64(9)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]


@given(st.integers(0, 2 ** 64 - 1), st.integers(1, 10 ** 9))
def test_below_in_range(seed, n):
    r = SplitMix64(seed)
    assert all(0 <= r.below(n) < n for _ in range(8))
