"""Exact evaluation of the explicit point-count bounds.

Every bound is a finite sum  sum_i c_i * B_i^{e_i}  with rational c_i, positive
integer bases B_i and rational exponents e_i (q^{5/2}, 60^{13/3}, ...).  Such
a sum is evaluated as an interval with rational endpoints; irrational powers
are bracketed by integer n-th roots at a chosen binary precision, and the
precision is doubled until the sign (or a comparison) is decided.  Exact
powers (perfect squares and so on) come out as zero-width intervals, so exact
zeros are recognised instead of looping.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

MAX_BITS = 1 << 14
GOLDEN = "bounds_golden.json"


def iroot(x: int, n: int) -> int:
    """floor(x^{1/n}) for x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    if n == 1:
        return x
    if n == 2:
        return math.isqrt(x)
    r = 1 << -(-x.bit_length() // n)         # an upper bound
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __add__(self, o: Interval) -> Interval:
        return Interval(self.lo + o.lo, self.hi + o.hi)

    def scale(self, c: Fraction) -> Interval:
        a, b = self.lo * c, self.hi * c
        return Interval(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign(self) -> int | None:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None


def power_interval(base: int, exp: Fraction, bits: int) -> Interval:
    """Rational bracket of base^exp, of width about 2^-bits relative."""
    if base <= 0:
        raise ValueError("base must be positive")
    exp = Fraction(exp)
    num, den = exp.numerator, exp.denominator
    if num < 0:
        inv = power_interval(base, -exp, bits)
        return Interval(1 / inv.hi, 1 / inv.lo)
    x = base ** num
    r = iroot(x, den)
    if r ** den == x:
        return Interval(Fraction(r), Fraction(r))
    scaled = x << (den * bits)
    r = iroot(scaled, den)
    return Interval(Fraction(r, 1 << bits), Fraction(r + 1, 1 << bits))


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    base: int
    exp: Fraction

    def __str__(self) -> str:
        e = "" if self.exp == 1 else f"^({self.exp})"
        return f"{self.coeff}*{self.base}{e}"


@dataclass(frozen=True)
class ExactReal:
    """A finite sum of rational multiples of rational powers of integers."""

    terms: tuple[Term, ...]

    @staticmethod
    def of(*terms: tuple) -> ExactReal:
        out = []
        for c, b, e in terms:
            out.append(Term(Fraction(c), int(b), Fraction(e)))
        return ExactReal(tuple(out))

    def __add__(self, o: ExactReal) -> ExactReal:
        return ExactReal(self.terms + o.terms)

    def __neg__(self) -> ExactReal:
        return ExactReal(tuple(Term(-t.coeff, t.base, t.exp) for t in self.terms))

    def __sub__(self, o: ExactReal) -> ExactReal:
        return self + (-o)

    def interval(self, bits: int = 64) -> Interval:
        acc = Interval(Fraction(0), Fraction(0))
        for t in self.terms:
            acc = acc + power_interval(t.base, t.exp, bits).scale(t.coeff)
        return acc

    def sign(self) -> int:
        bits = 32
        while bits <= MAX_BITS:
            s = self.interval(bits).sign()
            if s is not None:
                return s
            bits *= 2
        raise ArithmeticError("sign undecided; the value may be an inexact zero")

    def compare(self, value) -> int:
        """sign(self - value) for a rational value."""
        return (self - ExactReal.of((Fraction(value), 1, 1))).sign()

    def floor(self) -> int:
        bits = 64
        while bits <= MAX_BITS:
            iv = self.interval(bits)
            lo, hi = math.floor(iv.lo), math.floor(iv.hi)
            if lo == hi:
                return lo
            if iv.hi == hi and self.compare(hi) == 0:
                return hi
            bits *= 2
        raise ArithmeticError("floor undecided")

    def approx(self) -> float:
        iv = self.interval(64)
        return float((iv.lo + iv.hi) / 2)

    def bracket(self, digits: int = 6) -> tuple[str, str]:
        """Decimal strings bracketing the value."""
        iv = self.interval(128)
        return (_dec(iv.lo, digits, math.floor), _dec(iv.hi, digits, math.ceil))

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms)


def _dec(x: Fraction, digits: int, rnd) -> str:
    scale = 10 ** digits
    v = rnd(x * scale)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // scale}.{v % scale:0{digits}d}"


# --- the bounds ---------------------------------------------------------------

@dataclass(frozen=True)
class BoundQuery:
    q: int
    r: int
    delta: int

    def __post_init__(self):
        if self.q < 2 or self.r < 1 or self.delta < 1:
            raise ValueError(f"need q >= 2, r >= 1, delta >= 1: {self}")


@dataclass(frozen=True)
class CafureMatera:
    condition_ok: bool          # q > 2 (r+1) delta^2
    threshold: int              # 2 (r+1) delta^2
    coefficient: int            # (delta-1)(delta-2)
    error: ExactReal            # (delta-1)(delta-2) q^{r-1/2} + 5 delta^{13/3} q^{r-1}
    lower: ExactReal
    upper: ExactReal


def cafure_matera(bq: BoundQuery) -> CafureMatera:
    """Point-count window for an absolutely irreducible variety of dimension r, degree delta."""
    q, r, d = bq.q, bq.r, bq.delta
    coeff = (d - 1) * (d - 2)
    err = ExactReal.of((coeff, q, Fraction(2 * r - 1, 2)), (5 * q ** (r - 1), d, Fraction(13, 3)))
    main = ExactReal.of((1, q, r))
    threshold = 2 * (r + 1) * d * d
    return CafureMatera(q > threshold, threshold, coeff, err, main - err, main + err)


def cafure_threshold(r: int, delta: int) -> int:
    return 2 * (r + 1) * delta * delta


# constants quoted with the two propositions
PROP_A_COEFF = 3422                  # (60-1)(60-2)
PROP_B_COEFF = 1499 * 1500           # as quoted; (1500-1)(1500-2) would be 2245502


def propmain1_lower(q: int) -> ExactReal:
    """q^3 - 3422 q^{5/2} - 5 * 60^{13/3} q^2 - 9 q^2."""
    return ExactReal.of(
        (1, q, 3),
        (-PROP_A_COEFF, q, Fraction(5, 2)),
        (-5 * q * q, 60, Fraction(13, 3)),
        (-9 * q * q, 1, 1),
    )


def propmain2_upper(q: int) -> ExactReal:
    """q^2 + 1499 * 1500 q^{1/2} + 5 * 1500^{13/3} q."""
    return ExactReal.of(
        (q * q, 1, 1),
        (PROP_B_COEFF, q, Fraction(1, 2)),
        (5 * q, 1500, Fraction(13, 3)),
    )


def ultimosez1_lower(q: int) -> ExactReal:
    """propmain1_lower(q) - propmain2_upper(q) - (q + 1)."""
    return propmain1_lower(q) - propmain2_upper(q) - ExactReal.of((q + 1, 1, 1))


def hasse_weil_lower(q: int) -> ExactReal:
    """q + 1 - 2 sqrt(q)."""
    return ExactReal.of((q + 1, 1, 1), (-2, q, Fraction(1, 2)))


def threshold_q_star(lo: int = 2, hi: int | None = None) -> int:
    """Smallest integer q >= lo with ultimosez1_lower(q) > 0.

    The function divided by q^{5/2} is strictly increasing, so its sign
    changes once and bisection on exact signs is valid.
    """
    if ultimosez1_lower(lo).sign() > 0:
        return lo
    hi = hi or lo * 2
    while ultimosez1_lower(hi).sign() <= 0:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ultimosez1_lower(mid).sign() > 0:
            hi = mid
        else:
            lo = mid
    return hi


def is_prime_power(n: int) -> bool:
    from .fieldtower import is_prime
    for h in range(1, n.bit_length() + 1):
        r = iroot(n, h)
        if r < 2:
            break
        if r ** h == n and is_prime(r):
            return True
    return False


def smallest_prime_power_at_least(n: int) -> int:
    k = max(n, 2)
    while not is_prime_power(k):
        k += 1
    return k


# --- tables and golden values -------------------------------------------------

def bound_row(q: int) -> dict:
    out = {"q": q}
    for name, f in (("propmain1_lower", propmain1_lower), ("propmain2_upper", propmain2_upper),
                    ("ultimosez1_lower", ultimosez1_lower), ("hasse_weil_lower", hasse_weil_lower)):
        v = f(q)
        lo, hi = v.bracket(6)
        out[name] = {"lo": lo, "hi": hi, "sign": v.sign()}
    return out


def bound_table(qs) -> list[dict]:
    return [bound_row(q) for q in qs]


def golden_values() -> dict:
    qs = threshold_q_star()
    p4 = propmain2_upper(4)
    return {
        "q_star": qs,
        "q_star_prime_power": smallest_prime_power_at_least(qs),
        "propmain2_upper_4_floor": p4.floor(),
        "propmain2_upper_4_bracket": list(p4.bracket(6)),
    }


def load_golden() -> dict:
    return json.loads(resources.files("arcgeom.data").joinpath(GOLDEN).read_text())
