"""Arithmetic in GF(q^6), q = p^h, as a single extension GF(p)[t]/(modulus).

Elements are plain Python ints: the coefficient vector ``(c_0, ..., c_{6h-1})``
of ``sum c_i t^i`` is encoded as ``sum c_i p^i``.  This is also the hex wire
form used by the CLI, and it depends on the chosen modulus.

Multiplication goes through discrete log / antilog tables built once per
context; addition uses XOR in characteristic 2 and Zech logarithms otherwise.
Both have a scalar form (``mul``) working on ints and an array form (``vmul``)
working on numpy integer arrays of any shape.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

TABLE_BUDGET = 1 << 22  # largest q^6 for which log tables are built


class FieldError(ValueError):
    pass


class NonPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class BadSubfieldIndex(FieldError):
    pass


class BudgetExceeded(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, h)`` with ``q = p^h``; raises NonPrime if q is no prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            h = 0
            r = q
            while r % p == 0:
                r //= p
                h += 1
            if r != 1 or not is_prime(p):
                raise NonPrime(f"{q} is not a prime power")
            return p, h
    raise NonPrime(f"{q} is not a prime power")


# --- dense polynomials over GF(p), lowest degree first ---------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _ptrim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Rabin's test; modulus is monic, lowest degree first."""
    n = len(modulus) - 1
    x = [0, 1]
    if _ppowmod(x, p ** n, modulus, p) != _ptrim(list(x)):
        return False
    for k in range(1, n):
        if n % k:
            continue
        xk = _ppowmod(x, p ** k, modulus, p)
        diff = list(xk) + [0] * max(0, 2 - len(xk))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(modulus, diff, p)) != 1:
            return False
    return True


def smallest_irreducible(n: int, p: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree n.

    Candidates are ordered by the integer ``sum c_i p^i`` of their lower
    coefficients, so for p=2, n=6 the first hit is t^6 + t + 1.
    """
    for code in range(p ** n):
        coeffs = [(code // p ** i) % p for i in range(n)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible(coeffs, p):
            return coeffs
    raise NotIrreducible(f"no irreducible of degree {n} over GF({p})")  # unreachable


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable description of GF(p) < GF(q) < GF(q^2) < GF(q^6)."""

    p: int
    h: int
    modulus: tuple[int, ...]
    q: int = field(init=False)
    n: int = field(init=False)
    order: int = field(init=False)
    frobenius_matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p ** self.h)
        object.__setattr__(self, "n", 6 * self.h)
        object.__setattr__(self, "order", self.p ** (6 * self.h))
        self._build_frobenius()
        if self.order <= TABLE_BUDGET:
            self._build_tables()
        else:
            object.__setattr__(self, "_exp", None)

    # -- construction ----------------------------------------------------

    def _build_frobenius(self):
        n, p = self.n, self.p
        mod = list(self.modulus)
        xq = _ppowmod([0, 1], self.q, mod, p)
        cols = []
        cur = [1]
        for _ in range(n):
            col = list(cur) + [0] * (n - len(cur))
            cols.append(col)
            cur = _pmulmod(cur, xq, mod, p)
        mat = np.array(cols, dtype=np.int64).T  # column i = (t^i)^q
        mat.setflags(write=False)
        object.__setattr__(self, "frobenius_matrix", mat)
        pw = np.array([p ** i for i in range(n)], dtype=np.int64)
        object.__setattr__(self, "_powers", pw)

    def _slow_mul(self, x: int, y: int) -> int:
        return self.from_coeffs(_pmulmod(self.coeffs(x), self.coeffs(y),
                                         list(self.modulus), self.p))

    def _build_tables(self):
        N = self.order
        gen = self._find_generator()
        exp = np.zeros(2 * N, dtype=np.int64)
        log = np.full(N, -1, dtype=np.int64)
        # powers of the generator by repeated multiplication in coefficient form
        mod = list(self.modulus)
        g = self.coeffs(gen)
        cur = [1]
        for k in range(N - 1):
            v = self.from_coeffs(cur)
            exp[k] = v
            log[v] = k
            cur = _pmulmod(cur, g, mod, self.p)
        exp[N - 1: 2 * (N - 1)] = exp[: N - 1]
        exp.setflags(write=False)
        log.setflags(write=False)
        object.__setattr__(self, "generator", gen)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_expl", exp.tolist())
        object.__setattr__(self, "_logl", log.tolist())
        digits = (np.arange(N)[:, None] // self._powers[None, :]) % self.p
        if self.p != 2:
            neg = ((-digits) % self.p) @ self._powers
            one_plus = ((digits + np.eye(1, self.n, 0, dtype=np.int64)) % self.p) @ self._powers
            # zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
            zech = log[one_plus[exp[: N - 1]]]
            neg.setflags(write=False)
            zech.setflags(write=False)
            object.__setattr__(self, "_neg", neg)
            object.__setattr__(self, "_negl", neg.tolist())
            object.__setattr__(self, "_zech", zech)
            object.__setattr__(self, "_zechl", zech.tolist())
        frob_tab = self._apply_matrix_all(digits)
        frob_tab.setflags(write=False)
        object.__setattr__(self, "_frob", frob_tab)
        object.__setattr__(self, "_frobl", frob_tab.tolist())

    def _apply_matrix_all(self, digits):
        imgs = (digits @ self.frobenius_matrix.T) % self.p
        return imgs @ self._powers

    def _find_generator(self) -> int:
        N = self.order
        mod = list(self.modulus)
        factors = prime_factors(N - 1)
        for cand in range(2, N):
            c = self.coeffs(cand)
            if all(_ppowmod(c, (N - 1) // r, mod, self.p) != [1] for r in factors):
                return cand
        return 1  # GF(2) only; not reachable for degree >= 6

    # -- encoding ----------------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.n)]

    def from_coeffs(self, c) -> int:
        return sum(int(ci) % self.p * self.p ** i for i, ci in enumerate(c))

    def to_hex(self, x: int) -> str:
        return format(int(x), "x")

    def from_hex(self, s: str) -> int:
        v = int(s, 16)
        if not 0 <= v < self.order:
            raise FieldError(f"{s} out of range for GF({self.q}^6)")
        return v

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @property
    def tabled(self) -> bool:
        return self._exp is not None

    # -- scalar arithmetic -------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if x == 0:
            return y
        if y == 0:
            return x
        if not self.tabled:
            return self.from_coeffs([a + b for a, b in zip(self.coeffs(x), self.coeffs(y))])
        lx, ly = self._logl[x], self._logl[y]
        z = self._zechl[(ly - lx) % (self.order - 1)]
        return 0 if z < 0 else self._expl[(lx + z) % (self.order - 1)]

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        if not self.tabled:
            return self.from_coeffs([-c for c in self.coeffs(x)])
        return self._negl[x]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if not self.tabled:
            return self._slow_mul(x, y)
        return self._expl[self._logl[x] + self._logl[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        if not self.tabled:
            return self.pow(x, self.order - 2)
        return self._expl[(-self._logl[x]) % (self.order - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e == 0:
            return 1
        if x == 0:
            return 0
        if not self.tabled:
            mod = list(self.modulus)
            return self.from_coeffs(_ppowmod(self.coeffs(x), e % (self.order - 1), mod, self.p))
        return self._expl[(self._logl[x] * e) % (self.order - 1)]

    def scalar(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    def smul(self, k: int, x: int) -> int:
        """k * x for an integer k."""
        return self.mul(self.scalar(k), x)

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs) -> int:
        acc = 1
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    # -- Frobenius, subfields, traces ---------------------------------------

    def frob1_matrix(self, x: int) -> int:
        v = np.array(self.coeffs(x), dtype=np.int64)
        return int(((self.frobenius_matrix @ v) % self.p) @ self._powers)

    def frob(self, x: int, i: int = 1) -> int:
        """x^(q^i), i taken mod 6."""
        i %= 6
        if self.tabled:
            f = self._frobl
            for _ in range(i):
                x = f[x]
            return x
        for _ in range(i):
            x = self.frob1_matrix(x)
        return x

    def conjugates(self, x: int) -> list[int]:
        """[x, x^q, ..., x^(q^5)]."""
        out = [x]
        for _ in range(5):
            out.append(self.frob(out[-1]))
        return out

    def in_subfield(self, x: int, e: int) -> bool:
        if e not in (1, 2, 3, 6):
            raise BadSubfieldIndex(e)
        return self.frob(x, e) == x

    def trace_to_subfield(self, x: int, e: int) -> int:
        if e not in (1, 2, 3):
            raise BadSubfieldIndex(e)
        acc = 0
        y = x
        for _ in range(6 // e):
            acc = self.add(acc, y)
            y = self.frob(y, e)
        return acc

    def norm(self, x: int) -> int:
        return self.prod(self.conjugates(x))

    def subfield_elements(self, e: int) -> list[int]:
        if e not in (1, 2, 3, 6):
            raise BadSubfieldIndex(e)
        if self.tabled:
            els = self.elements()
            fe = self.vfrob(els, e)
            return els[fe == els].tolist()
        return [x for x in range(self.order) if self.in_subfield(x, e)]

    # -- array arithmetic (numpy int64 arrays, broadcasting) ---------------

    def _need_tables(self):
        if not self.tabled:
            raise BudgetExceeded(f"q^6 = {self.order} exceeds table budget {TABLE_BUDGET}")

    def vadd(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return x ^ y
        self._need_tables()
        x, y = np.broadcast_arrays(x, y)
        lx = self._log[x]
        ly = self._log[y]
        z = self._zech[(ly - lx) % (self.order - 1)]
        out = np.where(z < 0, 0, self._exp[(lx + np.maximum(z, 0)) % (self.order - 1)])
        out = np.where(x == 0, y, out)
        out = np.where(y == 0, x, out)
        return out

    def vneg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return x
        self._need_tables()
        return self._neg[x]

    def vsub(self, x, y):
        return self.vadd(x, self.vneg(y))

    def vmul(self, x, y):
        self._need_tables()
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = self._exp[self._log[x] + self._log[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def vinv(self, x):
        self._need_tables()
        x = np.asarray(x, dtype=np.int64)
        out = self._exp[(-self._log[x]) % (self.order - 1)]
        return np.where(x == 0, 0, out)  # 0 maps to 0; callers mask

    def vpow(self, x, e: int):
        self._need_tables()
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones_like(x)
        out = self._exp[(self._log[x] * e) % (self.order - 1)]
        return np.where(x == 0, 0, out)

    def vfrob(self, x, i: int = 1):
        self._need_tables()
        x = np.asarray(x, dtype=np.int64)
        for _ in range(i % 6):
            x = self._frob[x]
        return x

    def vsum(self, arrays):
        acc = None
        for a in arrays:
            acc = a if acc is None else self.vadd(acc, a)
        return acc


def build_ctx(p: int, h: int, modulus_override=None) -> FieldCtx:
    if not is_prime(p):
        raise NonPrime(p)
    if h < 1:
        raise FieldError("h must be positive")
    n = 6 * h
    if modulus_override is not None:
        mod = [int(c) % p for c in modulus_override]
        if len(mod) != n + 1:
            raise DegreeMismatch(f"modulus has degree {len(mod) - 1}, expected {n}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not is_irreducible(mod, p):
            raise NotIrreducible(mod)
    else:
        mod = _default_modulus(n, p)
    return _ctx_cached(p, h, tuple(mod))


@lru_cache(maxsize=None)
def _default_modulus(n: int, p: int) -> list[int]:
    return smallest_irreducible(n, p)


@lru_cache(maxsize=16)
def _ctx_cached(p: int, h: int, mod: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, h, mod)


def ctx_for_q(q: int, modulus_override=None) -> FieldCtx:
    p, h = split_prime_power(q)
    return build_ctx(p, h, modulus_override)


def parse_modulus(text: str) -> list[int]:
    """``'1,1,0,0,0,0,1'`` (lowest degree first) -> coefficient list."""
    return [int(c) for c in text.replace(" ", "").split(",") if c != ""]


# --- quantities from the secant construction --------------------------------

def gamma_of(ctx: FieldCtx, b: int) -> int:
    """gamma = b + b^q."""
    return ctx.add(b, ctx.frob(b))


def alternating_gamma_sum(ctx: FieldCtx, g: int) -> int:
    """g - g^q + g^{q^2} - ... - g^{q^5}; vanishes when g = b + b^q."""
    acc = 0
    for i, c in enumerate(ctx.conjugates(g)):
        acc = ctx.add(acc, c) if i % 2 == 0 else ctx.sub(acc, c)
    return acc


def capital_A(ctx: FieldCtx, a: int) -> int:
    """A = Tr_{q^2}^{q^6}(a^{q+1} - a^{q^2+q})."""
    c = ctx.conjugates(a)
    t = ctx.sub(ctx.mul(c[1], c[0]), ctx.mul(c[2], c[1]))
    return ctx.trace_to_subfield(t, 2)


def v_capital_A(ctx: FieldCtx, a):
    a = np.asarray(a, dtype=np.int64)
    a1 = ctx.vfrob(a, 1)
    a2 = ctx.vfrob(a1, 1)
    t = ctx.vsub(ctx.vmul(a1, a), ctx.vmul(a2, a1))
    return ctx.vadd(ctx.vadd(t, ctx.vfrob(t, 2)), ctx.vfrob(t, 4))


def trace_to_subfield(ctx: FieldCtx, x: int, e: int) -> int:
    return ctx.trace_to_subfield(x, e)


def in_subfield(ctx: FieldCtx, x: int, e: int) -> bool:
    return ctx.in_subfield(x, e)


def frob(ctx: FieldCtx, x: int, i: int) -> int:
    return ctx.frob(x, i)
