"""Small dense univariate polynomials over GF(q^6) and mod-p linear algebra.

Polynomials are lists of field ints, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import numpy as np

from .fieldtower import FieldCtx


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: list[int]) -> int:
    return len(trim(f)) - 1


def padd(ctx: FieldCtx, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim([ctx.add(x, y) for x, y in zip(f, g)])


def psub(ctx: FieldCtx, f, g):
    return padd(ctx, f, [ctx.neg(c) for c in g])


def pmul(ctx: FieldCtx, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return trim(out)


def pdivmod(ctx: FieldCtx, f, g):
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = ctx.inv(g[-1])
    quot = [0] * max(0, len(f) - len(g) + 1)
    rem = list(f)
    while len(rem) >= len(g):
        c = ctx.mul(rem[-1], inv_lead)
        shift = len(rem) - len(g)
        quot[shift] = c
        for i, gi in enumerate(g):
            rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, gi))
        rem = trim(rem)
    return trim(quot), rem


def pmod(ctx: FieldCtx, f, g):
    return pdivmod(ctx, f, g)[1]


def pgcd(ctx: FieldCtx, f, g):
    """Monic gcd."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, pmod(ctx, f, g)
    if not f:
        return []
    inv = ctx.inv(f[-1])
    return [ctx.mul(c, inv) for c in f]


def peval(ctx: FieldCtx, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def vpeval(ctx: FieldCtx, f, x):
    """Horner over an array of points; coefficients may be arrays too."""
    acc = np.zeros(np.shape(x), dtype=np.int64)
    for c in reversed(f):
        acc = ctx.vadd(ctx.vmul(acc, x), c)
    return acc


# --- linear algebra over GF(p) on int64 matrices ---------------------------

def rref_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows of the returned array span the right kernel of ``mat``."""
    m, pivots = rref_mod_p(mat, p)
    n = m.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i, f]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), n)


def solver_mod_p(mat: np.ndarray, p: int):
    """Return ``(S, C)``: for rhs b, ``x = S b`` solves ``mat x = b`` iff ``C b == 0``."""
    rows, cols = mat.shape
    aug = np.concatenate([np.array(mat, dtype=np.int64) % p,
                          np.eye(rows, dtype=np.int64)], axis=1)
    red, pivots = rref_mod_p(aug, p)
    pivots = [c for c in pivots if c < cols]
    r = len(pivots)
    S = np.zeros((cols, rows), dtype=np.int64)
    for i, pc in enumerate(pivots):
        S[pc] = red[i, cols:]
    C = red[r:, cols:]
    return S, C


class Inconsistent(ValueError):
    pass


def solve_field(ctx: FieldCtx, rows, rhs) -> tuple[list[int] | None, int]:
    """Gaussian elimination over the field.

    Returns ``(x, rank)``; ``x`` is None when the system has more than one
    solution.  Raises :class:`Inconsistent` when it has none.
    """
    n = len(rows[0])
    M = [list(r) + [v] for r, v in zip(rows, rhs)]
    r = 0
    for col in range(n):
        k = next((i for i in range(r, len(M)) if M[i][col]), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = ctx.inv(M[r][col])
        M[r] = [ctx.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(M[i], M[r])]
        r += 1
    if any(M[i][n] for i in range(r, len(M))):
        raise Inconsistent(f"rank {r}, {len(M)} equations")
    if r < n:
        return None, r
    return [M[i][n] for i in range(n)], r
