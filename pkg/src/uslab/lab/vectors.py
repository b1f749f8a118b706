"""Sparse vectors ``{(exponent_tuple, basis_index): scalar}`` and the commutative
polynomial helpers (shifts, variable multiplication) used by every module."""
from __future__ import annotations

from functools import lru_cache
from math import comb

from gmpy2 import mpq

from uslab import scalars
from uslab.scalars import norm


def clean(v: dict) -> dict:
    out = {}
    for k, c in v.items():
        c = norm(c)
        if not scalars.is_zero(c):
            out[k] = c
    return out


def add_into(out: dict, key, c):
    v = out.get(key)
    out[key] = c if v is None else v + c


def vadd(*vs) -> dict:
    out = {}
    for v in vs:
        for k, c in v.items():
            add_into(out, k, c)
    return clean(out)


def vscale(c, v: dict) -> dict:
    c = norm(c)
    if scalars.is_zero(c):
        return {}
    return clean({k: c * x for k, x in v.items()})


def vsub(a: dict, b: dict) -> dict:
    return vadd(a, vscale(-1, b))


def vlin(pairs) -> dict:
    """sum of c * v over (c, v) pairs."""
    out = {}
    for c, v in pairs:
        for k, x in v.items():
            add_into(out, k, c * x)
    return clean(out)


def is_zero(v: dict) -> bool:
    return not clean(v)


def basis_vector(alpha, idx) -> dict:
    return {(tuple(alpha), idx): scalars.ONE}


# -- polynomials as {alpha: scalar} ------------------------------------------

@lru_cache(maxsize=200_000)
def _mono_shift(alpha: tuple, i: int, s: int) -> tuple:
    """Expansion of d^alpha evaluated at d + s e_i, as ((alpha', int coeff), ...)."""
    a = alpha[i]
    out = []
    for t in range(a + 1):
        c = comb(a, t) * s ** (a - t)
        if c:
            lst = list(alpha)
            lst[i] = t
            out.append((tuple(lst), c))
    return tuple(out)


def shift_terms(alpha: tuple, i: int, s: int):
    if s == 0:
        return ((alpha, 1),)
    return _mono_shift(alpha, i, s)


def vec_shift(v: dict, i: int, s: int) -> dict:
    """Replace the polynomial variable i by (var_i + s) in every component."""
    if s == 0:
        return dict(v)
    out = {}
    for (alpha, idx), c in v.items():
        for beta, k in _mono_shift(alpha, i, s):
            add_into(out, (beta, idx), c * k)
    return clean(out)


def vec_mulvar(v: dict, i: int, times: int = 1) -> dict:
    out = {}
    for (alpha, idx), c in v.items():
        lst = list(alpha)
        lst[i] += times
        out[(tuple(lst), idx)] = c
    return out


def vec_mulpoly(v: dict, poly: dict) -> dict:
    out = {}
    for (alpha, idx), c in v.items():
        for beta, p in poly.items():
            add_into(out, (tuple(a + b for a, b in zip(alpha, beta)), idx), c * p)
    return clean(out)


def vec_diff(v: dict, i: int) -> dict:
    """Partial derivative in variable i (for honest polynomial spaces)."""
    out = {}
    for (alpha, idx), c in v.items():
        a = alpha[i]
        if a:
            lst = list(alpha)
            lst[i] -= 1
            add_into(out, (tuple(lst), idx), c * a)
    return clean(out)


def vec_matrix(v: dict, mat) -> dict:
    """Apply a dim x dim matrix on the basis-index side."""
    out = {}
    dim = len(mat)
    for (alpha, idx), c in v.items():
        for row in range(dim):
            m = mat[row][idx]
            if m != 0:
                add_into(out, (alpha, row), c * m)
    return clean(out)


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree <= degree (graded, then lex)."""
    out = []

    def rec(prefix, left, k):
        if k == nvars:
            out.append(tuple(prefix))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, k + 1)

    for d in range(degree + 1):
        level = []
        out_before = len(out)
        rec([], d, 0)
        level = [a for a in out[out_before:] if sum(a) == d]
        del out[out_before:]
        out.extend(sorted(level, reverse=True))
    return out


def random_poly_vector(rng, nvars: int, dim: int, degree: int = 3, terms: int = 3) -> dict:
    out = {}
    for _ in range(terms):
        alpha = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            alpha[rng.randrange(nvars)] += 1
        c = mpq(rng.randint(-4, 4), rng.randint(1, 3))
        add_into(out, (tuple(alpha), rng.randrange(dim)), c)
    return clean(out)


def keys_sorted(vectors) -> list:
    return sorted({k for v in vectors for k in v}, key=lambda k: (sum(abs(x) for x in k[0]), k))


def coordinates(vectors, keys) -> list[list]:
    """Rows = keys, columns = vectors."""
    pos = {k: i for i, k in enumerate(keys)}
    rows = [[scalars.ZERO] * len(vectors) for _ in keys]
    for j, v in enumerate(vectors):
        for k, c in v.items():
            rows[pos[k]][j] = c
    return rows
