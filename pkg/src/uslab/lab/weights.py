"""Weights of sl_{n+1} in epsilon coordinates, the dot action, and Casimir scalars."""
from __future__ import annotations

from uslab import scalars
from uslab.lab import vectors as vec
from uslab.lab.modules import Module
from uslab.pbw import casimir_element
from uslab.scalars import norm


class NotSumZeroError(ValueError):
    pass


class NotAnEigenvector(ValueError):
    pass


class WeightVector(tuple):
    """(lambda_0, ..., lambda_n) with entries summing to zero."""

    def __new__(cls, entries):
        vals = tuple(norm(x) for x in entries)
        if len(vals) < 2:
            raise ValueError("a weight needs at least two entries")
        if not scalars.is_zero(norm(sum(vals, scalars.ZERO))):
            raise NotSumZeroError(f"entries of {tuple(map(scalars.format_scalar, vals))} do not sum to zero")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self) - 1

    def __str__(self):
        return "(" + ", ".join(scalars.format_scalar(x) for x in self) + ")"


def rho(n: int) -> tuple:
    return tuple(norm(scalars.ONE * (n - 2 * i) / 2) for i in range(n + 1))


def classify_weight(lam) -> tuple[str, str]:
    lam = WeightVector(lam)
    shifted = [norm(x - i) for i, x in enumerate(lam)]
    regular = len(set(shifted)) == len(shifted)
    integral = all(scalars.is_integer(lam[i] - lam[i + 1]) for i in range(lam.n))
    return ("regular" if regular else "singular", "integral" if integral else "non-integral")


def dot_action(w, lam) -> WeightVector:
    """w . lam = w(lam + rho) - rho, with w(eps_j) = eps_{w[j]}."""
    lam = WeightVector(lam)
    n = lam.n
    if sorted(w) != list(range(n + 1)):
        raise ValueError(f"{w} is not a permutation of 0..{n}")
    r = rho(n)
    shifted = [lam[j] + r[j] for j in range(n + 1)]
    out = [scalars.ZERO] * (n + 1)
    for j in range(n + 1):
        out[w[j]] = shifted[j]
    return WeightVector(out[i] - r[i] for i in range(n + 1))


def transposition(n: int, i: int, j: int) -> tuple:
    w = list(range(n + 1))
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def gamma(c, n: int) -> WeightVector:
    """Image of c eps_0 in the sum-zero hyperplane."""
    c = norm(c)
    t = norm(c / (n + 1))
    return WeightVector([norm(n * t)] + [norm(-t)] * n)


def casimir_value(lam) -> object:
    """<lam, lam + 2 rho> for the trace form."""
    lam = WeightVector(lam)
    r = rho(lam.n)
    return norm(sum((x * (x + 2 * y) for x, y in zip(lam, r)), scalars.ZERO))


def casimir_scalar(module: Module, v: dict) -> object:
    v = vec.clean(v)
    if not v:
        raise ValueError("need a nonzero vector")
    w = module.act_element(casimir_element(module.n), v)
    key = next(iter(sorted(v, key=repr)))
    s = norm(w.get(key, scalars.ZERO) / v[key])
    if not vec.is_zero(vec.vsub(w, vec.vscale(s, v))):
        raise NotAnEigenvector("Casimir image is not proportional to the vector")
    return s
