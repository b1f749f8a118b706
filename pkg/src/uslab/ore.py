"""The localization U_S = U(sl_{n+1})[e_{01}^{-1}, ..., e_{0n}^{-1}].

Inverses are carried as negative exponents on the E(0,k) slots of the same
PBW monomials; local nilpotency of ad e_{0k} makes the rewriting
e^{-m} a = sum_j (-1)^j C(m+j-1, j) (ad e)^j(a) e^{-m-j} finite.
"""
from __future__ import annotations

from uslab.pbw import AlgebraElement, E, Generator, as_element

LocalizedElement = AlgebraElement


def commute_past_inverse(a: AlgebraElement, k: int, m: int = 1) -> AlgebraElement:
    """Normal form of e_{0k}^{-m} * a."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if a.has_negative_exponents():
        raise ValueError("commute_past_inverse expects an element of U")
    return a.lie.e0(k, -m) * a


def localize_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Canonical product in U_S."""
    return a * b


def commutes_with(a: AlgebraElement, gens) -> bool:
    lie = a.lie
    for g in gens:
        ge = as_element(lie, g)
        if not (a * ge - ge * a).is_zero():
            return False
    return True


def b_generators(n: int):
    """Generators h_i, e_{0k} of the tensor factor B (inverses implied)."""
    from uslab.pbw import H

    return [H(i) for i in range(1, n + 1)] + [E(0, k) for k in range(1, n + 1)]


def is_b_monomial(lie, mono) -> bool:
    return all(e == 0 for e in mono[: lie.h_start])


def e0_power(lie, r) -> AlgebraElement:
    """e_{01}^{r_1} ... e_{0n}^{r_n} for an integer vector r."""
    out = lie.one()
    for k, e in enumerate(r, start=1):
        if e:
            out = out * lie.e0(k, e)
    return out


__all__ = [
    "LocalizedElement",
    "commute_past_inverse",
    "localize_multiply",
    "commutes_with",
    "b_generators",
    "is_b_monomial",
    "e0_power",
    "Generator",
]
