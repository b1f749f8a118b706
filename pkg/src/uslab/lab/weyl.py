"""The Weyl algebra D_m in normal order x^a d^b, and the map from sl_{n+1}
into D_{n+1} sending e_ij to x_i d_j."""
from __future__ import annotations

from math import comb, prod

from uslab import scalars
from uslab.lab.vectors import add_into, clean
from uslab.pbw import Generator, make_lie_structure
from uslab.scalars import norm


def _falling(a: int, k: int) -> int:
    return prod(range(a - k + 1, a + 1)) if k else 1


class WeylElement:
    """Sum of c * x^a d^b over keys (a, b)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict):
        self.m = m
        self.terms = clean(terms)

    @classmethod
    def x(cls, m, i):
        return cls(m, {(tuple(int(q == i) for q in range(m)), (0,) * m): scalars.ONE})

    @classmethod
    def d(cls, m, i):
        return cls(m, {((0,) * m, tuple(int(q == i) for q in range(m))): scalars.ONE})

    @classmethod
    def scalar(cls, m, c):
        return cls(m, {((0,) * m, (0,) * m): norm(c)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_into(out, k, c)
        return WeylElement(self.m, out)

    def __neg__(self):
        return WeylElement(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WeylElement(self.m, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        m = self.m
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # d^b1 x^a2 = sum_k prod_i C(b1_i,k_i) a2_i^(k_i) x^(a2-k) d^(b1-k)
                partial = [((), (), 1)]
                for i in range(m):
                    nxt = []
                    for ka, kb, w in partial:
                        for k in range(min(b1[i], a2[i]) + 1):
                            nxt.append((ka + (a1[i] + a2[i] - k,), kb + (b1[i] - k + b2[i],),
                                        w * comb(b1[i], k) * _falling(a2[i], k)))
                    partial = nxt
                for ka, kb, w in partial:
                    add_into(out, (ka, kb), c1 * c2 * w)
        return WeylElement(m, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, WeylElement) and (self - other).is_zero()

    __hash__ = None


def euler_field(n: int) -> WeylElement:
    m = n + 1
    out = WeylElement(m, {})
    for i in range(m):
        out = out + WeylElement.x(m, i) * WeylElement.d(m, i)
    return out


def phi(g: Generator, n: int) -> WeylElement:
    """Image of a generator: e_ij -> x_i d_j and h_i -> x_i d_i - E/(n+1)."""
    m = n + 1
    if g.kind == "E":
        return WeylElement.x(m, g.i) * WeylElement.d(m, g.j)
    return WeylElement.x(m, g.i) * WeylElement.d(m, g.i) - euler_field(n).scale(scalars.ONE / (n + 1))


def phi_element(u, n: int) -> WeylElement:
    """Image of an element of U(sl_{n+1}) with nonnegative exponents."""
    lie = u.lie
    out = WeylElement(n + 1, {})
    one = WeylElement.scalar(n + 1, 1)
    for mono, c in u.terms.items():
        t = one
        for a, e in enumerate(mono):
            if e < 0:
                raise ValueError("phi is defined on U only")
            for _ in range(e):
                t = t * phi(lie.generators[a], n)
        out = out + t.scale(c)
    return out


def euler_commutation_defects(n: int) -> list[str]:
    """Generators whose image fails to commute with the Euler field."""
    E = euler_field(n)
    return [str(g) for g in make_lie_structure(n).generators
            if not (E * phi(g, n) - phi(g, n) * E).is_zero()]


def phi_bracket_defects(n: int) -> list[tuple]:
    """Pairs where phi fails to respect the bracket."""
    lie = make_lie_structure(n)
    bad = []
    for g in lie.generators:
        for h in lie.generators:
            lhs = phi_element(lie.bracket(g, h), n)
            rhs = phi(g, n) * phi(h, n) - phi(h, n) * phi(g, n)
            if not (lhs - rhs).is_zero():
                bad.append((str(g), str(h)))
    return bad
