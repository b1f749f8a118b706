"""Modules built from W-modules: G(V) = U(h) (x) V, the lattice module
G_1(V), the weighting-functor window, and the scans run on them."""
from __future__ import annotations

import itertools

from gmpy2 import mpq

from uslab import linalg, scalars
from uslab.lab import vectors as vec
from uslab.lab.modules import Module
from uslab.lab.wmodule import WModuleData
from uslab.pbw import E, Generator, H
from uslab.scalars import norm
from uslab.walgebra import OMEGA, X


def _unit(n, i, s=1):
    return tuple(s if q == i - 1 else 0 for q in range(n))


def _plus(r, d):
    return tuple(a + b for a, b in zip(r, d))


class GModule(Module):
    """U(h_n) (x) V; keys are (h-exponent tuple, basis index)."""

    def __init__(self, V: WModuleData):
        self.V = V
        self.n = V.n
        self.name = "G(V)"
        self.invertible_e0 = True

    def _w(self, g, v):
        return vec.vec_matrix(v, self.V.mats[g])

    def act(self, g: Generator, v: dict) -> dict:
        n = self.n
        if g.kind == "H":
            if g.i == 0:
                return vec.vscale(-1, vec.vadd(*(self.act(H(k), v) for k in range(1, n + 1))))
            return vec.vec_mulvar(v, g.i - 1)
        i, j = g.i, g.j
        if i == 0:
            return vec.vec_shift(v, j - 1, 1)
        if j == 0:
            k = i
            w = vec.vec_shift(v, k - 1, -1)
            hk = vec.vec_mulvar(w, k - 1)
            parts = [self._w(OMEGA(k), w), vec.vscale(-1, vec.vsub(vec.vec_mulvar(hk, k - 1), hk))]
            for jj in range(1, n + 1):
                if jj == k:
                    continue
                u = vec.vec_shift(v, jj - 1, -1)
                u = vec.vsub(vec.vec_mulvar(u, jj - 1), u)
                parts.append(vec.vscale(-1, self.act(E(k, jj), u)))
            return vec.vadd(*parts)
        w = vec.vec_shift(vec.vec_shift(v, i - 1, -1), j - 1, 1)
        return vec.vadd(self._w(X(i, j), w), vec.vec_mulvar(w, i - 1))

    def act_e0_inverse(self, k: int, v: dict) -> dict:
        return vec.vec_shift(v, k - 1, -1)

    def random_vector(self, rng) -> dict:
        return vec.random_poly_vector(rng, self.n, self.V.dim, degree=2)

    def truncation(self, degree: int):
        return [vec.basis_vector(a, b) for a in vec.monomials_up_to(self.n, degree) for b in range(self.V.dim)]


def G_act(g: Generator, v: dict, V: WModuleData) -> dict:
    return GModule(V).act(g, v)


class G1Module(Module):
    """Laurent polynomials in the e_{0k} tensored with V; keys are (r, index).

    The h_k act on e^r (x) v by mu_k - r_k.
    """

    def __init__(self, V: WModuleData, mu):
        if len(mu) != V.n:
            raise ValueError(f"mu needs {V.n} entries")
        self.V = V
        self.n = V.n
        self.mu = tuple(norm(x) for x in mu)
        self.name = "G1(V)"
        self.invertible_e0 = True
        self._mu_sum = norm(sum(self.mu, scalars.ZERO))

    def _apply(self, r, idx, c, mat_terms, target, out):
        """out[target, row] += c * (sum s * M)[row, idx]."""
        for s, mat in mat_terms:
            for row in range(self.V.dim):
                m = mat[row][idx] if mat is not None else int(row == idx)
                if m != 0:
                    vec.add_into(out, (target, row), c * s * m)

    def act(self, g: Generator, v: dict) -> dict:
        n, mu, V = self.n, self.mu, self.V
        out = {}
        if g.kind == "H":
            if g.i == 0:
                return vec.vscale(-1, vec.vadd(*(self.act(H(k), v) for k in range(1, n + 1))))
            for (r, idx), c in v.items():
                vec.add_into(out, (r, idx), c * (mu[g.i - 1] - r[g.i - 1]))
            return vec.clean(out)
        i, j = g.i, g.j
        for (r, idx), c in v.items():
            if i == 0:
                out[(_plus(r, _unit(n, j)), idx)] = c
            elif j == 0:
                l = i
                terms = [(scalars.ONE, V.mats[OMEGA(l)])]
                for jj in range(1, n + 1):
                    if jj != l:
                        terms.append((-(mu[jj - 1] - r[jj - 1]), V.mats[X(l, jj)]))
                r_sum = sum(r)
                terms.append((-(self._mu_sum - r_sum) * (mu[l - 1] - r[l - 1] + 1), None))
                self._apply(r, idx, c, terms, _plus(r, _unit(n, l, -1)), out)
            else:
                target = _plus(_plus(r, _unit(n, i, -1)), _unit(n, j))
                terms = [(scalars.ONE, V.mats[X(i, j)]), (mu[i - 1] - r[i - 1] + 1, None)]
                self._apply(r, idx, c, terms, target, out)
        return vec.clean(out)

    def act_e0_inverse(self, k: int, v: dict) -> dict:
        return {(_plus(r, _unit(self.n, k, -1)), idx): c for (r, idx), c in v.items()}

    def random_vector(self, rng) -> dict:
        out = {}
        for _ in range(3):
            r = tuple(rng.randint(-2, 2) for _ in range(self.n))
            vec.add_into(out, (r, rng.randrange(self.V.dim)), mpq(rng.randint(-4, 4), rng.randint(1, 3)))
        return vec.clean(out)

    def slice_basis(self, r):
        return [vec.basis_vector(r, b) for b in range(self.V.dim)]

    def transition_matrix(self, g: Generator, r, target=None) -> list:
        """Matrix of g from the slice at r to the slice it lands in."""
        images = [self.act(g, b) for b in self.slice_basis(tuple(r))]
        if target is None:
            target = next((k[0] for img in images for k in img), None)
            if target is None:
                return linalg.zeros(self.V.dim)
        for img in images:
            if any(k[0] != target for k in img):
                raise ValueError("generator does not map slices to slices")
        return [[img.get((target, row), scalars.ZERO) for img in images] for row in range(self.V.dim)]


def G1_act(g: Generator, v: dict, V: WModuleData, mu) -> dict:
    return G1Module(V, mu).act(g, v)


def root_of(g: Generator, n: int) -> tuple:
    """Shift of h-weights caused by a root vector."""
    if g.kind == "H":
        return (0,) * n
    i, j = g.i, g.j
    out = [0] * n
    if i:
        out[i - 1] += 1
    if j:
        out[j - 1] -= 1
    return tuple(out)


class WeightWindow(Module):
    """Weighting functor applied to G(V), restricted to u + Z^n.

    Keys are (z, index) with the slice sitting at weight u + z; vectors are
    allowed anywhere but ``in_window`` reports whether a key lies within radius.
    """

    def __init__(self, V: WModuleData, u, radius: int = 3):
        self.V = V
        self.n = V.n
        self.u = tuple(norm(x) for x in u)
        self.radius = radius
        self.name = "weighting window"
        self._G = GModule(V)
        self._cache = {}

    def in_window(self, z) -> bool:
        return all(abs(x) <= self.radius for x in z)

    def points(self):
        return list(itertools.product(range(-self.radius, self.radius + 1), repeat=self.n))

    def slice_matrix(self, g: Generator, z) -> list:
        """Matrix of g from slice u+z to slice u+z+root(g)."""
        key = (g, z)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        n = self.n
        target = tuple(a + b for a, b in zip(self.u, _plus(z, root_of(g, n))))
        if g.kind == "H":
            val = self.u[g.i - 1] + z[g.i - 1] if g.i else -sum(self.u[k] + z[k] for k in range(n))
            mat = linalg.matscale(val, linalg.identity(self.V.dim))
        else:
            mat = linalg.zeros(self.V.dim)
            for b in range(self.V.dim):
                img = self._G.act(g, vec.basis_vector((0,) * n, b))
                for (alpha, row), c in img.items():
                    term = c
                    for t, e in zip(target, alpha):
                        term = term * t ** e
                    mat[row][b] = norm(mat[row][b] + term)
        self._cache[key] = mat
        return mat

    def act(self, g: Generator, v: dict) -> dict:
        out = {}
        shift = root_of(g, self.n)
        for (z, idx), c in v.items():
            mat = self.slice_matrix(g, z)
            tz = _plus(z, shift)
            for row in range(self.V.dim):
                if mat[row][idx] != 0:
                    vec.add_into(out, (tz, row), c * mat[row][idx])
        return vec.clean(out)

    def random_vector(self, rng) -> dict:
        out = {}
        for _ in range(2):
            z = tuple(rng.randint(-1, 1) for _ in range(self.n))
            vec.add_into(out, (z, rng.randrange(self.V.dim)), mpq(rng.randint(-4, 4), rng.randint(1, 3)))
        return vec.clean(out)


def weighting_evaluate(V: WModuleData, u, radius: int = 3) -> WeightWindow:
    return WeightWindow(V, u, radius)


# -- scans -------------------------------------------------------------------

class PreconditionViolation(ValueError):
    def __init__(self, condition: str, detail: str):
        super().__init__(f"{condition}: {detail}")
        self.condition = condition
        self.detail = detail


def check_no_int1(mu) -> None:
    for i, m in enumerate(mu, start=1):
        if scalars.is_integer(m):
            raise PreconditionViolation("no-int1", f"mu_{i} = {scalars.format_scalar(m)} is an integer")
    s = norm(-sum(mu, scalars.ZERO))
    if scalars.is_integer(s):
        raise PreconditionViolation("no-int1", f"-|mu| = {scalars.format_scalar(s)} is an integer")


def check_no_int2(mu, c, n: int) -> None:
    t = norm(norm(c) / (n + 1))
    for i, m in enumerate(mu, start=1):
        if scalars.is_integer(t + m):
            raise PreconditionViolation("no-int2", f"c/(n+1) + mu_{i} is an integer")
    if scalars.is_integer(t - sum(mu, scalars.ZERO)):
        raise PreconditionViolation("no-int2", "c/(n+1) - |mu| is an integer")


def root_vectors(n: int):
    """The e_ij (i != j >= 1) and e_k0."""
    out = [E(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return out + [E(k, 0) for k in range(1, n + 1)]


def injectivity_scan(V: WModuleData, mu, radius: int = 3, condition: str = "no-int1", c=None) -> list[dict]:
    """Determinants of every root-vector slice map of G_1(V) over a window."""
    mu = tuple(norm(x) for x in mu)
    if not all(scalars.is_constant(x) for x in mu):
        raise ValueError("injectivity scans need rational mu")
    if condition == "no-int1":
        check_no_int1(mu)
    elif condition == "no-int2":
        if c is None:
            raise ValueError("no-int2 needs c")
        check_no_int2(mu, c, V.n)
    else:
        raise ValueError(f"unknown condition {condition!r}")
    M = G1Module(V, mu)
    report = []
    for g in root_vectors(V.n):
        for r in itertools.product(range(-radius, radius + 1), repeat=V.n):
            target = tuple(a - b for a, b in zip(r, root_of(g, V.n)))
            d = linalg.det(M.transition_matrix(g, r, target))
            report.append({
                "generator": str(g),
                "lattice_point": list(r),
                "determinant": scalars.format_scalar(d),
                "status": "fail" if scalars.is_zero(d) else "pass",
            })
    return report


def sample_generic_mu(rng, n: int, prime: int = 101, c=None):
    """Rationals p/prime with no-int1 (and no-int2 when c is given)."""
    while True:
        mu = tuple(mpq(rng.choice([x for x in range(-3 * prime, 3 * prime) if x % prime]), prime)
                   for _ in range(n))
        try:
            check_no_int1(mu)
            if c is not None:
                check_no_int2(mu, c, n)
        except PreconditionViolation:
            continue
        return mu


def local_nilpotency_check(V: WModuleData, degree: int) -> bool:
    """(e_{0i} - 1)^{m+1} kills every basis vector of h-degree m <= degree."""
    M = GModule(V)
    n = V.n
    for alpha in vec.monomials_up_to(n, degree):
        m = sum(alpha)
        for b in range(V.dim):
            for i in range(1, n + 1):
                v = vec.basis_vector(alpha, b)
                for _ in range(m + 1):
                    v = vec.vsub(M.act(E(0, i), v), v)
                if v:
                    return False
    return True


def freeness_rank(V: WModuleData, degree: int) -> tuple[int, int]:
    """Rank of {h^alpha . (1 (x) v_i)} computed through the h-action, and the count."""
    M = GModule(V)
    n = V.n
    vectors = []
    for alpha in vec.monomials_up_to(n, degree):
        for b in range(V.dim):
            v = vec.basis_vector((0,) * n, b)
            for i, e in enumerate(alpha, start=1):
                for _ in range(e):
                    v = M.act(H(i), v)
            vectors.append(v)
    keys = vec.keys_sorted(vectors)
    rows = vec.coordinates(vectors, keys)
    return linalg.rank(rows, len(vectors)), len(vectors)
