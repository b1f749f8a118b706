"""Concrete sl_{n+1}-modules acting on sparse vectors.

Every module exposes ``act(g, v)`` for a generator and ``act_element(u, v)``
for any element of U (or of U_S when the e_{0k} act invertibly).
"""
from __future__ import annotations

from uslab import scalars
from uslab.lab import vectors as vec
from uslab.lab.gln import GlnModuleData
from uslab.pbw import AlgebraElement, E, Generator, H, WrongModuleError, make_lie_structure
from uslab.scalars import norm


class Module:
    n: int
    name: str = "module"
    invertible_e0: bool = False

    @property
    def lie(self):
        return make_lie_structure(self.n)

    def act(self, g: Generator, v: dict) -> dict:
        raise NotImplementedError

    def act_e0_inverse(self, k: int, v: dict) -> dict:
        raise WrongModuleError(f"e[0][{k}] does not act invertibly on {self.name}")

    def act_mono(self, mono, v: dict) -> dict:
        lie = self.lie
        for a in range(lie.size - 1, -1, -1):
            e = mono[a]
            if not e:
                continue
            g = lie.generators[a]
            if e > 0:
                for _ in range(e):
                    v = self.act(g, v)
            else:
                for _ in range(-e):
                    v = self.act_e0_inverse(g.j, v)
            if not v:
                return v
        return v

    def act_element(self, u: AlgebraElement, v: dict) -> dict:
        return vec.vlin((c, self.act_mono(m, v)) for m, c in u.terms.items())

    def random_vector(self, rng) -> dict:
        raise NotImplementedError

    def generators(self):
        return self.lie.generators


# -- Weyl actions ------------------------------------------------------------

def omega_shift_act(kind: str, i: int, v: dict) -> dict:
    """Substitution action on Omega = C[d_1..d_n]; ``i`` is 1-based.

    ``kind`` is "d" for the derivation (f -> -f(d+e_i)) or "x" for the
    variable (f -> -f(d-e_i) d_i).
    """
    if kind == "d":
        return vec.vscale(-1, vec.vec_shift(v, i - 1, 1))
    if kind == "x":
        return vec.vscale(-1, vec.vec_mulvar(vec.vec_shift(v, i - 1, -1), i - 1))
    raise ValueError(f"unknown Weyl generator {kind!r}")


def poly_act(kind: str, i: int, v: dict) -> dict:
    """Honest polynomial action on A_n = C[x_1..x_n]."""
    if kind == "d":
        return vec.vec_diff(v, i - 1)
    if kind == "x":
        return vec.vec_mulvar(v, i - 1)
    raise ValueError(f"unknown Weyl generator {kind!r}")


def omega_act(kind: str, i: int, f: dict, n: int) -> dict:
    """Weyl generator on a polynomial ``{alpha: coeff}`` in d_1..d_n."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    v = {(a, 0): c for a, c in f.items()}
    return {k[0]: c for k, c in omega_shift_act(kind, i, v).items()}


class TModule(Module):
    """P (x) V with sl_{n+1} acting through the map into D_n (x) U(gl_n)."""

    def __init__(self, V: GlnModuleData, space: str = "omega"):
        if space not in ("omega", "poly"):
            raise ValueError("space must be 'omega' or 'poly'")
        self.V = V
        self.n = V.n
        self.space = space
        self.name = f"T({'Omega' if space == 'omega' else 'A'}, dim {V.dim})"
        self.invertible_e0 = space == "omega"
        self._weyl = omega_shift_act if space == "omega" else poly_act
        self._In = V.identity_element()

    def weyl(self, kind, i, v):
        return self._weyl(kind, i, v)

    def euler(self, v):
        return vec.vadd(*(self.weyl("x", q, self.weyl("d", q, v)) for q in range(1, self.n + 1)))

    def act(self, g: Generator, v: dict) -> dict:
        n, V = self.n, self.V
        if g.kind == "H":
            if g.i == 0:
                return vec.vscale(-1, vec.vadd(*(self.act(H(k), v) for k in range(1, n + 1))))
            k = g.i
            return vec.vadd(self.weyl("x", k, self.weyl("d", k, v)), vec.vec_matrix(v, V.E[(k, k)]))
        i, j = g.i, g.j
        if i == 0:
            return vec.vscale(-1, self.weyl("d", j, v))
        if j == 0:
            parts = [vec.vec_matrix(self.weyl("x", q, v), V.E[(i, q)]) for q in range(1, n + 1)]
            parts.append(self.weyl("x", i, self.euler(v)))
            parts.append(self.weyl("x", i, vec.vec_matrix(v, self._In)))
            return vec.vadd(*parts)
        return vec.vadd(vec.vec_matrix(v, V.E[(i, j)]), self.weyl("x", i, self.weyl("d", j, v)))

    def act_e0_inverse(self, k: int, v: dict) -> dict:
        if self.space != "omega":
            return super().act_e0_inverse(k, v)
        return vec.vec_shift(v, k - 1, -1)

    def random_vector(self, rng) -> dict:
        return vec.random_poly_vector(rng, self.n, self.V.dim)

    def truncation(self, degree: int):
        return [vec.basis_vector(a, b) for a in vec.monomials_up_to(self.n, degree) for b in range(self.V.dim)]


def pi_map(k: int, v: dict, n: int, space: str = "omega") -> dict:
    """f (x) w  ->  sum_i (d_i . f) (x) (e_i ^ w), from degree k to k+1."""
    from uslab.lab.gln import wedge_basis

    if not 0 <= k <= n - 1:
        raise ValueError(f"pi_k needs 0 <= k <= {n - 1}, got {k}")
    weyl = omega_shift_act if space == "omega" else poly_act
    src = wedge_basis(n, k)
    dst = {s: a for a, s in enumerate(wedge_basis(n, k + 1))}
    out = {}
    for i in range(1, n + 1):
        df = weyl("d", i, v)
        for (alpha, b), c in df.items():
            s = src[b]
            if i in s:
                continue
            sign = (-1) ** sum(1 for x in s if x < i)
            vec.add_into(out, (alpha, dst[tuple(sorted(s + (i,)))]), sign * c)
    return vec.clean(out)


class OmegaOneC(Module):
    """Omega(1, c) pulled back along phi, vectors keyed by (alpha, 0)."""

    def __init__(self, n: int, c):
        self.n = n
        self.c = norm(c)
        self.name = "Omega(1,c)"
        self.invertible_e0 = True
        self._t = norm(self.c / (n + 1))

    def act(self, g: Generator, v: dict) -> dict:
        n = self.n
        if g.kind == "H":
            if g.i == 0:
                return vec.vscale(-1, vec.vadd(*(self.act(H(k), v) for k in range(1, n + 1))))
            return vec.vsub(vec.vec_mulvar(v, g.i - 1), vec.vscale(self._t, v))
        i, j = g.i, g.j
        if i == 0:
            return vec.vec_shift(v, j - 1, 1)
        if j == 0:
            w = vec.vec_shift(v, i - 1, -1)
            lin = {tuple(int(q == p) for q in range(n)): -scalars.ONE for p in range(n)}
            lin[(0,) * n] = norm(self.c + 1)
            return vec.vec_mulvar(vec.vec_mulpoly(w, lin), i - 1)
        return vec.vec_mulvar(vec.vec_shift(vec.vec_shift(v, j - 1, 1), i - 1, -1), i - 1)

    def act_e0_inverse(self, k: int, v: dict) -> dict:
        return vec.vec_shift(v, k - 1, -1)

    def random_vector(self, rng) -> dict:
        return vec.random_poly_vector(rng, self.n, 1)

    def truncation(self, degree: int):
        return [vec.basis_vector(a, 0) for a in vec.monomials_up_to(self.n, degree)]


def omega1c_act(g: Generator, f: dict, c, n: int) -> dict:
    """Action on a polynomial ``{alpha: coeff}`` in d_1..d_n."""
    v = {(tuple(a), 0): x for a, x in f.items()}
    return {k[0]: x for k, x in OmegaOneC(n, c).act(g, v).items()}


def psi_act(g: Generator, v: dict, V: GlnModuleData, space: str = "omega") -> dict:
    return TModule(V, space).act(g, v)
