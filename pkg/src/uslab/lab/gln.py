"""Finite-dimensional gl_n-modules given by explicit matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from uslab import linalg, scalars
from uslab.scalars import norm


class GlnRelationError(ValueError):
    pass


@dataclass
class GlnModuleData:
    """Matrices ``E[(i, j)]`` (1-based) acting on a ``dim``-dimensional space."""

    n: int
    dim: int
    E: dict
    labels: list = field(default_factory=list)
    highest: int = 0

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"v{i}" for i in range(self.dim)]
        self.E = {k: [[norm(x) for x in row] for row in m] for k, m in self.E.items()}
        for m in self.E.values():
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ValueError("matrix shape does not match dimension")

    def matrix(self, i: int, j: int):
        return self.E[(i, j)]

    def identity_element(self):
        """Matrix of I_n = sum_i E(i,i)."""
        out = linalg.zeros(self.dim)
        for i in range(1, self.n + 1):
            out = linalg.matadd(out, self.E[(i, i)])
        return out

    def check_relations(self) -> None:
        n = self.n
        idx = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        zero = linalg.zeros(self.dim)
        for a in idx:
            for b in idx:
                (i, j), (k, l) = a, b
                lhs = linalg.matsub(linalg.matmul(self.E[a], self.E[b]), linalg.matmul(self.E[b], self.E[a]))
                rhs = zero
                if j == k:
                    rhs = linalg.matadd(rhs, self.E[(i, l)])
                if l == i:
                    rhs = linalg.matsub(rhs, self.E[(k, j)])
                if not linalg.is_zero_matrix(linalg.matsub(lhs, rhs)):
                    raise GlnRelationError(f"[E{a}, E{b}] relation fails")


def wedge_gln_module(n: int, k: int) -> GlnModuleData:
    """Exterior power of the natural module; basis = lexicographic index sets."""
    if not 0 <= k <= n:
        raise ValueError(f"wedge degree must lie in [0, {n}], got {k}")
    basis = list(combinations(range(1, n + 1), k))
    pos = {b: a for a, b in enumerate(basis)}
    dim = comb(n, k)
    mats = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = [[scalars.ZERO] * dim for _ in range(dim)]
            for col, s in enumerate(basis):
                if j not in s:
                    continue
                if i == j:
                    m[col][col] += 1
                    continue
                if i in s:
                    continue
                # replace e_j by e_i in place, then sort with sign
                t = [i if x == j else x for x in s]
                sign = (-1) ** sum(1 for x in s if x != j and min(i, j) < x < max(i, j))
                m[pos[tuple(sorted(t))]][col] += sign
            mats[(i, j)] = m
    labels = ["^".join(f"e{x}" for x in s) or "1" for s in basis]
    return GlnModuleData(n, dim, mats, labels)


def wedge_basis(n: int, k: int):
    return list(combinations(range(1, n + 1), k))


def scalar_gln_module(n: int, a) -> GlnModuleData:
    """One-dimensional module with E(i,j) acting by a * delta_ij."""
    a = norm(a)
    mats = {(i, j): [[a if i == j else scalars.ZERO]] for i in range(1, n + 1) for j in range(1, n + 1)}
    return GlnModuleData(n, 1, mats, ["1"])


def sym_gln_module(n: int, m: int) -> GlnModuleData:
    """Symmetric power S^m of the natural module (highest vector e_1^m first)."""
    basis = list(combinations_with_replacement(range(1, n + 1), m))
    pos = {b: a for a, b in enumerate(basis)}
    dim = len(basis)
    mats = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            mat = [[scalars.ZERO] * dim for _ in range(dim)]
            for col, s in enumerate(basis):
                cnt = s.count(j)
                if not cnt:
                    continue
                t = list(s)
                t.remove(j)
                t.append(i)
                mat[pos[tuple(sorted(t))]][col] += cnt
            mats[(i, j)] = mat
    labels = ["*".join(f"e{x}" for x in s) or "1" for s in basis]
    return GlnModuleData(n, dim, mats, labels)


def tensor_gln(a: GlnModuleData, b: GlnModuleData) -> GlnModuleData:
    """Tensor product; the highest vector is the product of the two."""
    dim = a.dim * b.dim
    mats = {}
    for key in a.E:
        m = [[scalars.ZERO] * dim for _ in range(dim)]
        ma, mb = a.E[key], b.E[key]
        for p in range(a.dim):
            for q in range(b.dim):
                col = p * b.dim + q
                for r in range(a.dim):
                    if ma[r][p] != 0:
                        m[r * b.dim + q][col] += ma[r][p]
                for r in range(b.dim):
                    if mb[r][q] != 0:
                        m[p * b.dim + r][col] += mb[r][q]
        mats[key] = m
    labels = [f"{x}(x){y}" for x in a.labels for y in b.labels]
    return GlnModuleData(a.n, dim, mats, labels, highest=a.highest * b.dim + b.highest)


def gln_highest_weight(V: GlnModuleData) -> tuple:
    """Eigenvalues of E(i,i) on the designated highest vector."""
    h = V.highest
    return tuple(V.E[(i, i)][h][h] for i in range(1, V.n + 1))


def sl_weight_of(gl_weight) -> tuple:
    """sl_{n+1} weight (lambda_0, ..., lambda_n) with lambda_0 = -sum."""
    lam = [norm(x) for x in gl_weight]
    return (norm(-sum(lam, scalars.ZERO)),) + tuple(lam)
