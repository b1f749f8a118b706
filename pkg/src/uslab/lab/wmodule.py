"""Finite-dimensional W-modules: data, JSON I/O, relation checks and the
standard examples (wedge modules, one-dimensional modules, restrictions)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from uslab import linalg
from uslab.lab.gln import GlnModuleData
from uslab.scalars import format_scalar, norm, parse_scalar
from uslab.walgebra import OMEGA, WGenerator, X, w_algebra


class SchemaError(ValueError):
    pass


class RelationCheckError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def w_generators(n: int):
    return w_algebra(n).generators


@dataclass
class WModuleData:
    n: int
    dim: int
    mats: dict  # WGenerator -> dim x dim matrix

    def __post_init__(self):
        self.mats = {g: [[norm(x) for x in row] for row in m] for g, m in self.mats.items()}
        missing = [str(g) for g in w_generators(self.n) if g not in self.mats]
        if missing:
            raise SchemaError(f"missing matrices for {missing}")
        for g, m in self.mats.items():
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise SchemaError(f"matrix for {g} is not {self.dim}x{self.dim}")

    def matrix(self, g: WGenerator):
        return self.mats[g]

    def mono_matrix(self, wm) -> list:
        """Matrix of an ordered W-monomial (leftmost factor applied last)."""
        w = w_algebra(self.n)
        out = linalg.identity(self.dim)
        for a in w.word_of(wm):
            out = linalg.matmul(out, self.mats[w.generators[a]])
        return out

    def element_matrix(self, terms: dict) -> list:
        out = linalg.zeros(self.dim)
        for wm, c in terms.items():
            out = linalg.matadd(out, linalg.matscale(c, self.mono_matrix(wm)))
        return out

    def relation_failures(self):
        """Pairs (g_a, g_b) whose commutator relation fails on these matrices."""
        w = w_algebra(self.n)
        bad = []
        for (a, b), rhs in sorted(w.relations().items()):
            ma, mb = self.mats[w.generators[a]], self.mats[w.generators[b]]
            lhs = linalg.matsub(linalg.matmul(ma, mb), linalg.matmul(mb, ma))
            if not linalg.is_zero_matrix(linalg.matsub(lhs, self.element_matrix(rhs))):
                bad.append((str(w.generators[a]), str(w.generators[b])))
        return bad

    def check_relations(self) -> None:
        bad = self.relation_failures()
        if bad:
            raise RelationCheckError(f"W-relations fail for {bad[0]}", witness=bad)

    def same_as(self, other: "WModuleData") -> bool:
        if self.n != other.n or self.dim != other.dim:
            return False
        return all(linalg.is_zero_matrix(linalg.matsub(self.mats[g], other.mats[g])) for g in self.mats)

    # -- JSON ------------------------------------------------------------
    def to_json(self) -> dict:
        out = {"n": self.n, "dim": self.dim}
        for g in w_generators(self.n):
            out[g.key] = [[format_scalar(x) for x in row] for row in self.mats[g]]
        return out

    @classmethod
    def from_json(cls, data: dict, check: bool = True) -> "WModuleData":
        if not isinstance(data, dict):
            raise SchemaError("W-module file must hold a JSON object")
        try:
            n, dim = int(data["n"]), int(data["dim"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad or missing n/dim: {exc}") from None
        if n < 2 or dim < 1:
            raise SchemaError("need n >= 2 and dim >= 1")
        mats = {}
        for g in w_generators(n):
            m = data.get(g.key)
            if not isinstance(m, list) or len(m) != dim or any(not isinstance(r, list) or len(r) != dim for r in m):
                raise SchemaError(f"entry {g.key!r} must be a {dim}x{dim} matrix")
            try:
                mats[g] = [[parse_scalar(str(x)) for x in r] for r in m]
            except ValueError as exc:
                raise SchemaError(f"entry {g.key!r}: {exc}") from None
        extra = set(data) - {"n", "dim"} - {g.key for g in w_generators(n)}
        if extra:
            raise SchemaError(f"unexpected keys {sorted(extra)}")
        mod = cls(n, dim, mats)
        if check:
            mod.check_relations()
        return mod


def save_w_module(mod: WModuleData, path) -> None:
    Path(path).write_text(json.dumps(mod.to_json(), indent=2, sort_keys=True) + "\n")


def load_w_module(path) -> WModuleData:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return WModuleData.from_json(data)


def w_action_on_wedge(V: GlnModuleData) -> WModuleData:
    """x_ij -> E_ij - E_ii and omega_k -> sum_j (E_kj E_jj - E_kj)."""
    n = V.n
    mats = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mats[X(i, j)] = linalg.matsub(V.E[(i, j)], V.E[(i, i)])
    for k in range(1, n + 1):
        m = linalg.zeros(V.dim)
        for j in range(1, n + 1):
            m = linalg.matadd(m, linalg.matsub(linalg.matmul(V.E[(k, j)], V.E[(j, j)]), V.E[(k, j)]))
        mats[OMEGA(k)] = m
    return WModuleData(n, V.dim, mats)


def one_dim_w_module(c, n: int) -> WModuleData:
    t = norm(norm(c) / (n + 1))
    mats = {g: [[t if g.tag == "X" else norm(t * t + t)]] for g in w_generators(n)}
    return WModuleData(n, 1, mats)


def trivial_w_module(n: int, dim: int = 1) -> WModuleData:
    return WModuleData(n, dim, {g: linalg.zeros(dim) for g in w_generators(n)})


def restrict_w_module(mod: WModuleData, basis) -> WModuleData:
    """Restriction to the invariant subspace spanned by the coordinate vectors ``basis``."""
    cols = [list(b) for b in basis]
    A = [[cols[j][i] for j in range(len(cols))] for i in range(mod.dim)]
    mats = {}
    for g, m in mod.mats.items():
        images = [linalg.matvec(m, b) for b in cols]
        B = [[images[j][i] for j in range(len(cols))] for i in range(mod.dim)]
        mats[g] = linalg.solve_columns(A, B)
    return WModuleData(mod.n, len(cols), mats)


__all__ = [
    "WModuleData",
    "SchemaError",
    "RelationCheckError",
    "save_w_module",
    "load_w_module",
    "w_action_on_wedge",
    "one_dim_w_module",
    "trivial_w_module",
    "restrict_w_module",
]
