"""Joint eigenspaces inside truncations, extraction of W-actions from them,
and the conjugation that moves a nonzero character to the standard one."""
from __future__ import annotations

from dataclasses import dataclass

from uslab import linalg, scalars
from uslab.lab import vectors as vec
from uslab.lab.modules import Module
from uslab.lab.wmodule import WModuleData
from uslab.pbw import E, H, apply_conjugation, make_lie_structure
from uslab.scalars import norm
from uslab.walgebra import w_algebra


class InvalidTruncation(ValueError):
    pass


class NoTwistExists(ValueError):
    pass


def _span_rank(vectors) -> int:
    keys = vec.keys_sorted(vectors)
    if not keys:
        return 0
    return linalg.rank([list(r) for r in zip(*vec.coordinates(vectors, keys))], len(keys))


def canonical_basis(vectors) -> list[dict]:
    """Reduced echelon basis of the span, pivots on the smallest keys."""
    keys = vec.keys_sorted(vectors)
    if not keys:
        return []
    rows = [list(r) for r in zip(*vec.coordinates(vectors, keys))]
    return [vec.clean(dict(zip(keys, r))) for r in linalg.rref_basis(rows, len(keys))]


def joint_eigenspace(operators, eigenvalues, spanning, check_closed: bool = True) -> list[dict]:
    """Basis of {v in span(spanning) : op_i(v) = a_i v for all i}."""
    spanning = [v for v in spanning if v]
    if not spanning:
        return []
    images = [[op(s) for s in spanning] for op in operators]
    if check_closed:
        base = _span_rank(spanning)
        if _span_rank(spanning + [w for imgs in images for w in imgs]) != base:
            raise InvalidTruncation("the truncation is not closed under the given operators")
    eqs = [[vec.vsub(w, vec.vscale(a, s)) for w, s in zip(imgs, spanning)]
           for imgs, a in zip(images, eigenvalues)]
    flat = [v for block in eqs for v in block]
    keys = vec.keys_sorted(flat)
    m = len(spanning)
    rows = []
    for block in eqs:
        rows.extend(vec.coordinates(block, keys))
    null = linalg.nullspace(rows, m) if rows else [[int(i == j) for i in range(m)] for j in range(m)]
    combos = [vec.vlin(zip(t, spanning)) for t in null]
    return canonical_basis([c for c in combos if c])


def whittaker_subspace(module: Module, spanning, a) -> list[dict]:
    """Basis of the vectors v in span(spanning) with e_{0i} v = a_i v."""
    n = module.n
    if len(a) != n:
        raise ValueError(f"character needs {n} entries")
    ops = [(lambda v, i=i: module.act(E(0, i), v)) for i in range(1, n + 1)]
    return joint_eigenspace(ops, [norm(x) for x in a], spanning)


def weight_space(module: Module, spanning, weight) -> list[dict]:
    """Joint h-eigenspace with eigenvalues ``weight`` inside the span."""
    n = module.n
    ops = [(lambda v, i=i: module.act(H(i), v)) for i in range(1, n + 1)]
    return joint_eigenspace(ops, [norm(x) for x in weight], spanning)


def coordinates_in(basis, targets) -> list[list]:
    """Matrix whose column j expresses targets[j] in ``basis``."""
    keys = vec.keys_sorted(list(basis) + list(targets))
    A = vec.coordinates(basis, keys)
    B = vec.coordinates(targets, keys)
    try:
        return linalg.solve_columns(A, B)
    except linalg.NotInSpanError as exc:
        raise InvalidTruncation(f"W-action leaves the given subspace: {exc}") from None


def extract_w_action(module: Module, basis) -> WModuleData:
    """Matrices of x_ij, omega_k acting through their U_S expansions on span(basis)."""
    w = w_algebra(module.n)
    mats = {}
    for g, expansion in zip(w.generators, w.expansions):
        images = [module.act_element(expansion, b) for b in basis]
        mats[g] = coordinates_in(basis, images)
    return WModuleData(module.n, len(basis), mats)


# -- twisting ---------------------------------------------------------------

@dataclass(frozen=True)
class TwistStep:
    kind: str  # "permutation", "scaling" or "shear"
    matrix: tuple  # (n+1)x(n+1), rows of scalars

    def as_lists(self):
        return [list(r) for r in self.matrix]


def _embed(T):
    n = len(T)
    S = [[scalars.ONE if (i == j == 0) else scalars.ZERO for j in range(n + 1)] for i in range(n + 1)]
    for i in range(n):
        for j in range(n):
            S[i + 1][j + 1] = norm(T[i][j])
    return tuple(tuple(r) for r in S)


def twist_to_standard(a) -> list[TwistStep]:
    """Elementary conjugations taking the character ``a`` to the all-ones one.

    Each step acts on the e_{0i} through the lower-right block T of
    S = diag(1, T), sending the eigenvalue vector a to T a.
    """
    a = [norm(x) for x in a]
    n = len(a)
    if all(scalars.is_zero(x) for x in a):
        raise NoTwistExists("the zero character cannot be twisted to the standard one")
    if not all(scalars.is_constant(x) for x in a):
        raise ValueError("twisting needs rational entries")
    steps = []
    if a[0] == 0:
        p = next(i for i, x in enumerate(a) if x != 0)
        T = [[int(i == j) for j in range(n)] for i in range(n)]
        T[0][0] = T[p][p] = 0
        T[0][p] = T[p][0] = 1
        steps.append(TwistStep("permutation", _embed(T)))
        a[0], a[p] = a[p], a[0]
    if a[0] != 1:
        T = [[int(i == j) for j in range(n)] for i in range(n)]
        T[0][0] = 1 / a[0]
        steps.append(TwistStep("scaling", _embed(T)))
        a[0] = scalars.ONE
    for i in range(1, n):
        if a[i] != 1:
            T = [[int(r == s) for s in range(n)] for r in range(n)]
            T[i][0] = 1 - a[i]
            steps.append(TwistStep("shear", _embed(T)))
            a[i] = scalars.ONE
    return steps


def composed_twist(steps, n: int):
    """Single matrix S_m ... S_1 realising the whole sequence."""
    out = linalg.identity(n + 1)
    for st in steps:
        out = linalg.matmul(st.as_lists(), out)
    return out


def twisted_character(steps, a) -> list:
    """Eigenvalues of the images of the e_{0i} on a vector with character ``a``."""
    n = len(a)
    lie = make_lie_structure(n)
    S = composed_twist(steps, n)
    out = []
    for i in range(1, n + 1):
        img = apply_conjugation(S, lie.gen(E(0, i)))
        val = scalars.ZERO
        for m, c in img.terms.items():
            idx = [k for k, e in enumerate(m) if e]
            if len(idx) != 1 or m[idx[0]] != 1 or lie.generators[idx[0]].i != 0:
                raise ValueError(f"image of e[0][{i}] leaves the span of the e[0][k]")
            val += c * a[lie.generators[idx[0]].j - 1]
        out.append(norm(val))
    return out
