"""The chain of maps between T(Omega, wedge^k) and the simple W-modules it produces."""
from __future__ import annotations

from itertools import combinations

from uslab import linalg, scalars
from uslab.lab import vectors as vec
from uslab.lab.gln import wedge_basis, wedge_gln_module
from uslab.lab.modules import TModule, pi_map
from uslab.lab.whittaker import extract_w_action, whittaker_subspace
from uslab.lab.wmodule import WModuleData, restrict_w_module, w_action_on_wedge
from uslab.pbw import make_lie_structure


def wedge_coords(n: int, indices) -> list:
    """Coordinates of e_{i1} ^ ... ^ e_{im} in the lexicographic wedge basis."""
    m = len(indices)
    basis = {s: a for a, s in enumerate(wedge_basis(n, m))}
    out = [scalars.ZERO] * len(basis)
    if len(set(indices)) < m:
        return out
    inversions = sum(1 for a in range(m) for b in range(a + 1, m) if indices[a] > indices[b])
    out[basis[tuple(sorted(indices))]] = scalars.ONE * (-1) ** inversions
    return out


def tilde_basis(n: int, k: int) -> list[list]:
    """(e_1 + ... + e_n) ^ e_J for J a k-subset of 1..n-1."""
    out = []
    for J in combinations(range(1, n), k):
        acc = [scalars.ZERO] * len(wedge_basis(n, k + 1))
        for i in range(1, n + 1):
            acc = [a + b for a, b in zip(acc, wedge_coords(n, (i,) + J))]
        out.append(acc)
    return out


def principal_simple(n: int, k: int) -> WModuleData:
    """W-action on wh_1(im pi_k) from the closed-form wedge formulas."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in [0, {n - 1}]")
    return restrict_w_module(w_action_on_wedge(wedge_gln_module(n, k + 1)), tilde_basis(n, k))


def image_whittaker(n: int, k: int, degree: int = 6):
    """wh_1 of the image of pi_k inside the degree truncation, and its module."""
    src = TModule(wedge_gln_module(n, k))
    dst = TModule(wedge_gln_module(n, k + 1))
    span = [pi_map(k, b, n) for b in src.truncation(degree)]
    basis = whittaker_subspace(dst, span, [1] * n)
    return basis, dst


def principal_block(n: int, degree: int = 6) -> list[WModuleData]:
    """Simple W-modules wh_1(im pi_k), k = 0..n-1, extracted through the module action."""
    out = []
    for k in range(n):
        basis, dst = image_whittaker(n, k, degree)
        out.append(extract_w_action(dst, basis))
    return out


def chain_defects(n: int, degree: int = 6) -> list[tuple]:
    """(k, basis vector) pairs where pi_{k+1} pi_k fails to vanish."""
    bad = []
    for k in range(n - 1):
        for b in TModule(wedge_gln_module(n, k)).truncation(degree):
            if pi_map(k + 1, pi_map(k, b, n), n):
                bad.append((k, b))
    return bad


def equivariance_defects(n: int, degree: int = 6) -> list[tuple]:
    """(k, generator, basis vector) where pi_k fails to commute with the action."""
    lie = make_lie_structure(n)
    bad = []
    for k in range(n):
        src, dst = TModule(wedge_gln_module(n, k)), TModule(wedge_gln_module(n, k + 1))
        for b in src.truncation(degree):
            pb = pi_map(k, b, n)
            for g in lie.generators:
                if vec.vsub(pi_map(k, src.act(g, b), n), dst.act(g, pb)):
                    bad.append((k, str(g), b))
    return bad


def a_structure_defects(n: int, k: int) -> list[tuple]:
    """Compare E_lq - E_ln on the tilde basis with the gl_{n-1} wedge action."""
    V = wedge_gln_module(n, k + 1)
    small = wedge_gln_module(n - 1, k)
    basis = tilde_basis(n, k)
    A = [[b[i] for b in basis] for i in range(V.dim)]
    bad = []
    for l in range(1, n):
        for q in range(1, n):
            op = linalg.matsub(V.E[(l, q)], V.E[(l, n)])
            imgs = [linalg.matvec(op, b) for b in basis]
            B = [[img[i] for img in imgs] for i in range(V.dim)]
            got = linalg.solve_columns(A, B)
            if not linalg.is_zero_matrix(linalg.matsub(got, small.E[(l, q)])):
                bad.append((l, q))
    return bad


def algebra_dimension(mod: WModuleData) -> int:
    """Dimension of the matrix algebra generated by the W-action."""
    d = mod.dim
    gens = list(mod.mats.values())
    flat = lambda m: [x for r in m for x in r]  # noqa: E731
    basis = [linalg.identity(d)]
    current = linalg.rank([flat(b) for b in basis], d * d)
    frontier = list(basis)
    while frontier:
        nxt = []
        for b in frontier:
            for g in gens:
                cand = linalg.matmul(g, b)
                r = linalg.rank([flat(x) for x in basis + [cand]], d * d)
                if r > current:
                    basis.append(cand)
                    nxt.append(cand)
                    current = r
        frontier = nxt
    return current


def is_simple(mod: WModuleData) -> bool:
    return algebra_dimension(mod) == mod.dim ** 2


def hom_dimension(a: WModuleData, b: WModuleData) -> int:
    """dim Hom_W(a, b): matrices T with T A_g = B_g T for every generator."""
    if a.n != b.n:
        return 0
    p, q = b.dim, a.dim
    rows = []
    for g in a.mats:
        A, B = a.mats[g], b.mats[g]
        for i in range(p):
            for j in range(q):
                row = [scalars.ZERO] * (p * q)
                for t in range(q):
                    row[i * q + t] += A[t][j]
                for t in range(p):
                    row[t * q + j] -= B[i][t]
                rows.append(row)
    return len(linalg.nullspace(rows, p * q))
