"""Exact linear algebra over QQ or the parameter fraction field, backed by
sympy's DomainMatrix."""
from __future__ import annotations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from uslab.scalars import K, is_constant, norm

_KD = K.to_domain()


def _domain(rows):
    if all(is_constant(x) for row in rows for x in row):
        return QQ
    return _KD


def domain_matrix(rows, ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    dom = _domain(rows)
    conv = [[dom.convert(norm(x)) for x in r] for r in rows]
    return DomainMatrix(conv, (len(rows), ncols), dom)


def rank(rows, ncols: int | None = None) -> int:
    if not rows:
        return 0
    return domain_matrix(rows, ncols).rank()


def nullspace(rows, ncols: int) -> list[list]:
    """Basis (as lists of scalars) of {x : rows @ x = 0}."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    ns = domain_matrix(rows, ncols).nullspace()
    return [[norm(x) for x in r] for r in ns.to_list()]


def det(rows):
    if not rows:
        return norm(1)
    return norm(domain_matrix(rows).det())


def rref_basis(vectors, ncols: int) -> list[list]:
    """Row-reduced basis of the span of ``vectors``."""
    if not vectors:
        return []
    reduced, pivots = domain_matrix(vectors, ncols).rref()
    return [[norm(x) for x in r] for r in reduced.to_list()[: len(pivots)]]


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(m)), norm(0)) for j in range(p)] for i in range(n)]


def matsub(a, b):
    return [[norm(x - y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matadd(a, b):
    return [[norm(x + y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c, a):
    return [[norm(c * x) for x in r] for r in a]


def identity(d):
    return [[norm(int(i == j)) for j in range(d)] for i in range(d)]


def zeros(d, e=None):
    return [[norm(0)] * (d if e is None else e) for _ in range(d)]


def is_zero_matrix(a) -> bool:
    return all(norm(x) == 0 if is_constant(x) else not norm(x).numer for r in a for x in r)


def matvec(a, v):
    return [norm(sum((a[i][k] * v[k] for k in range(len(v))), norm(0))) for i in range(len(a))]


class NotInSpanError(ValueError):
    pass


def solve_columns(A, B):
    """X with A @ X = B for A of full column rank; raises if B leaves the span."""
    m = len(A[0]) if A else 0
    p = len(B[0]) if B else 0
    if m == 0:
        if any(not (x == 0 if is_constant(x) else not norm(x).numer) for r in B for x in r):
            raise NotInSpanError("target is not in the span")
        return []
    aug = [list(ra) + list(rb) for ra, rb in zip(A, B)]
    reduced, pivots = domain_matrix(aug, m + p).rref()
    if tuple(pivots[:m]) != tuple(range(m)):
        raise NotInSpanError("columns of A are dependent")
    if len(pivots) > m:
        raise NotInSpanError("target is not in the span")
    rows = reduced.to_list()
    return [[norm(rows[i][m + j]) for j in range(p)] for i in range(m)]
