"""Representations of the n-vertex linear quiver with arrows both ways between
neighbours, a loop at each end, and the relations xy = yx = 0."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from uslab import linalg, scalars
from uslab.scalars import format_scalar, norm, parse_scalar


class ShapeError(ValueError):
    pass


@dataclass
class Arrow:
    source: int  # 1-based vertex
    target: int
    label: str  # "x" or "y"
    matrix: list  # dims[target] x dims[source]

    def to_json(self) -> dict:
        return {"from": self.source, "to": self.target, "label": self.label,
                "matrix": [[format_scalar(x) for x in r] for r in self.matrix]}


def canonical_arrows(n: int):
    """(source, target, label): forward arrows x, backward y, loop y at 1, loop x at n."""
    out = [(1, 1, "y")]
    for i in range(1, n):
        out.append((i, i + 1, "x"))
        out.append((i + 1, i, "y"))
    out.append((n, n, "x") if n > 1 else (1, 1, "x"))
    return out


@dataclass
class QuiverRep:
    n: int
    dims: tuple
    arrows: list = field(default_factory=list)

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        if self.n < 1 or len(self.dims) != self.n or any(d < 0 for d in self.dims):
            raise ShapeError("dimension vector must have n nonnegative entries")
        for a in self.arrows:
            a.matrix = [[norm(x) for x in r] for r in a.matrix]
            if not (1 <= a.source <= self.n and 1 <= a.target <= self.n):
                raise ShapeError(f"arrow {a.source}->{a.target} leaves the quiver")
            if abs(a.source - a.target) > 1:
                raise ShapeError(f"arrow {a.source}->{a.target} joins non-neighbours")
            if a.label not in ("x", "y"):
                raise ShapeError(f"arrow label must be x or y, got {a.label!r}")
            rows, cols = self.dims[a.target - 1], self.dims[a.source - 1]
            if len(a.matrix) != rows or any(len(r) != cols for r in a.matrix):
                raise ShapeError(f"arrow {a.source}->{a.target} needs a {rows}x{cols} matrix")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @classmethod
    def zero(cls, n: int, dims) -> "QuiverRep":
        if len(dims) != n:
            raise ShapeError("dimension vector must have n nonnegative entries")
        arrows = [Arrow(s, t, lab, [[scalars.ZERO] * dims[s - 1] for _ in range(dims[t - 1])])
                  for s, t, lab in canonical_arrows(n)]
        return cls(n, tuple(dims), arrows)

    def arrow(self, source: int, target: int, label: str | None = None) -> Arrow:
        for a in self.arrows:
            if a.source == source and a.target == target and (label is None or a.label == label):
                return a
        raise KeyError(f"no arrow {source}->{target}")

    def with_matrix(self, source: int, target: int, matrix, label: str | None = None) -> "QuiverRep":
        arrows = [Arrow(a.source, a.target, a.label, [list(r) for r in a.matrix]) for a in self.arrows]
        out = QuiverRep(self.n, self.dims, arrows)
        out.arrow(source, target, label).matrix = [[norm(x) for x in r] for r in matrix]
        out.__post_init__()
        return out

    def block_operator(self, a: Arrow) -> list:
        """The arrow as an operator on the total space."""
        offsets = [sum(self.dims[:i]) for i in range(self.n)]
        D = self.total_dim
        out = linalg.zeros(D)
        r0, c0 = offsets[a.target - 1], offsets[a.source - 1]
        for i, row in enumerate(a.matrix):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x
        return out

    # -- JSON -------------------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "dims": list(self.dims), "arrows": [a.to_json() for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "QuiverRep":
        try:
            arrows = [Arrow(int(a["from"]), int(a["to"]), str(a["label"]),
                            [[parse_scalar(str(x)) for x in r] for r in a["matrix"]])
                      for a in data["arrows"]]
            return cls(int(data["n"]), tuple(data["dims"]), arrows)
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed quiver representation: {exc}") from None


def save_quiver_rep(rep: QuiverRep, path) -> None:
    Path(path).write_text(json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")


def load_quiver_rep(path) -> QuiverRep:
    return QuiverRep.from_json(json.loads(Path(path).read_text()))


def check_relations(rep: QuiverRep) -> dict:
    """Every length-two path mixing an x-arrow and a y-arrow must act by zero."""
    violations = []
    for a in rep.arrows:
        for b in rep.arrows:
            if a.target != b.source or a.label == b.label:
                continue
            prod = linalg.matmul(b.matrix, a.matrix) if a.matrix and b.matrix else []
            if prod and not linalg.is_zero_matrix(prod):
                violations.append({
                    "path": f"{a.source}->{a.target}->{b.target}",
                    "word": f"{b.label}{a.label}",
                    "product": [[format_scalar(x) for x in r] for r in prod],
                })
    return {"status": "fail" if violations else "pass", "violations": violations}


def check_local_nilpotency(rep: QuiverRep) -> bool:
    """True iff all sufficiently long paths of arrows act by zero."""
    D = rep.total_dim
    if D == 0:
        return True
    ops = [rep.block_operator(a) for a in rep.arrows]
    flat = lambda m: [x for r in m for x in r]  # noqa: E731
    level = [m for m in ops if not linalg.is_zero_matrix(m)]
    for _ in range(D):
        if not level:
            return True
        prods = [linalg.matmul(a, m) for a in ops for m in level]
        prods = [p for p in prods if not linalg.is_zero_matrix(p)]
        if not prods:
            return True
        basis = linalg.rref_basis([flat(p) for p in prods], D * D)
        level = [[row[i * D:(i + 1) * D] for i in range(D)] for row in basis]
    return not level


def direct_sum(a: QuiverRep, b: QuiverRep) -> QuiverRep:
    if a.n != b.n:
        raise ShapeError("direct sum needs equal vertex counts")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    arrows = []
    for s, t, lab in canonical_arrows(a.n):
        ma, mb = a.arrow(s, t, lab).matrix, b.arrow(s, t, lab).matrix
        rows, cols = dims[t - 1], dims[s - 1]
        m = [[scalars.ZERO] * cols for _ in range(rows)]
        for i, r in enumerate(ma):
            for j, x in enumerate(r):
                m[i][j] = x
        ra, ca = a.dims[t - 1], a.dims[s - 1]
        for i, r in enumerate(mb):
            for j, x in enumerate(r):
                m[ra + i][ca + j] = x
        arrows.append(Arrow(s, t, lab, m))
    return QuiverRep(a.n, dims, arrows)


def enumerate_simples(n: int) -> list[QuiverRep]:
    if n < 1:
        raise ValueError("need n >= 1")
    return [QuiverRep.zero(n, tuple(int(i == v) for i in range(n))) for v in range(n)]


def generated_subrep_dim(rep: QuiverRep, vector) -> int:
    """Dimension of the subrepresentation generated by one total-space vector."""
    ops = [rep.block_operator(a) for a in rep.arrows]
    D = rep.total_dim
    offsets = [sum(rep.dims[:i]) for i in range(rep.n)]
    # graded components of the generator
    span = []
    for v, d in enumerate(rep.dims):
        comp = [x if offsets[v] <= i < offsets[v] + d else scalars.ZERO for i, x in enumerate(vector)]
        if any(x != 0 for x in comp):
            span.append(comp)
    frontier = list(span)
    r = linalg.rank(span, D) if span else 0
    while frontier:
        nxt = []
        for w in frontier:
            for op in ops:
                u = linalg.matvec(op, w)
                if any(x != 0 for x in u):
                    r2 = linalg.rank(span + [u], D)
                    if r2 > r:
                        span.append(u)
                        nxt.append(u)
                        r = r2
        frontier = nxt
    return r


def is_simple(rep: QuiverRep) -> bool:
    """Brute force: no basis vector generates a proper nonzero subrepresentation."""
    D = rep.total_dim
    if D == 0:
        return False
    for i in range(D):
        e = [scalars.ONE if j == i else scalars.ZERO for j in range(D)]
        if generated_subrep_dim(rep, e) < D:
            return False
    return True
