"""Exact arithmetic in U(sl_{n+1}) and its localization at e_{01}..e_{0n}.

Generators are E(i, j) (0 <= i != j <= n) and H(i) (1 <= i <= n) with
h_i = e_ii - I/(n+1); h_0 is always rewritten as -(h_1 + ... + h_n).
PBW monomials are dense exponent tuples in the fixed order

    E(1,0) < ... < E(n,0) < E(i,j) (lex, i,j >= 1) < H(1) < ... < H(n) < E(0,1) < ... < E(0,n)

so that the factors h and e_{0k} (which generate the tensor factor B) sit
rightmost.  Only the E(0,k) slots may carry negative exponents.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from gmpy2 import mpq

from uslab import scalars
from uslab.kernel import Kernel
from uslab.scalars import format_scalar, norm


class InvalidRankError(ValueError):
    pass


class WrongModuleError(ValueError):
    """Raised when a localized element reaches a U-only operation."""


class InvalidAutomorphismError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Generator:
    kind: str  # "E" or "H"
    i: int
    j: int = -1

    def __str__(self):
        if self.kind == "H":
            return f"h[{self.i}]"
        return f"e[{self.i}][{self.j}]"


def E(i: int, j: int) -> Generator:
    return Generator("E", i, j)


def H(i: int) -> Generator:
    return Generator("H", i)


def _unit(n, i, j):
    m = [[mpq(0)] * (n + 1) for _ in range(n + 1)]
    m[i][j] = mpq(1)
    return m


def _matmul(a, b):
    size = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(size)), mpq(0)) for j in range(size)] for i in range(size)]


def _matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class LieStructure:
    """sl_{n+1} in the E/H basis with integer structure constants."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise InvalidRankError(f"rank parameter must be an integer >= 2, got {n!r}")
        if n > scalars.MAX_RANK + 4:
            raise InvalidRankError(f"rank {n} is beyond desk scale")
        self.n = n
        gens = [E(i, 0) for i in range(1, n + 1)]
        gens += [E(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        gens += [H(i) for i in range(1, n + 1)]
        gens += [E(0, k) for k in range(1, n + 1)]
        self.generators = tuple(gens)
        self.size = len(gens)
        self.e0_start = self.size - n
        self.h_start = self.e0_start - n
        self.index = {g: a for a, g in enumerate(gens)}
        self.matrices = {g: self._matrix(g) for g in gens}
        self.bracket_table = [
            [self._decompose_matrix(_matsub(_matmul(self.matrices[x], self.matrices[y]),
                                            _matmul(self.matrices[y], self.matrices[x])))
             for y in gens]
            for x in gens
        ]
        int_table = [[tuple((a, int(c)) for a, c in sorted(entry.items())) for entry in row]
                     for row in self.bracket_table]
        self.kernel = Kernel(self.size, self.e0_start, int_table)
        self.one_mono = (0,) * self.size

    def _matrix(self, g):
        n = self.n
        if g.kind == "E":
            return _unit(n, g.i, g.j)
        m = _unit(n, g.i, g.i)
        for k in range(n + 1):
            m[k][k] -= mpq(1, n + 1)
        return m

    def _decompose_matrix(self, m):
        """Coordinates of a traceless matrix in the generator basis."""
        n = self.n
        out = {}
        trace = sum((m[k][k] for k in range(n + 1)), mpq(0))
        if trace != 0:
            raise ValueError("matrix is not traceless")
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j and m[i][j] != 0:
                    out[self.index[E(i, j)]] = m[i][j]
        for k in range(1, n + 1):
            c = m[k][k] - m[0][0]
            if c != 0:
                out[self.index[H(k)]] = c
        return out

    def matrix_to_element(self, m) -> "AlgebraElement":
        coords = self._decompose_matrix(m)
        return AlgebraElement(self, {self.unit_mono(a): c for a, c in coords.items()})

    def unit_mono(self, a: int, e: int = 1):
        lst = [0] * self.size
        lst[a] = e
        return tuple(lst)

    def gen(self, g: Generator) -> "AlgebraElement":
        if g.kind == "H" and g.i == 0:
            return -sum((self.gen(H(k)) for k in range(1, self.n + 1)), self.zero())
        if g not in self.index:
            raise KeyError(f"{g} is not a generator of sl_{self.n + 1}")
        return AlgebraElement(self, {self.unit_mono(self.index[g]): scalars.ONE})

    def bracket(self, x: Generator, y: Generator) -> "AlgebraElement":
        entry = self.bracket_table[self.index[x]][self.index[y]]
        return AlgebraElement(self, {self.unit_mono(a): c for a, c in entry.items()})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {self.one_mono: scalars.ONE})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def scalar(self, c) -> "AlgebraElement":
        return AlgebraElement(self, {self.one_mono: c})

    def e0(self, k: int, power: int = 1) -> "AlgebraElement":
        """e_{0k}^power; power may be negative."""
        return AlgebraElement(self, {self.unit_mono(self.index[E(0, k)], power): scalars.ONE})

    def __repr__(self):
        return f"LieStructure(n={self.n})"


_STRUCTURES: dict = {}


def make_lie_structure(n: int) -> LieStructure:
    """Shared LieStructure for rank n (built once per process)."""
    lie = _STRUCTURES.get(n)
    if lie is None:
        lie = _STRUCTURES[n] = LieStructure(n)
    return lie


def clear_kernel_caches() -> None:
    for lie in _STRUCTURES.values():
        lie.kernel.clear()


def _clean(terms):
    out = {}
    for m, c in terms.items():
        c = norm(c)
        if not scalars.is_zero(c):
            out[m] = c
    return out


class AlgebraElement:
    """A finite scalar combination of PBW monomials.  Immutable."""

    __slots__ = ("lie", "terms", "_hash")

    def __init__(self, lie: LieStructure, terms: dict, _clean_input: bool = True):
        self.lie = lie
        self.terms = _clean(terms) if _clean_input else terms
        self._hash = None

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for m in self.terms for e in m)

    def degree(self) -> int:
        return max((sum(abs(e) for e in m) for m in self.terms), default=0)

    def coefficient(self, mono) -> object:
        return self.terms.get(tuple(mono), scalars.ZERO)

    def scalar_part(self):
        return self.terms.get(self.lie.one_mono, scalars.ZERO)

    def is_scalar(self) -> bool:
        return all(m == self.lie.one_mono for m in self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.lie is other.lie and self.terms == other.terms
        if isinstance(other, (int, type(scalars.ONE))):
            return (self - self.lie.scalar(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, str(c)) for m, c in self.terms.items()))
        return self._hash

    # -- linear structure --------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.lie is not self.lie:
                raise ValueError("elements belong to different Lie structures")
            return other
        return self.lie.scalar(norm(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, scalars.ZERO) + c
        return AlgebraElement(self.lie, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.lie, {m: -c for m, c in self.terms.items()}, False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = norm(c)
        if scalars.is_zero(c):
            return self.lie.zero()
        return AlgebraElement(self.lie, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return _product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only defined for e_{0k}; use lie.e0(k, -m)")
        out = self.lie.one()
        for _ in range(e):
            out = out * self
        return out

    # -- text form ---------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(abs(e) for e in t[0]), t[0]))

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"AlgebraElement({serialize(self)!r})"


def _product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.lie is not b.lie:
        raise ValueError("elements belong to different Lie structures")
    kernel = a.lie.kernel
    out = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c12 = c1 * c2
            for m, k in kernel.mono_mono(m1, m2).items():
                v = out.get(m)
                out[m] = c12 * k if v is None else v + c12 * k
    return AlgebraElement(a.lie, out)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """PBW normal form of a*b in U(sl_{n+1}) (non-negative exponents only)."""
    if a.has_negative_exponents() or b.has_negative_exponents():
        raise WrongModuleError("negative exponents present; use ore.localize_multiply")
    return _product(a, b)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def as_element(lie: LieStructure, x) -> AlgebraElement:
    if isinstance(x, Generator):
        return lie.gen(x)
    if isinstance(x, AlgebraElement):
        return x
    return lie.scalar(norm(x))


def ad_power(x, a: AlgebraElement, m: int) -> AlgebraElement:
    """(ad x)^m (a)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    xe = as_element(a.lie, x)
    out = a
    for _ in range(m):
        if out.is_zero():
            break
        out = xe * out - out * xe
    return out


def casimir_element(n: int) -> AlgebraElement:
    """Quadratic Casimir for the trace form: sum_{i=0}^n h_i^2 + sum_{i != j} e_ij e_ji."""
    lie = make_lie_structure(n)
    out = lie.zero()
    for i in range(n + 1):
        h = lie.gen(H(i))
        out = out + h * h
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                out = out + lie.gen(E(i, j)) * lie.gen(E(j, i))
    return out


def _inverse(mat):
    size = len(mat)
    aug = [list(map(norm, row)) + [mpq(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            raise InvalidAutomorphismError("conjugating matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def conjugation_images(S, n: int) -> dict:
    """Images of the generators under X -> S^{-1} X S."""
    lie = make_lie_structure(n)
    S = [[norm(v) for v in row] for row in S]
    if len(S) != n + 1 or any(len(row) != n + 1 for row in S):
        raise InvalidAutomorphismError(f"expected a {(n + 1)}x{(n + 1)} matrix")
    Sinv = _inverse(S)
    return {g: lie.matrix_to_element(_matmul(_matmul(Sinv, lie.matrices[g]), S)) for g in lie.generators}


def apply_conjugation(S, a: AlgebraElement) -> AlgebraElement:
    """Image of ``a`` under the automorphism extending X -> S^{-1} X S."""
    if a.has_negative_exponents():
        raise WrongModuleError("conjugation is only defined on U (non-negative exponents)")
    lie = a.lie
    images = conjugation_images(S, lie.n)
    out = lie.zero()
    for m, c in a.terms.items():
        term = lie.scalar(c)
        for idx, e in enumerate(m):
            for _ in range(e):
                term = term * images[lie.generators[idx]]
        out = out + term
    return out


def monomial_element(lie: LieStructure, factors) -> AlgebraElement:
    """Product of (Generator, exponent) pairs in the given order."""
    out = lie.one()
    for g, e in factors:
        if g.kind == "E" and g.i == 0 and e < 0:
            out = out * lie.e0(g.j, e)
        else:
            out = out * (lie.gen(g) ** e)
    return out


# -- serialization ------------------------------------------------------------

def serialize(a: AlgebraElement) -> str:
    """``coeff * e[i][j]^k * h[i]^m + ...`` with reduced-fraction coefficients."""
    if a.is_zero():
        return "0"
    parts = []
    for m, c in a.sorted_terms():
        factors = [format_scalar(c)]
        for idx, e in enumerate(m):
            if e:
                g = str(a.lie.generators[idx])
                factors.append(g if e == 1 else f"{g}^{e}")
        parts.append(" * ".join(factors))
    return " + ".join(parts)


_FACTOR = re.compile(r"^(e\[(\d+)\]\[(\d+)\]|h\[(\d+)\])(\^(-?\d+))?$")


def parse_element(n: int, text: str) -> AlgebraElement:
    """Inverse of :func:`serialize` (factors may appear in any order)."""
    lie = make_lie_structure(n)
    text = text.strip()
    if text == "0":
        return lie.zero()
    out = lie.zero()
    for term in _split_terms(text):
        pieces = [p.strip() for p in _split_top(term, "*")]
        coeff = scalars.parse_scalar(pieces[0].strip("()") if pieces[0].startswith("(") else pieces[0])
        factors = []
        for p in pieces[1:]:
            mt = _FACTOR.match(p)
            if not mt:
                raise ValueError(f"bad factor {p!r}")
            e = int(mt.group(6)) if mt.group(6) else 1
            if mt.group(4) is not None:
                factors.append((H(int(mt.group(4))), e))
            else:
                factors.append((E(int(mt.group(2)), int(mt.group(3))), e))
        out = out + monomial_element(lie, factors).scale(coeff)
    return out


def _split_top(text, sep):
    depth, cur, out = 0, [], []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, i) and not (sep == "*" and text.startswith("**", i)):
            out.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    out.append("".join(cur))
    return out


def _split_terms(text):
    return [t.strip() for t in _split_top(text, " + ")]


def random_element(lie: LieStructure, rng, max_degree: int = 3, terms: int = 3,
                   laurent: int = 0, coeff_range: int = 3) -> AlgebraElement:
    """Random element; ``laurent > 0`` allows E(0,k) exponents in [-laurent, laurent]."""
    out = lie.zero()
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        lst = [0] * lie.size
        for _ in range(deg):
            lst[rng.randrange(lie.e0_start if laurent else lie.size)] += 1
        if laurent:
            for k in range(lie.e0_start, lie.size):
                lst[k] = rng.randint(-laurent, laurent)
        c = mpq(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        out = out + AlgebraElement(lie, {lie.one_mono: scalars.ONE}) * AlgebraElement(lie, {tuple(lst): c})
    return out


def all_generator_pairs(lie: LieStructure):
    return product(lie.generators, repeat=2)


def _bracket_coords(lie: LieStructure, coords: dict, b: int) -> dict:
    out = {}
    for a, c in coords.items():
        for k, v in lie.bracket_table[a][b].items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v != 0}


def antisymmetry_defects(lie: LieStructure) -> list:
    gens = lie.generators
    bad = []
    for a in range(lie.size):
        for b in range(lie.size):
            x, y = lie.bracket_table[a][b], lie.bracket_table[b][a]
            if any(norm(x.get(k, 0) + y.get(k, 0)) != 0 for k in set(x) | set(y)):
                bad.append((str(gens[a]), str(gens[b])))
    return bad


def jacobi_defects(lie: LieStructure) -> list:
    """Generator triples violating [[x,y],z] + [[y,z],x] + [[z,x],y] = 0."""
    gens = lie.generators
    bad = []
    for a in range(lie.size):
        for b in range(a + 1, lie.size):
            for c in range(b + 1, lie.size):
                total = {}
                for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
                    for k, v in _bracket_coords(lie, lie.bracket_table[p][q], r).items():
                        total[k] = total.get(k, 0) + v
                if any(v != 0 for v in total.values()):
                    bad.append((str(gens[a]), str(gens[b]), str(gens[c])))
    return bad


def product_bracket_defects(lie: LieStructure) -> list:
    """Pairs where x*y - y*x differs from the tabulated bracket."""
    bad = []
    for x, y in all_generator_pairs(lie):
        xe, ye = lie.gen(x), lie.gen(y)
        if xe * ye - ye * xe != lie.bracket(x, y):
            bad.append((str(x), str(y)))
    return bad
