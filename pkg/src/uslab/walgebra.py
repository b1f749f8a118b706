"""The W-algebra factor of U_S: generators x_ij, omega_k, the W (x) B
decomposition, and desk-scale commutation relations of W.

Elements of W (x) B are stored as ``{(w_mono, b_mono): scalar}`` where
``w_mono`` is an exponent tuple over the ordered W-generators
(X(i,j) lexicographic, then OMEGA(k)) and ``b_mono`` is a PBW monomial
supported on the h / e_{0k} slots.  Products of W-words are put in order by
rewriting adjacent descents with the commutator table of W, which is itself
computed on demand by decomposing commutators in U_S.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from uslab import linalg, scalars
from uslab.pbw import AlgebraElement, E, H, LieStructure, make_lie_structure, serialize
from uslab.scalars import format_scalar, norm


class VerificationFailure(AssertionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidIndexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WGenerator:
    tag: str  # "X" or "OMEGA"
    i: int
    j: int = -1

    def __str__(self):
        if self.tag == "X":
            return f"x[{self.i}][{self.j}]"
        return f"omega[{self.i}]"

    @property
    def key(self):
        """JSON key used by the W-module file format."""
        if self.tag == "X":
            return f"x_{self.i}_{self.j}"
        return f"omega_{self.i}"

    @property
    def kazhdan_degree(self):
        return 2 if self.tag == "X" else 4


def X(i: int, j: int) -> WGenerator:
    return WGenerator("X", i, j)


def OMEGA(k: int) -> WGenerator:
    return WGenerator("OMEGA", k)


def x_expansion(n: int, i: int, j: int) -> AlgebraElement:
    """e_ij e_{0i} e_{0j}^{-1} - h_i."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndexError(f"invalid indices ({i}, {j}) for x_ij")
    lie = make_lie_structure(n)
    return lie.gen(E(i, j)) * lie.e0(i) * lie.e0(j, -1) - lie.gen(H(i))


def omega_expansion(n: int, k: int) -> AlgebraElement:
    """e_k0 e_0k + sum_j (e_kj - delta_jk I/(n+1)) (h_j - 1) e_0k e_0j^{-1}.

    For j = k the bracketed factor e_kk - I/(n+1) is exactly h_k.
    """
    if not 1 <= k <= n:
        raise InvalidIndexError(f"invalid index {k} for omega_k")
    lie = make_lie_structure(n)
    out = lie.gen(E(k, 0)) * lie.e0(k)
    for j in range(1, n + 1):
        left = lie.gen(H(k)) if j == k else lie.gen(E(k, j))
        out = out + left * (lie.gen(H(j)) - 1) * lie.e0(k) * lie.e0(j, -1)
    return out


def x_generator(n: int, i: int, j: int):
    return X(i, j), x_expansion(n, i, j)


def omega_generator(n: int, k: int):
    return OMEGA(k), omega_expansion(n, k)


class WBTensor:
    """Element of W (x) B.  Immutable; arithmetic uses [W, B] = 0."""

    __slots__ = ("w", "terms")

    def __init__(self, w: "WAlgebra", terms: dict):
        self.w = w
        out = {}
        for key, c in terms.items():
            c = norm(c)
            if not scalars.is_zero(c):
                out[key] = c
        self.terms = out

    def __eq__(self, other):
        if not isinstance(other, WBTensor):
            return NotImplemented
        return self.w is other.w and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, str(v)) for k, v in self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, scalars.ZERO) + c
        return WBTensor(self.w, out)

    def __neg__(self):
        return WBTensor(self.w, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WBTensor(self.w, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WBTensor):
            return self.scale(other)
        kernel = self.w.lie.kernel
        out = {}
        for (w1, b1), c1 in self.terms.items():
            for (w2, b2), c2 in other.terms.items():
                wprod = self.w.mono_product(w1, w2)
                bprod = kernel.mono_mono(b1, b2)
                c12 = c1 * c2
                for wm, cw in wprod.items():
                    for bm, cb in bprod.items():
                        key = (wm, bm)
                        out[key] = out.get(key, scalars.ZERO) + c12 * cw * cb
        return WBTensor(self.w, out)

    __rmul__ = scale

    def b_parts_scalar(self) -> bool:
        one = self.w.lie.one_mono
        return all(b == one for (_, b) in self.terms)

    def w_part(self) -> dict:
        """{w_mono: scalar}; only meaningful when every B-part is 1."""
        one = self.w.lie.one_mono
        return {wm: c for (wm, b), c in self.terms.items() if b == one}

    def expand(self) -> AlgebraElement:
        lie = self.w.lie
        out = lie.zero()
        for (wm, bm), c in self.terms.items():
            out = out + (self.w.expand_mono(wm) * AlgebraElement(lie, {bm: scalars.ONE})).scale(c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        lie = self.w.lie
        for (wm, bm), c in sorted(self.terms.items(), key=lambda t: (sum(t[0][0]), t[0])):
            factors = [format_scalar(c)]
            factors += [str(g) if e == 1 else f"{g}^{e}" for g, e in zip(self.w.generators, wm) if e]
            b = serialize(AlgebraElement(lie, {bm: scalars.ONE})).removeprefix("1 * ").removeprefix("1")
            parts.append(" * ".join(factors) + (f" (x) {b}" if b else ""))
        return " + ".join(parts)

    __repr__ = __str__


class WAlgebra:
    """W-generators, their commutator table, and the W (x) B decomposition for one rank."""

    def __init__(self, n: int):
        self.n = n
        self.lie: LieStructure = make_lie_structure(n)
        gens = [X(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        gens += [OMEGA(k) for k in range(1, n + 1)]
        self.generators = tuple(gens)
        self.size = len(gens)
        self.index = {g: a for a, g in enumerate(gens)}
        self.expansions = tuple(
            x_expansion(n, g.i, g.j) if g.tag == "X" else omega_expansion(n, g.i) for g in gens
        )
        self.one_w = (0,) * self.size
        self._table = {}
        self._in_progress = set()
        self._order_cache = {}
        self._expand_cache = {}
        self._mono_decomp_cache = {}
        self._images = {}

    # -- W-words ----------------------------------------------------------
    def word_of(self, wm) -> tuple:
        out = []
        for a, e in enumerate(wm):
            out.extend([a] * e)
        return tuple(out)

    def mono_of(self, word) -> tuple:
        lst = [0] * self.size
        for a in word:
            lst[a] += 1
        return tuple(lst)

    def kazhdan(self, word) -> int:
        return sum(self.generators[a].kazhdan_degree for a in word)

    def commutator_entry(self, a: int, b: int) -> dict:
        """[g_a, g_b] as {w_mono: scalar} (ordered monomials)."""
        key = (a, b)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        if a == b:
            self._table[key] = {}
            return {}
        if (b, a) in self._table:
            res = {m: -c for m, c in self._table[(b, a)].items()}
            self._table[key] = res
            return res
        if key in self._in_progress:
            raise VerificationFailure(f"cyclic dependency computing [{self.generators[a]}, {self.generators[b]}]")
        self._in_progress.add(key)
        try:
            ga, gb = self.expansions[a], self.expansions[b]
            tensor = self.decompose(ga * gb - gb * ga)
            if not tensor.b_parts_scalar():
                raise VerificationFailure(
                    f"[{self.generators[a]}, {self.generators[b]}] has a non-scalar B-part", witness=str(tensor))
            res = tensor.w_part()
        finally:
            self._in_progress.discard(key)
        self._table[key] = res
        return res

    def order_word(self, word: tuple) -> dict:
        """Rewrite a W-word as {ordered w_mono: scalar}."""
        hit = self._order_cache.get(word)
        if hit is not None:
            return hit
        p = next((i for i in range(len(word) - 1) if word[i] > word[i + 1]), None)
        if p is None:
            res = {self.mono_of(word): scalars.ONE}
            self._order_cache[word] = res
            return res
        a, b = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2:]
        res = dict(self.order_word(head + (b, a) + tail))
        for m, c in self.commutator_entry(a, b).items():
            for m2, c2 in self.order_word(head + self.word_of(m) + tail).items():
                v = norm(res.get(m2, scalars.ZERO) + c * c2)
                if scalars.is_zero(v):
                    res.pop(m2, None)
                else:
                    res[m2] = v
        self._order_cache[word] = res
        return res

    def mono_product(self, w1, w2) -> dict:
        if w1 == self.one_w:
            return {w2: scalars.ONE}
        if w2 == self.one_w:
            return {w1: scalars.ONE}
        return self.order_word(self.word_of(w1) + self.word_of(w2))

    def expand_mono(self, wm) -> AlgebraElement:
        hit = self._expand_cache.get(wm)
        if hit is not None:
            return hit
        out = self.lie.one()
        for a, e in enumerate(wm):
            for _ in range(e):
                out = out * self.expansions[a]
        self._expand_cache[wm] = out
        return out

    def expand_word(self, word) -> AlgebraElement:
        out = self.lie.one()
        for a in word:
            out = out * self.expansions[a]
        return out

    # -- tensors ----------------------------------------------------------
    def tensor(self, terms) -> WBTensor:
        return WBTensor(self, terms)

    def w_elem(self, g: WGenerator) -> WBTensor:
        lst = [0] * self.size
        lst[self.index[g]] = 1
        return WBTensor(self, {(tuple(lst), self.lie.one_mono): scalars.ONE})

    def b_elem(self, b: AlgebraElement) -> WBTensor:
        if any(any(m[: self.lie.h_start]) for m in b.terms):
            raise ValueError("element is not in B")
        return WBTensor(self, {(self.one_w, m): c for m, c in b.terms.items()})

    def one(self) -> WBTensor:
        return WBTensor(self, {(self.one_w, self.lie.one_mono): scalars.ONE})

    def generator_image(self, idx: int) -> WBTensor:
        """W (x) B form of the sl-generator with PBW index ``idx``."""
        hit = self._images.get(idx)
        if hit is not None:
            return hit
        lie = self.lie
        g = lie.generators[idx]
        if idx >= lie.h_start:
            res = self.b_elem(lie.gen(g))
        elif g.j != 0:
            i, j = g.i, g.j
            shift = lie.e0(j) * lie.e0(i, -1)
            res = self.w_elem(X(i, j)) * self.b_elem(shift) + self.b_elem(lie.gen(H(i)) * shift)
        else:
            k = g.i
            hk = lie.gen(H(k))
            res = self.w_elem(OMEGA(k)) * self.b_elem(lie.e0(k, -1))
            res = res - self.b_elem(hk * (hk - 1) * lie.e0(k, -1))
            for j in range(1, lie.n + 1):
                if j == k:
                    continue
                tail = self.b_elem((lie.gen(H(j)) - 1) * lie.e0(j, -1))
                res = res - self.generator_image(lie.index[E(k, j)]) * tail
        self._images[idx] = res
        return res

    def decompose_mono(self, m) -> WBTensor:
        hit = self._mono_decomp_cache.get(m)
        if hit is not None:
            return hit
        lie = self.lie
        out = self.one()
        for idx in range(lie.h_start):
            for _ in range(m[idx]):
                out = out * self.generator_image(idx)
        bpart = tuple(0 if idx < lie.h_start else e for idx, e in enumerate(m))
        if any(bpart):
            out = out * WBTensor(self, {(self.one_w, bpart): scalars.ONE})
        self._mono_decomp_cache[m] = out
        return out

    def decompose(self, u: AlgebraElement) -> WBTensor:
        out = WBTensor(self, {})
        for m, c in u.terms.items():
            out = out + self.decompose_mono(m).scale(c)
        return out

    def relations(self) -> dict:
        """{(a, b): [g_a, g_b] ordered} for all a < b."""
        return {(a, b): self.commutator_entry(a, b)
                for a in range(self.size) for b in range(a + 1, self.size)}


@lru_cache(maxsize=None)
def w_algebra(n: int) -> WAlgebra:
    return WAlgebra(n)


def decompose_WB(u: AlgebraElement) -> WBTensor:
    return w_algebra(u.lie.n).decompose(u)


def w_commutator(n: int, g1: WGenerator, g2: WGenerator) -> WBTensor:
    """[g1, g2] computed in U_S and decomposed; raises unless B-parts are scalar."""
    w = w_algebra(n)
    a, b = w.expansions[w.index[g1]], w.expansions[w.index[g2]]
    t = w.decompose(a * b - b * a)
    if not t.b_parts_scalar():
        raise VerificationFailure(f"[{g1}, {g2}] has a non-scalar B-part", witness=str(t))
    return t


def verify_w_membership(n: int) -> list[dict]:
    """Check [t, g] = 0 for every W-generator g and t in {h_i, e_0k}."""
    w = w_algebra(n)
    lie = w.lie
    targets = [H(i) for i in range(1, n + 1)] + [E(0, k) for k in range(1, n + 1)]
    report = []
    for g, exp in zip(w.generators, w.expansions):
        for t in targets:
            te = lie.gen(t)
            comm = te * exp - exp * te
            entry = {
                "check_name": f"[{t}, {g}] = 0",
                "n": n,
                "status": "pass" if comm.is_zero() else "fail",
                "witness": serialize(comm),
            }
            report.append(entry)
            if not comm.is_zero():
                raise VerificationFailure(f"[{t}, {g}] != 0", witness=serialize(comm))
    return report


def ordered_w_monomials(n: int, degree_bound: int):
    w = w_algebra(n)
    out = [w.one_w]
    for d in range(1, degree_bound + 1):
        for combo in combinations_with_replacement(range(w.size), d):
            out.append(w.mono_of(combo))
    return out


def monomial_independence(n: int, degree_bound: int = 2):
    """Certify that ordered W-monomials of degree <= bound expand to
    linearly independent elements of U_S.  Returns (True, rank, count)."""
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    w = w_algebra(n)
    monos = ordered_w_monomials(n, degree_bound)
    expansions = [w.expand_mono(m) for m in monos]
    support = sorted({pm for e in expansions for pm in e.terms})
    col = {pm: i for i, pm in enumerate(support)}
    # columns are W-monomials: rows are PBW coordinates
    rows = [[scalars.ZERO] * len(monos) for _ in support]
    for j, e in enumerate(expansions):
        for pm, c in e.terms.items():
            rows[col[pm]][j] = c
    r = linalg.rank(rows, len(monos)) if support else 0
    if r < len(monos):
        ns = linalg.nullspace(rows, len(monos))
        combo = {str(monos[i]): format_scalar(c) for i, c in enumerate(ns[0]) if c != 0}
        raise VerificationFailure("ordered W-monomials are linearly dependent", witness=combo)
    return True, r, len(monos)


def centralizer_of_e(n: int):
    """ker(ad e) in sl_{n+1} for e = e_10 + ... + e_n0, certified equal to
    span{e_ij - h_i, e_k0}.  Returns the listed basis as AlgebraElements."""
    lie = make_lie_structure(n)
    gens = lie.generators
    e = lie.zero()
    for k in range(1, n + 1):
        e = e + lie.gen(E(k, 0))
    # matrix of ad e in the generator basis (columns = inputs)
    rows = [[scalars.ZERO] * len(gens) for _ in gens]
    for col, g in enumerate(gens):
        img = e * lie.gen(g) - lie.gen(g) * e
        for m, c in img.terms.items():
            rows[m.index(1)][col] = c
    kernel = linalg.nullspace(rows, len(gens))
    listed = [lie.gen(E(i, j)) - lie.gen(H(i)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    listed += [lie.gen(E(k, 0)) for k in range(1, n + 1)]
    for v in listed:
        if not (e * v - v * e).is_zero():
            raise VerificationFailure(f"[e, {v}] != 0", witness=str(v))
    vecs = [[v.coefficient(lie.unit_mono(a)) for a in range(len(gens))] for v in listed]
    expected_dim = n * (n - 1) + n
    if len(kernel) != expected_dim or linalg.rank(vecs, len(gens)) != expected_dim:
        raise VerificationFailure(f"centralizer dimension {len(kernel)} != {expected_dim}")
    if linalg.rank(vecs + kernel, len(gens)) != expected_dim:
        raise VerificationFailure("listed vectors do not span ker(ad e)")
    return listed
