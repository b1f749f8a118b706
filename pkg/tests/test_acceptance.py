"""The twelve acceptance criteria, each timed against its limit.

Every criterion starts from empty memo tables so its timing does not
profit from earlier tests.  One PASS/FAIL line per criterion is printed
(shown in the pytest terminal summary, or run this file directly).
"""
import functools
import random
import time
from fractions import Fraction
from itertools import permutations, product
from math import comb

import pytest
from gmpy2 import mpq

import uslab
from uslab import scalars
from uslab.lab import vectors as vec
from uslab.lab.functors import (
    G1Module, GModule, freeness_rank, injectivity_scan, local_nilpotency_check, sample_generic_mu,
)
from uslab.lab.gln import wedge_gln_module
from uslab.lab.modules import OmegaOneC, TModule
from uslab.lab.principal import (
    chain_defects, equivariance_defects, hom_dimension, image_whittaker, is_simple, principal_block,
    principal_simple,
)
from uslab.lab.weights import casimir_scalar, casimir_value, classify_weight, dot_action, gamma
from uslab.lab.whittaker import extract_w_action, weight_space, whittaker_subspace
from uslab.lab.wmodule import load_w_module, one_dim_w_module, save_w_module, w_action_on_wedge
from uslab.pbw import antisymmetry_defects, jacobi_defects, make_lie_structure, random_element
from uslab.quiver import QuiverRep, check_local_nilpotency, check_relations, enumerate_simples
from uslab.walgebra import centralizer_of_e, monomial_independence, verify_w_membership, w_algebra

RESULTS = {}


def criterion(number, title, limit):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            uslab.clear_caches()
            start = time.perf_counter()
            error = None
            try:
                fn(*args, **kwargs)
            except Exception as exc:  # noqa: BLE001
                error = exc
            elapsed = time.perf_counter() - start
            ok = error is None and elapsed < limit
            detail = f"{elapsed:.2f}s / limit {limit}s"
            if error is not None:
                detail += f"; {type(error).__name__}: {str(error)[:120]}"
            RESULTS[number] = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
            print(RESULTS[number])
            if error is not None:
                raise error
            assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"
        return run
    return wrap


@criterion(1, "Lie axioms on generators, n = 2..4", 5)
def test_criterion_01_lie_axioms():
    for n in (2, 3, 4):
        lie = make_lie_structure(n)
        assert antisymmetry_defects(lie) == []
        assert jacobi_defects(lie) == []


@criterion(2, "W generators commute with h_i and e_0k, n = 2..4", 30)
def test_criterion_02_w_membership():
    for n in (2, 3, 4):
        rows = verify_w_membership(n)
        assert len(rows) == 2 * n * (n * (n - 1) + n)
        assert all(r["status"] == "pass" for r in rows)


@criterion(3, "W (x) B round trip and W-monomial independence, n = 2, 3", 60)
def test_criterion_03_tensor_decomposition():
    for n in (2, 3):
        w = w_algebra(n)
        lie = w.lie
        for g in lie.generators:
            assert w.decompose(lie.gen(g)).expand() == lie.gen(g), g
        rng = random.Random(n)
        for _ in range(50):
            u = random_element(lie, rng, max_degree=2, terms=3)
            assert w.decompose(u).expand() == u
        ok, rank, count = monomial_independence(n, 2)
        assert ok and rank == count


@criterion(4, "centralizer of e has the listed basis, n = 2..4", 5)
def test_criterion_04_centralizer():
    for n in (2, 3, 4):
        assert len(centralizer_of_e(n)) == n * (n - 1) + n


@criterion(5, "pi-complex, equivariance, wh ladder and n simples, n = 2, 3", 60)
def test_criterion_05_chain_complex():
    for n in (2, 3):
        assert chain_defects(n, 6) == []
        assert equivariance_defects(n, 6) == []
        dims = [len(image_whittaker(n, k, 6)[0]) for k in range(n)]
        assert dims == [comb(n - 1, k) for k in range(n)]
        block = principal_block(n, 6)
        assert len(block) == n and all(is_simple(b) for b in block)
        for i, a in enumerate(block):
            for j, b in enumerate(block):
                assert hom_dimension(a, b) == int(i == j)


@criterion(6, "W-action formulas equal the extracted action on all wedges, n = 2, 3", 60)
def test_criterion_06_w_action():
    for n in (2, 3):
        for k in range(n + 1):
            M = TModule(wedge_gln_module(n, k))
            B = whittaker_subspace(M, M.truncation(1), [1] * n)
            assert len(B) == comb(n, k)
            got, want = extract_w_action(M, B), w_action_on_wedge(M.V)
            for g in want.mats:
                assert got.mats[g] == want.mats[g], (n, k, g)


def ten_modules():
    c = scalars.param("c")
    mods = [principal_simple(n, k) for n in (2, 3) for k in range(n)]
    mods += [one_dim_w_module(c, 2), one_dim_w_module(c, 3), one_dim_w_module(-1, 2)]
    mods += [w_action_on_wedge(wedge_gln_module(2, 1)), w_action_on_wedge(wedge_gln_module(3, 1))]
    return mods


@criterion(7, "F G = id and F1 G1 = id on 10 loaded W-modules", 60)
def test_criterion_07_round_trips(tmp_path):
    mods = ten_modules()
    assert len(mods) == 10
    for idx, V in enumerate(mods):
        path = tmp_path / f"m{idx}.json"
        save_w_module(V, path)
        L = load_w_module(path)
        n = L.n
        G = GModule(L)
        assert extract_w_action(G, whittaker_subspace(G, G.truncation(2), [1] * n)).same_as(L)
        G1 = G1Module(L, scalars.mu(n))
        S = weight_space(G1, G1.slice_basis((0,) * n), scalars.mu(n))
        assert extract_w_action(G1, S).same_as(L)
        assert L.same_as(V)


@criterion(8, "one-dimensional block: W-action and central character in symbolic c", 30)
def test_criterion_08_one_dimensional_block():
    c = scalars.param("c")
    for n in (2, 3):
        M = OmegaOneC(n, c)
        B = whittaker_subspace(M, M.truncation(1), [1] * n)
        got = extract_w_action(M, B)
        t = c / (n + 1)
        for g, m in got.mats.items():
            assert m == [[t if g.tag == "X" else t * t + t]]
        assert casimir_scalar(M, vec.basis_vector((0,) * n, 0)) == casimir_value(gamma(c, n))


@criterion(9, "cuspidal scan: all transition determinants nonzero, 5 samples, n = 2, 3", 120)
def test_criterion_09_cuspidal_scan():
    cc = mpq(1, 2)
    for n in (2, 3):
        rng = random.Random(100 + n)
        for _ in range(5):
            mu = sample_generic_mu(rng, n, c=cc)
            rows = []
            for k in range(n):
                rows += injectivity_scan(principal_simple(n, k), mu, 3, "no-int1")
            rows += injectivity_scan(one_dim_w_module(cc, n), mu, 3, "no-int2", cc)
            assert rows and all(r["status"] == "pass" for r in rows)


@criterion(10, "local nilpotency of e_0i - 1 and freeness of G(V) up to degree 4", 30)
def test_criterion_10_nilpotency_and_freeness():
    mods = [one_dim_w_module(scalars.param("c"), 2)] + [principal_simple(n, k) for n in (2, 3) for k in range(n)]
    for V in mods:
        assert local_nilpotency_check(V, 4)
        rank, count = freeness_rank(V, 4)
        assert rank == count == comb(V.n + 4, 4) * V.dim


@criterion(11, "quiver checkers on fixtures and n simples", 5)
def test_criterion_11_quiver():
    z = QuiverRep.zero(2, (1, 1))
    assert check_relations(z)["status"] == "pass"
    assert check_relations(QuiverRep.zero(2, (1, 0)))["status"] == "pass"
    assert check_relations(z.with_matrix(1, 2, [[1]]).with_matrix(2, 1, [[1]]))["status"] == "fail"
    assert check_local_nilpotency(z)
    assert not check_local_nilpotency(QuiverRep.zero(2, (1, 0)).with_matrix(1, 1, [[1]]))
    assert check_local_nilpotency(z.with_matrix(1, 2, [[1]]))
    for n in (2, 3):
        reps = enumerate_simples(n)
        assert len(reps) == n == len(principal_block(n, 4))
        assert all(check_relations(r)["status"] == "pass" and check_local_nilpotency(r) for r in reps)


def closed_form(lam):
    shifted = [x - i for i, x in enumerate(lam)]
    regular = len(set(shifted)) == len(shifted)
    integral = all((lam[i] - lam[i + 1]).denominator == 1 for i in range(len(lam) - 1))
    return ("regular" if regular else "singular", "integral" if integral else "non-integral")


@criterion(12, "weight taxonomy on an exhaustive grid of small rational weights", 5)
def test_criterion_12_weight_taxonomy():
    grid = [Fraction(k, 2) for k in range(-4, 5)]
    for n in (2, 3):
        perms = list(permutations(range(n + 1)))
        for head in product(grid, repeat=n):
            lam = list(head) + [-sum(head)]
            got = classify_weight(lam)
            assert got == closed_form(lam), lam
            fixed = [w for w in perms if dot_action(w, lam) == tuple(mpq(x) for x in lam)]
            assert (got[0] == "regular") == (len(fixed) == 1), lam
    for n in (2, 3, 4):
        for num, den in product(range(-3 * (n + 1), 3 * (n + 1) + 1), (1, 2, 3)):
            cc = Fraction(num, den)
            singular_integral = classify_weight(gamma(mpq(cc), n)) == ("singular", "integral")
            assert singular_integral == (cc.denominator == 1 and -n <= cc <= -1), (n, cc)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
