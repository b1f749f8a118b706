from math import comb

import pytest
from gmpy2 import mpq

from uslab import linalg
from uslab.lab import vectors as vec
from uslab.lab.gln import wedge_gln_module
from uslab.lab.modules import TModule
from uslab.lab.principal import (
    a_structure_defects, hom_dimension, image_whittaker, is_simple, principal_block, principal_simple,
)
from uslab.lab.whittaker import (
    InvalidTruncation, NoTwistExists, composed_twist, extract_w_action, joint_eigenspace, twist_to_standard,
    twisted_character, whittaker_subspace,
)
from uslab.lab.wmodule import w_action_on_wedge
from uslab.walgebra import OMEGA, X


def test_wh1_of_t_omega_is_v():
    for n in (2, 3):
        for k in range(n + 1):
            M = TModule(wedge_gln_module(n, k))
            B = whittaker_subspace(M, M.truncation(2), [1] * n)
            assert len(B) == comb(n, k)
            assert all(all(sum(a) == 0 for a, _ in b) for b in B)


@pytest.mark.parametrize("n", [2, 3])
def test_wh1_of_image_of_pi(n):
    for k in range(n):
        basis, _ = image_whittaker(n, k, 4)
        assert len(basis) == comb(n - 1, k)


def test_wh1_of_image_pi0_is_sum_of_basis_vectors():
    basis, _ = image_whittaker(2, 0, 4)
    (b,) = basis
    assert b == {((0, 0), 0): 1, ((0, 0), 1): 1}


def test_wh0_of_polynomial_module_contains_constants():
    n = 2
    V = wedge_gln_module(n, 1)
    M = TModule(V, "poly")
    B = whittaker_subspace(M, M.truncation(2), [0] * n)
    keys = vec.keys_sorted(B)
    rank = linalg.rank([list(r) for r in zip(*vec.coordinates(B, keys))], len(keys))
    for b in range(V.dim):
        v = vec.basis_vector((0,) * n, b)
        rows = [list(r) for r in zip(*vec.coordinates(B + [v], keys))]
        assert linalg.rank(rows, len(keys)) == rank


def test_non_closed_truncation_rejected():
    M = TModule(wedge_gln_module(2, 0), "poly")
    with pytest.raises(InvalidTruncation):
        joint_eigenspace([lambda v: M.act(M.lie.generators[0], v)], [0], M.truncation(1))


def test_wrong_character_length():
    M = TModule(wedge_gln_module(2, 0))
    with pytest.raises(ValueError):
        whittaker_subspace(M, M.truncation(1), [1])


def test_w_action_natural_module():
    V = wedge_gln_module(2, 1)
    W = w_action_on_wedge(V)
    assert W.mats[X(1, 2)] == linalg.matsub(V.E[(1, 2)], V.E[(1, 1)])


def test_w_action_trivial_module():
    W = w_action_on_wedge(wedge_gln_module(3, 0))
    assert all(m == [[0]] for m in W.mats.values())


@pytest.mark.parametrize("n", [2, 3])
def test_w_action_matches_extraction(n):
    for k in range(n + 1):
        M = TModule(wedge_gln_module(n, k))
        B = whittaker_subspace(M, M.truncation(1), [1] * n)
        assert extract_w_action(M, B).same_as(w_action_on_wedge(M.V))


@pytest.mark.parametrize("n", [2, 3])
def test_principal_block(n):
    block = principal_block(n, 4)
    assert [b.dim for b in block] == [comb(n - 1, k) for k in range(n)]
    assert all(is_simple(b) for b in block)
    for i, a in enumerate(block):
        for j, b in enumerate(block):
            assert hom_dimension(a, b) == int(i == j)
        assert hom_dimension(a, principal_simple(n, i)) == 1


def test_omega_vanishes_on_principal_simples():
    for k in range(3):
        L = principal_simple(3, k)
        assert all(linalg.is_zero_matrix(L.mats[OMEGA(q)]) for q in (1, 2, 3))


@pytest.mark.parametrize("n", [2, 3])
def test_a_structure(n):
    for k in range(n):
        assert a_structure_defects(n, k) == []


def test_twist_trivial():
    assert twist_to_standard([1, 1]) == []


def test_twist_scaling_then_shear():
    a = [2, 0]
    steps = twist_to_standard(a)
    assert [s.kind for s in steps] == ["scaling", "shear"]
    assert twisted_character(steps, a) == [1, 1]


def test_twist_permutation_scaling_shear():
    a = [0, 3]
    steps = twist_to_standard(a)
    assert [s.kind for s in steps] == ["permutation", "scaling", "shear"]
    assert twisted_character(steps, a) == [1, 1]


def test_twist_composed_matrix():
    steps = twist_to_standard([2, 0])
    S = composed_twist(steps, 2)
    # diag(1, T): T = shear(1 - 0) * scaling(1/2)
    assert S == [[1, 0, 0], [0, mpq(1, 2), 0], [0, mpq(1, 2), 1]]


@pytest.mark.parametrize("a", [[5, -2, 0], [0, 0, mpq(1, 3)], [1, 2, 3], [-1, 1, 1]])
def test_twist_general(a):
    assert twisted_character(twist_to_standard(a), a) == [1, 1, 1]


def test_twist_zero_character():
    with pytest.raises(NoTwistExists):
        twist_to_standard([0, 0])
