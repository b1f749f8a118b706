from fractions import Fraction
from itertools import permutations, product

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from uslab import scalars
from uslab.lab import vectors as vec
from uslab.lab.gln import gln_highest_weight, scalar_gln_module, sl_weight_of, tensor_gln, wedge_gln_module
from uslab.lab.modules import OmegaOneC, TModule
from uslab.lab.weights import (
    NotAnEigenvector, NotSumZeroError, WeightVector, casimir_scalar, casimir_value, classify_weight,
    dot_action, gamma, rho, transposition,
)


def test_zero_weight_is_regular_integral():
    assert classify_weight((0, 0, 0)) == ("regular", "integral")


def test_gamma_minus_two():
    g = gamma(-2, 2)
    assert g == (mpq(-4, 3), mpq(2, 3), mpq(2, 3))
    assert classify_weight(g) == ("singular", "integral")


def test_dot_action_transposition():
    assert dot_action(transposition(2, 0, 1), (0, 0, 0)) == (-1, 1, 0)


def test_dot_action_bad_permutation():
    with pytest.raises(ValueError):
        dot_action((0, 0, 1), (0, 0, 0))


def test_sum_zero_enforced():
    with pytest.raises(NotSumZeroError):
        WeightVector((1, 0, 0))
    with pytest.raises(NotSumZeroError):
        classify_weight((1, 2, 3))


def test_rho():
    assert rho(2) == (1, 0, -1)
    assert rho(3) == (mpq(3, 2), mpq(1, 2), mpq(-1, 2), mpq(-3, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gamma_singular_integral_exactly_for_small_negative_c(n):
    for num, den in product(range(-3 * (n + 1), 3 * (n + 1) + 1), (1, 2, 3)):
        cc = mpq(num, den)
        got = classify_weight(gamma(cc, n)) == ("singular", "integral")
        assert got == (cc.denominator == 1 and -n <= cc <= -1), cc


small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(st.lists(small, min_size=2, max_size=4))
def test_classification_is_dot_invariant(entries):
    lam = list(entries) + [-sum(entries, Fraction(0))]
    n = len(lam) - 1
    base = classify_weight(lam)
    for w in list(permutations(range(n + 1)))[:6]:
        assert classify_weight(dot_action(w, lam)) == base


@given(st.lists(small, min_size=2, max_size=3))
def test_casimir_value_is_dot_invariant(entries):
    lam = list(entries) + [-sum(entries, Fraction(0))]
    n = len(lam) - 1
    for w in permutations(range(n + 1)):
        assert casimir_value(dot_action(w, lam)) == casimir_value(lam)


def test_casimir_trivial_module():
    M = TModule(wedge_gln_module(2, 0), "poly")
    assert casimir_scalar(M, vec.basis_vector((0, 0), 0)) == 0


def test_casimir_not_eigenvector():
    # V = C^2 (x) C^2 mixes Sym^2 and wedge^2; e1(x)e1 + e1(x)e2 straddles both
    M = TModule(tensor_gln(wedge_gln_module(2, 1), wedge_gln_module(2, 1)), "poly")
    v = vec.vadd(vec.basis_vector((0, 0), 0), vec.basis_vector((0, 0), 1))
    with pytest.raises(NotAnEigenvector):
        casimir_scalar(M, v)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_casimir_agreement_on_wedges(n, k):
    V = wedge_gln_module(n, k)
    v = vec.basis_vector((0,) * n, V.highest)
    a = casimir_scalar(TModule(V, "poly"), v)
    b = casimir_scalar(TModule(V, "omega"), v)
    assert a == b == casimir_value(sl_weight_of(gln_highest_weight(V)))


def test_casimir_agreement_symbolic():
    n = 2
    V = tensor_gln(wedge_gln_module(n, 1), scalar_gln_module(n, scalars.param("lam1")))
    v = vec.basis_vector((0,) * n, V.highest)
    a = casimir_scalar(TModule(V, "poly"), v)
    assert a == casimir_scalar(TModule(V, "omega"), v)
    assert a == casimir_value(sl_weight_of(gln_highest_weight(V)))


@pytest.mark.parametrize("n", [2, 3])
def test_casimir_of_omega_one_c(n):
    c = scalars.param("c")
    got = casimir_scalar(OmegaOneC(n, c), vec.basis_vector((0,) * n, 0))
    assert got == casimir_value(gamma(c, n))
    assert got == c * c * n / (n + 1) + c * n
