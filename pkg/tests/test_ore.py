import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uslab.ore import commute_past_inverse, commutes_with, e0_power, localize_multiply
from uslab.pbw import E, H, make_lie_structure, parse_element, random_element
from uslab.walgebra import x_expansion


def test_inverse_past_e12():
    lie = make_lie_structure(2)
    got = commute_past_inverse(lie.gen(E(1, 2)), 1)
    assert got == parse_element(2, "1 * e[1][2] * e[0][1]^-1 + -1 * e[0][2] * e[0][1]^-2")


def test_inverse_past_commuting_generator():
    lie = make_lie_structure(2)
    assert commute_past_inverse(lie.gen(E(0, 2)), 1) == lie.gen(E(0, 2)) * lie.e0(1, -1)


def test_inverse_past_h1():
    lie = make_lie_structure(2)
    got = commute_past_inverse(lie.gen(H(1)), 1)
    assert got == lie.gen(H(1)) * lie.e0(1, -1) - lie.e0(1, -1)


@pytest.mark.parametrize("n", [2, 3])
def test_commute_past_inverse_recovers_input(n):
    lie = make_lie_structure(n)
    rng = random.Random(n)
    for _ in range(20):
        a = random_element(lie, rng, 3, 2)
        k, m = rng.randint(1, n), rng.randint(1, 3)
        out = commute_past_inverse(a, k, m)
        assert lie.e0(k, m) * out == a
        assert lie.e0(k, m) * (out * lie.e0(k, m)) == a * lie.e0(k, m)


def test_commute_past_inverse_rejects_bad_input():
    lie = make_lie_structure(2)
    with pytest.raises(ValueError):
        commute_past_inverse(lie.gen(H(1)), 1, 0)
    with pytest.raises(ValueError):
        commute_past_inverse(lie.e0(1, -1), 1)


def test_inverse_law():
    lie = make_lie_structure(2)
    assert localize_multiply(lie.gen(E(0, 1)), lie.e0(1, -1)) == lie.one()
    assert localize_multiply(lie.e0(2, -3), lie.e0(2, 3)) == lie.one()


def test_exponent_cancellation():
    lie = make_lie_structure(2)
    a = lie.gen(E(1, 2)) * lie.gen(E(0, 1)) * lie.e0(2, -1)
    assert localize_multiply(a, lie.gen(E(0, 2))) == lie.gen(E(1, 2)) * lie.gen(E(0, 1))


def test_commutes_with_examples():
    lie = make_lie_structure(2)
    assert commutes_with(lie.gen(E(0, 1)), [E(0, 2)])
    assert commutes_with(x_expansion(2, 1, 2), [H(1), H(2), E(0, 1), E(0, 2)])
    assert not commutes_with(lie.gen(E(1, 2)), [E(0, 1)])


def test_e0_power():
    lie = make_lie_structure(3)
    assert e0_power(lie, (1, -2, 0)) == lie.gen(E(0, 1)) * lie.e0(2, -2)


@given(st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_localized_associativity(seed, n):
    lie = make_lie_structure(n)
    rng = random.Random(seed)
    a, b, c = (random_element(lie, rng, 2, 2, laurent=2) for _ in range(3))
    assert localize_multiply(localize_multiply(a, b), c) == localize_multiply(a, localize_multiply(b, c))


@given(st.integers(0, 10**6))
def test_restricts_to_u_product(seed):
    lie = make_lie_structure(2)
    rng = random.Random(seed)
    a, b = random_element(lie, rng, 2, 2), random_element(lie, rng, 2, 2)
    assert localize_multiply(a, b) == a * b
