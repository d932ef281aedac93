import random
from fractions import Fraction

import pytest

from cycert.charvar import (characteristic_ideal, characteristic_invariants, evaluate_power, multinomial,
                            segre_ideal)
from cycert.ideal import ContractError
from cycert.jacobian import pairs
from cycert.poly import z_ring


def test_multinomial():
    assert multinomial((0, 0)) == 1 and multinomial((0, 1)) == 2
    assert multinomial((1, 1, 1)) == 1 and multinomial((0, 0, 2)) == 3 and multinomial((0, 1, 2)) == 6


def test_quadrics_double_off_diagonal(x0):
    ci = characteristic_ideal(x0, 1)
    assert len(ci.generators) == 9
    C = x0.multiplication_matrix(1).matrix
    for l, f in enumerate(ci.generators):
        assert f.is_homogeneous() and f.total_degree() == 2
        for t, (i, j) in enumerate(pairs(9)):
            e = [0] * 9
            e[i] += 1
            e[j] += 1
            want = C[t, l] * (1 if i == j else 2)
            assert f.coeff(tuple(e)) == want


def test_cubic(x0):
    ci = characteristic_ideal(x0, 2)
    assert len(ci.generators) == 1
    assert ci.generators[0].total_degree() == 3


@pytest.mark.parametrize("k", [1, 2])
def test_generators_evaluate_the_power(x0, k):
    ci = characteristic_ideal(x0, k)
    rng = random.Random(k)
    for _ in range(10):
        z = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)]
        assert [f.evaluate(z) for f in ci.generators] == evaluate_power(x0, z, k)


def test_reference_invariants(x0):
    hd = characteristic_invariants(characteristic_ideal(x0, 1))
    assert hd.dimension == 2
    assert hd.arithmetic_genus == -41
    assert hd.polynomial == [Fraction(-40), Fraction(24), Fraction(6)]
    seg = characteristic_invariants(segre_ideal())
    assert hd.dimension != seg.dimension


def test_order_does_not_change_hilbert_data(x0):
    # grlex and grevlex on the cubic, where both are cheap
    ci = characteristic_ideal(x0, 2)
    a = characteristic_invariants(ci, "grlex")
    b = characteristic_invariants(ci, "grevlex")
    assert (a.dimension, a.polynomial) == (b.dimension, b.polynomial) == (7, a.polynomial)
    assert a.arithmetic_genus == 0


def test_segre_control():
    hd = characteristic_invariants(segre_ideal())
    assert (hd.dimension, hd.arithmetic_genus, hd.degree) == (4, 0, 6)
    assert hd.polynomial == [1, 3, Fraction(13, 4), Fraction(3, 2), Fraction(1, 4)]


def test_unit_ideal_is_empty():
    Z = z_ring(9)
    hd = characteristic_invariants([Z.one()])
    assert hd.dimension == -1


def test_rejects_bad_input(x0):
    with pytest.raises(ContractError):
        characteristic_ideal(x0, 3)
    with pytest.raises(ContractError):
        characteristic_invariants([])
