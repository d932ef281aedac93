import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cycert.ideal import (ContractError, Ideal, buchberger, graded_normal_form, hilbert_data,
                          in_ideal, normal_form)
from cycert.jacobian import Arrangement, x_parity
from cycert.poly import MonomialOrder, Polynomial, Ring, z_ring

R = Ring(["x1", "x2"])
R3 = Ring(["x1", "x2", "x3"])


def as_set(gb):
    return {str(g) for g in gb}


def test_buchberger_examples():
    x1, x2 = R.gens()
    assert as_set(buchberger([x1, x2])) == {"x1", "x2"}
    gb = buchberger([x1**2 + x2**2, x1 * x2])
    assert as_set(gb) == {"x1*x2", "x1^2 + x2^2", "x2^3"}
    assert buchberger([R.one(), x1]).is_unit()


def test_groebner_is_reduced_and_monic():
    x1, x2, x3 = R3.gens()
    gb = buchberger([x1**2 - x2 * x3, x1 * x2 - x3**2, 3 * x2**2 - x1 * x3])
    lms = gb.leading_monomials()
    for g in gb:
        assert g.leading_coefficient == 1
        others = [m for m in lms if m != g.leading_monomial]
        for m in g.terms:
            assert not any(all(a <= b for a, b in zip(o, m)) for o in others)


def _random_poly(rng, ring, deg, nterms):
    terms = {}
    for _ in range(nterms):
        e = [0] * ring.nvars
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Polynomial(ring, terms)


@pytest.mark.parametrize("seed", range(12))
def test_buchberger_against_sympy(seed):
    rng = random.Random(seed)
    gens = [g for g in (_random_poly(rng, R3, 3, 3) for _ in range(3)) if not g.is_zero()]
    xs = sympy.symbols("x1 x2 x3")
    sgens = [sympy.sympify(str(g).replace("^", "**"), locals=dict(zip(map(str, xs), xs))) for g in gens]
    want = sympy.groebner(sgens, *xs, order="grlex")
    got = buchberger(gens, MonomialOrder(3))
    assert len(got) == len(want.exprs)
    mine = {sympy.expand(sympy.sympify(str(g).replace("^", "**"), locals=dict(zip(map(str, xs), xs))))
            for g in got}
    theirs = {sympy.expand(e / sympy.Poly(e, *xs).LC(order="grlex")) for e in want.exprs}
    assert mine == theirs


Z4 = z_ring(4)
small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 4), st.integers(-3, 3), min_size=1, max_size=4)


@st.composite
def ideal_and_polys(draw):
    gens = [Polynomial(Z4, draw(small)) for _ in range(2)]
    gens = [g for g in gens if not g.is_zero()] or [Z4.gens()[0]]
    f, g = (Polynomial(Z4, draw(small)) for _ in range(2))
    return gens, f, g


@given(ideal_and_polys(), st.integers(-3, 3))
@settings(max_examples=40, deadline=None)
def test_normal_form_properties(data, c):
    gens, f, g = data
    gb = buchberger(gens)
    nf = normal_form(f, gb)
    assert normal_form(nf, gb) == nf
    assert normal_form(f + g.scale(c), gb) == nf + normal_form(g, gb).scale(c)
    assert in_ideal(f - nf, gb)
    for h in gens:
        assert in_ideal(h * f, gb)


def test_hilbert_linear_section_is_projective_space():
    Z = z_ring(9)
    hd = hilbert_data(buchberger([Z.gens()[0]]))
    assert hd.dimension == 7 and hd.arithmetic_genus == 0 and hd.degree == 1


def test_hilbert_quadric_hypersurface():
    Z = z_ring(5)
    z = Z.gens()
    hd = hilbert_data(buchberger([z[0] * z[1] - z[2] ** 2 + z[3] * z[4]]))
    assert hd.dimension == 3 and hd.degree == 2
    assert hd.polynomial and hd.arithmetic_genus == 0


@pytest.mark.parametrize("n,degs", [(4, [1]), (5, [2, 2]), (6, [1, 2, 3]), (3, [3])])
def test_hilbert_complete_intersections(n, degs):
    Z = z_ring(n)
    z = Z.gens()
    hd = hilbert_data(buchberger([z[i] ** d for i, d in enumerate(degs)]))
    assert hd.dimension == n - 1 - len(degs)
    prod = 1
    for d in degs:
        prod *= d
    assert hd.degree == prod
    for s in range(6, 9):
        assert hd.hilbert_function(s) == hd.evaluate(s)


def test_plane_cubic_has_genus_one():
    Z = z_ring(3)
    z = Z.gens()
    hd = hilbert_data(buchberger([z[0] ** 3 + z[1] ** 3 + z[2] ** 3]))
    assert (hd.dimension, hd.arithmetic_genus) == (1, 1)


def test_contract_errors():
    with pytest.raises(ContractError):
        Ideal([R.zero()])
    with pytest.raises(ContractError):
        Ideal([])
    x1, x2 = R.gens()
    with pytest.raises(ContractError):
        buchberger([x1**3 - x2], max_degree=2)
    gb = buchberger([x1**3 - x2**3], max_degree=2)
    with pytest.raises(ContractError):
        normal_form(x1**3, gb)
    with pytest.raises(ContractError):
        hilbert_data(gb)
    with pytest.raises(ContractError):
        hilbert_data(buchberger([x1**2 - x2]))


def test_truncated_basis_matches_graded_normal_form(x0):
    gb = buchberger(x0.ideal, max_degree=3)
    ring = x0.ring
    ms = ring.monomials_of_bidegree(2, 1)
    assert len(ms) == 144
    for m in ms:
        f = ring.monomial(m)
        assert normal_form(f, gb) == graded_normal_form(f, x0.ideal, (2, 1))


def test_full_basis_matches_invariant_reducer(x0):
    gb = buchberger(x0.ideal)
    ring = x0.ring
    rng = random.Random(5)
    for p in (1, 2, 3):
        ms = [m for m in ring.monomials_of_bidegree(2 * p, p) if not any(x_parity(m))]
        for m in rng.sample(ms, min(len(ms), 30)):
            f = ring.monomial(m)
            assert normal_form(f, gb) == x0.normal_form(f)


@pytest.mark.slow
def test_normal_form_against_sympy(x0):
    ring = x0.ring
    syms = sympy.symbols(" ".join(ring.names))
    loc = dict(zip(ring.names, syms))
    gens = [sympy.sympify(str(g).replace("^", "**"), locals=loc) for g in x0.ideal]
    order = [syms[i] for i in ring.order.precedence]
    G = sympy.groebner(gens, *order, order="grlex")
    _, r = G.reduce(loc["x1"] ** 2 * loc["y1"])
    mine = x0.normal_form(ring.parse("x1^2*y1"))
    assert sympy.expand(r - sympy.sympify(str(mine).replace("^", "**"), locals=loc)) == 0
    assert str(mine).count("y") == 9
