"""Characteristic subvarieties: the dual multiplication ideals in P(R_1^*).

With coordinates z_1..z_9 dual to the basis v_1..v_9 of R_1, the ideal a_k is
generated by the coordinates of ``(sum z_i v_i)^(k+1)`` in R_{k+1}.  For k = 1
these are the nine quadrics

    f_l = sum_{i<=j} c~_{phi(i,j) l} z_i z_j,   c~ = c on the diagonal, 2c off it,

and for k = 2 the single cubic with multinomial weights 1, 3, 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from collections import Counter

from .ideal import ContractError, GroebnerBasis, HilbertData, buchberger, hilbert_data, hilbert_from_numerator
from .jacobian import Arrangement
from .poly import MonomialOrder, Polynomial, Ring, z_ring

# Hilbert data does not depend on the order; grevlex is much faster here.
DEFAULT_KIND = "grevlex"


@dataclass
class CharIdeal:
    k: int
    ring: Ring
    generators: list


def multinomial(idx) -> int:
    """Number of orderings of the multiset idx."""
    out = factorial(len(idx))
    for c in Counter(idx).values():
        out //= factorial(c)
    return out


def characteristic_ideal(arr: Arrangement, k: int = 1, ring: Ring | None = None) -> CharIdeal:
    if k not in (1, 2):
        raise ContractError("k must be 1 or 2")
    ring = ring or z_ring(9)
    b1 = arr.basis(1)
    n = len(b1)
    target = arr.basis(k + 1)
    polys = [dict() for _ in target]
    for idx in combinations_with_replacement(range(n), k + 1):
        m = tuple(map(sum, zip(*(b1[i] for i in idx))))
        coords = arr.coordinates(arr.ring.monomial(m), k + 1)
        w = multinomial(idx)
        e = [0] * ring.nvars
        for i in idx:
            e[i] += 1
        e = tuple(e)
        for l, c in enumerate(coords):
            if c:
                polys[l][e] = w * c
    gens = [Polynomial(ring, t) for t in polys]
    if any(g.is_zero() for g in gens):
        raise ContractError("a generator of the characteristic ideal vanishes")
    return CharIdeal(k, ring, gens)


def segre_ideal(ring: Ring | None = None) -> list[Polynomial]:
    """2x2 minors of the 3x3 matrix (z1 z2 z3; z4 z5 z6; z7 z8 z9)."""
    ring = ring or z_ring(9)
    z = ring.gens()
    M = [[z[3 * r + c] for c in range(3)] for r in range(3)]
    out = []
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        for c1, c2 in ((0, 1), (0, 2), (1, 2)):
            out.append(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1])
    return out


def groebner(gens: list[Polynomial], kind: str = DEFAULT_KIND) -> GroebnerBasis:
    ring = gens[0].ring
    return buchberger(gens, MonomialOrder(ring.nvars, ring.order.precedence, kind))


def characteristic_invariants(ci, kind: str = DEFAULT_KIND) -> HilbertData:
    """Dimension, Hilbert polynomial and arithmetic genus of Proj(S/a_k)."""
    gens = ci.generators if isinstance(ci, CharIdeal) else list(ci)
    if not gens or any(g.is_zero() for g in gens):
        raise ContractError("characteristic ideal needs nonzero generators")
    gb = groebner(gens, kind)
    if gb.is_unit():
        return hilbert_from_numerator([0], gens[0].ring.nvars)
    return hilbert_data(gb)


def evaluate_power(arr: Arrangement, z, k: int) -> list[Fraction]:
    """R_{k+1}-coordinates of (sum z_i v_i)^(k+1), by direct normal forms."""
    ring = arr.ring
    v = sum((ring.monomial(m).scale(c) for m, c in zip(arr.basis(1), z)), ring.zero())
    return arr.coordinates(v ** (k + 1), k + 1)
