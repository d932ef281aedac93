"""Eight planes in P^3: the Jacobian ring of F = sum_i y_i f_i and its Higgs field.

The arrangement is a 4x8 matrix A; ``f_i = sum_j a_ij x_j^2`` and
``F = sum_i y_i f_i`` in Q[x1..x8, y1..y4].  The graded pieces
``R_p`` of bidegree ``(2p, p)`` of the Jacobian ring, restricted to the
monomials fixed by the sign group N1, carry the Hodge decomposition
1, 9, 9, 1; multiplication by the nine elements of ``R_1`` is the Higgs field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .ideal import ContractError, GradedReducer, Ideal
from .linalg import Echelon, RationalMatrix, determinant, from_field, parse_fraction, row_space_basis, to_field
from .poly import Exponent, Polynomial, Ring, _compositions, jacobian_ring

HODGE_TARGET = (1, 9, 9, 1)
NX, NY = 8, 4

# generators of N1 as bit vectors: e_i + e_{i+1} and e_1 + e_8
N1_GENERATORS = tuple(
    tuple(int(k in (i, i + 1)) for k in range(NX)) for i in range(NX - 1)
) + (tuple(int(k in (0, NX - 1)) for k in range(NX)),)


class ArrangementError(ContractError):
    """The arrangement is not in general position (or malformed)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class IntegrityError(RuntimeError):
    """A computed invariant contradicts what the theory guarantees."""


def sign(a: Sequence[int], m: Exponent) -> int:
    """Sign by which sigma_a acts on the monomial m."""
    return -1 if sum(ai * mi for ai, mi in zip(a, m)) % 2 else 1


def is_invariant(m: Exponent, group=N1_GENERATORS) -> bool:
    return all(sign(a, m) == 1 for a in group)


def x_parity(m: Exponent) -> tuple:
    return tuple(k & 1 for k in m[:NX])


# --- arrangements -------------------------------------------------------------

def general_position_check(A) -> tuple[bool, tuple | None]:
    """All 70 maximal minors nonzero?  On failure, the first bad column quadruple (1-based)."""
    rows = A.rows if isinstance(A, RationalMatrix) else [[Fraction(v) for v in r] for r in A]
    if len(rows) != NY or any(len(r) != NX for r in rows):
        raise ArrangementError(f"arrangement matrix must be 4x8, got {len(rows)}x{len(rows[0]) if rows else 0}")
    for cols in combinations(range(NX), NY):
        if determinant([[r[c] for c in cols] for r in rows]) == 0:
            return False, tuple(c + 1 for c in cols)
    return True, None


def vandermonde_arrangement(lams: Sequence) -> RationalMatrix:
    """a_ij = lambda_j^i for i = 1..4."""
    lams = [parse_fraction(v) for v in lams]
    if len(lams) != NX:
        raise ArrangementError(f"need 8 values, got {len(lams)}")
    for j, v in enumerate(lams):
        if v == 0:
            raise ArrangementError(f"lambda_{j + 1} is zero", witness=(j + 1,))
    for i, j in combinations(range(NX), 2):
        if lams[i] == lams[j]:
            raise ArrangementError(f"lambda_{i + 1} = lambda_{j + 1} = {lams[i]}", witness=(i + 1, j + 1))
    return RationalMatrix([[v ** i for v in lams] for i in range(1, NY + 1)])


def load_arrangement(source) -> tuple[RationalMatrix, list | None]:
    """Read {"vandermonde": [...]} or {"matrix": [[...]]} from a path or a dict."""
    if not isinstance(source, dict):
        with open(source) as fh:
            source = json.load(fh)
    if "vandermonde" in source:
        lams = [parse_fraction(v) for v in source["vandermonde"]]
        return vandermonde_arrangement(lams), lams
    if "matrix" in source:
        rows = [[parse_fraction(v) for v in r] for r in source["matrix"]]
        if len(rows) != NY or any(len(r) != NX for r in rows):
            raise ArrangementError("matrix must have 4 rows of 8 entries")
        return RationalMatrix(rows), None
    raise ArrangementError("arrangement file needs a 'vandermonde' or 'matrix' key")


def jacobian_ideal(A: RationalMatrix, ring: Ring | None = None) -> Ideal:
    """The twelve partials of F: 2 x_j sum_i a_ij y_i and f_i = sum_j a_ij x_j^2."""
    ring = ring or jacobian_ring()
    x = ring.gens()[:NX]
    y = ring.gens()[NX:]
    gens = []
    for j in range(NX):
        lin = sum((y[i].scale(A[i, j]) for i in range(NY)), ring.zero())
        gens.append((x[j] * lin).scale(2))
    for i in range(NY):
        gens.append(sum(((x[j] ** 2).scale(A[i, j]) for j in range(NX)), ring.zero()))
    return Ideal(gens, ring, refine=x_parity)


def master_polynomial(A: RationalMatrix, ring: Ring | None = None) -> Polynomial:
    ring = ring or jacobian_ring()
    x, y = ring.gens()[:NX], ring.gens()[NX:]
    return sum(
        (y[i] * sum(((x[j] ** 2).scale(A[i, j]) for j in range(NX)), ring.zero()) for i in range(NY)),
        ring.zero(),
    )


def primitive_hodge_numbers(n: int) -> list[int]:
    if n < 1:
        raise ContractError("n must be positive")
    return [comb(n, p) ** 2 for p in range(n + 1)]


def phi(i: int, j: int, n: int) -> int:
    """Row-major index of the unordered pair i <= j (1-based in, 1-based out)."""
    if not 1 <= i <= j <= n:
        raise ContractError(f"bad pair ({i}, {j}) for n = {n}")
    return (i - 1) * (2 * n - i) // 2 + j


def pairs(n: int) -> list[tuple[int, int]]:
    """The pairs i <= j (0-based) in phi order."""
    return [(i, j) for i in range(n) for j in range(i, n)]


# --- reduction on N1-invariants ----------------------------------------------------
#
# On N1-invariant elements put u_j = x_j^2.  The invariant part of the Jacobian
# ideal is generated by the four linear forms f_i(u) and the eight products
# u_j * L_j(y), L_j = sum_i a_ij y_i.  Bringing the f_i to reduced echelon form
# expresses four "leading" u's in the other four; substituting them leaves an
# ideal J' in four u's and four y's.  The normal form of an invariant element is
# the J'-normal form of its substitution, because the echelonized linear forms
# together with a Groebner basis of J' form a Groebner basis of the whole ideal.
# Within one bidegree the order on u-monomials is the order on the matching
# x-monomials, so standard monomials are the same.


def _mul_dicts(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class InvariantReducer:
    """Normal forms of N1-invariant elements of bidegree (2p, p)."""

    def __init__(self, ring: Ring, A: RationalMatrix):
        self.ring = ring
        self.key = ring.order.key
        nv = ring.nvars
        xprec = [i for i in ring.order.precedence if i < NX]
        rows = [{c: to_field(A[i, j]) for c, j in enumerate(xprec) if A[i, j]} for i in range(NY)]
        reduced = row_space_basis(rows)
        if len(reduced) != NY:
            raise IntegrityError("the quadrics f_i are linearly dependent")
        self.lead = {}
        for r in reduced:
            c0 = min(r)
            var = xprec[c0]
            rest = {}
            for c, v in r.items():
                if c != c0:
                    e = [0] * nv
                    e[xprec[c]] = 1
                    rest[tuple(e)] = -v
            self.lead[var] = rest
        self.free = [j for j in range(NX) if j not in self.lead]
        self._powers: dict = {}
        # g'_j = s(u_j) * L_j
        self.gens = []
        for j in range(NX):
            e = [0] * nv
            e[j] = 1
            uj = self.substitute({tuple(e): to_field(1)})
            lin = {}
            for i in range(NY):
                if A[i, j]:
                    f = [0] * nv
                    f[NX + i] = 1
                    lin[tuple(f)] = to_field(A[i, j])
            self.gens.append(_mul_dicts(uj, lin))
        self._pieces: dict = {}

    def _power(self, var: int, k: int) -> dict:
        if (var, k) not in self._powers:
            base = self.lead[var]
            out = {(0,) * self.ring.nvars: to_field(1)}
            for _ in range(k):
                out = _mul_dicts(out, base)
            self._powers[var, k] = out
        return self._powers[var, k]

    def substitute(self, terms: dict) -> dict:
        """Replace the leading u's by their expressions in the free ones."""
        out: dict = {}
        for e, c in terms.items():
            part = {tuple(0 if i in self.lead else k for i, k in enumerate(e)): c}
            for var in self.lead:
                if e[var]:
                    part = _mul_dicts(part, self._power(var, e[var]))
            for m, v in part.items():
                t = out.get(m, 0) + v
                if t:
                    out[m] = t
                else:
                    out.pop(m, None)
        return out

    def _xkey(self, m: Exponent):
        return self.key(tuple(2 * k for k in m[:NX]) + tuple(m[NX:]))

    def _monomials(self, du: int, dy: int) -> list[Exponent]:
        nv = self.ring.nvars
        out = []
        for a in _compositions(du, len(self.free)):
            for c in _compositions(dy, NY):
                e = [0] * nv
                for j, k in zip(self.free, a):
                    e[j] = k
                e[NX:] = c
                out.append(tuple(e))
        return out

    def piece(self, p: int):
        if p in self._pieces:
            return self._pieces[p]
        monos = sorted(self._monomials(p, p), key=self._xkey, reverse=True)
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon()
        if p >= 1:
            for q in self._monomials(p - 1, p - 1):
                for g in self.gens:
                    ech.add({index[tuple(a + b for a, b in zip(e, q))]: v for e, v in g.items()})
        self._pieces[p] = (monos, index, ech)
        return self._pieces[p]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.is_zero():
            return f
        degs = f.bidegrees()
        if len(degs) != 1:
            raise ContractError("invariant normal form needs a bihomogeneous polynomial")
        dx, dy = next(iter(degs))
        if dx != 2 * dy or any(x_parity(e) != (0,) * NX for e in f.terms):
            raise ContractError("invariant normal form needs an even polynomial of bidegree (2p, p)")
        u = {tuple(k // 2 for k in e[:NX]) + tuple(e[NX:]): to_field(c) for e, c in f.terms.items()}
        u = self.substitute(u)
        monos, index, ech = self.piece(dy)
        row = ech.reduce_full({index[e]: v for e, v in u.items()})
        out = {}
        for i, c in row.items():
            m = monos[i]
            out[tuple(2 * k for k in m[:NX]) + tuple(m[NX:])] = from_field(c)
        return Polynomial(self.ring, out)


# --- the arrangement data -------------------------------------------------------

@dataclass
class MultiplicationMatrix:
    source: str
    target: int
    matrix: RationalMatrix
    row_labels: list = field(default_factory=list)


class Arrangement:
    """Arrangement matrix with its Jacobian ideal, invariant bases and Higgs operators."""

    def __init__(self, A, lambdas=None, precedence: Sequence[int] | None = None, check: bool = True):
        self.matrix = A if isinstance(A, RationalMatrix) else RationalMatrix(A)
        self.lambdas = lambdas
        if check:
            ok, witness = general_position_check(self.matrix)
            if not ok:
                raise ArrangementError(f"columns {witness} are linearly dependent", witness=witness)
        self.ring = jacobian_ring(precedence)
        self.ideal = jacobian_ideal(self.matrix, self.ring)
        self.reducer = GradedReducer(self.ideal)
        self.invariant_reducer = InvariantReducer(self.ring, self.matrix)
        self._bases: dict = {}

    @classmethod
    def vandermonde(cls, lams, precedence=None) -> "Arrangement":
        lams = [parse_fraction(v) for v in lams]
        return cls(vandermonde_arrangement(lams), lams, precedence)

    @classmethod
    def reference(cls, precedence=None) -> "Arrangement":
        return cls.vandermonde(range(1, 9), precedence)

    def is_reference(self) -> bool:
        return self.matrix == vandermonde_arrangement(range(1, 9))

    @cached_property
    def master(self) -> Polynomial:
        return master_polynomial(self.matrix, self.ring)

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Normal form modulo the Jacobian ideal.

        Even elements of bidegree (2p, p) go through the invariant reducer;
        anything else through the generic bidegree-local reduction.
        """
        if f.is_zero():
            return f
        degs = f.bidegrees()
        if len(degs) == 1:
            dx, dy = next(iter(degs))
            if dx == 2 * dy and all(x_parity(e) == (0,) * NX for e in f.terms):
                return self.invariant_reducer.normal_form(f)
        return self.reducer.normal_form(f)

    def basis(self, p: int) -> list[Exponent]:
        if p in self._bases:
            return self._bases[p]
        basis = invariant_graded_basis(self, p)
        self._bases[p] = basis
        return basis

    @cached_property
    def full_basis(self) -> list[Exponent]:
        """v_1..v_20: the level bases concatenated."""
        return [m for p in range(4) for m in self.basis(p)]

    @cached_property
    def level_of(self) -> list[int]:
        return [p for p in range(4) for _ in self.basis(p)]

    def coordinates(self, f: Polynomial, p: int) -> list[Fraction]:
        """Coordinates of the class of f (bidegree (2p, p)) in the level-p basis."""
        nf = self.normal_form(f) if not f.is_zero() else f
        basis = self.basis(p)
        index = {m: i for i, m in enumerate(basis)}
        out = [Fraction(0)] * len(basis)
        for m, c in nf.terms.items():
            if m not in index:
                raise IntegrityError(f"normal form contains non-basis monomial {self.ring.format_monomial(m)}")
            out[index[m]] = c
        return out

    def monomial(self, m: Exponent) -> Polynomial:
        return self.ring.monomial(m)

    def product_coordinates(self, a: Exponent, b: Exponent) -> list[Fraction]:
        pa, pb = self.ring.bidegree(a).y, self.ring.bidegree(b).y
        m = tuple(u + v for u, v in zip(a, b))
        return self.coordinates(self.ring.monomial(m), pa + pb)

    def multiplication_matrix(self, p: int) -> MultiplicationMatrix:
        return multiplication_matrix(self, p)

    def operator(self, k: int) -> RationalMatrix:
        return mult_by_basis_operator(self, k)

    @cached_property
    def operators(self) -> list[RationalMatrix]:
        return [mult_by_basis_operator(self, k) for k in range(1, 10)]


def invariant_graded_basis(arr: Arrangement, p: int) -> list[Exponent]:
    """Monomials of bidegree (2p, p) fixed by N1 that are their own normal forms.

    Sorted descending under the ring order.  Raises IntegrityError if the count
    differs from 1, 9, 9, 1.
    """
    if p not in range(4):
        raise ContractError("level must be 0..3")
    ring = arr.ring
    cands = [m for m in ring.monomials_of_bidegree(2 * p, p) if is_invariant(m)]
    out = []
    for m in cands:
        g = ring.monomial(m)
        if arr.normal_form(g) == g:
            out.append(m)
    out.sort(key=ring.order.key, reverse=True)
    if len(out) != HODGE_TARGET[p]:
        raise IntegrityError(f"R_{p} invariant basis has {len(out)} elements, expected {HODGE_TARGET[p]}")
    return out


def multiplication_matrix(arr: Arrangement, p: int) -> MultiplicationMatrix:
    """R_1 x R_p -> R_{p+1} in the level bases.

    For p = 1 the rows are the 45 unordered pairs v_i v_j (i <= j) in phi order;
    otherwise rows run over (i, j) with v_i in R_1 and w_j in R_p, row-major.
    """
    if p not in range(3):
        raise ContractError("source level must be 0..2")
    b1, bp = arr.basis(1), arr.basis(p)
    if p == 1:
        labels = pairs(len(b1))
    else:
        labels = [(i, j) for i in range(len(b1)) for j in range(len(bp))]
    rows = [arr.product_coordinates(b1[i], bp[j]) for i, j in labels]
    return MultiplicationMatrix(f"R1xR{p}", p + 1, RationalMatrix(rows), labels)


def pairing_matrix(arr: Arrangement) -> RationalMatrix:
    """9x9 matrix of R_1 x R_2 -> R_3 = Q."""
    b1, b2 = arr.basis(1), arr.basis(2)
    return RationalMatrix([[arr.product_coordinates(a, b)[0] for b in b2] for a in b1])


def mult_by_basis_operator(arr: Arrangement, k: int) -> RationalMatrix:
    """20x20 matrix of v -> v w_k on R = R_0 + R_1 + R_2 + R_3.

    Column i holds the coordinates of v_i w_k, so the matrix acts on column
    vectors.  Products landing in level 4 vanish.
    """
    if not 1 <= k <= 9:
        raise ContractError("k must be 1..9")
    w = arr.basis(1)[k - 1]
    basis, level = arr.full_basis, arr.level_of
    n = len(basis)
    offsets = [0, 1, 10, 19]
    cols = []
    for i, v in enumerate(basis):
        col = [Fraction(0)] * n
        p = level[i]
        if p < 3:
            coords = arr.product_coordinates(v, w)
            for t, c in enumerate(coords):
                col[offsets[p + 1] + t] = c
        cols.append(col)
    return RationalMatrix([list(r) for r in zip(*cols)])


def commutators_vanish(ops: Sequence[RationalMatrix]) -> bool:
    return all((a @ b) == (b @ a) for a, b in combinations(ops, 2))
