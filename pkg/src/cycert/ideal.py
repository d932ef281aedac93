"""Ideals, Groebner bases, normal forms and Hilbert polynomials.

Two independent routes to normal forms live here:

* ``buchberger`` + ``normal_form``: a reduced Groebner basis under the ring's
  graded lexicographic order and multivariate division by it.
* ``graded_normal_form``: for an ideal that is homogeneous for a finer
  grading (bidegree, optionally refined by a character of a finite group),
  the piece of the ideal in the degree of ``f`` is spanned by the finitely
  many products ``m * g``.  Row-reducing that Macaulay matrix with pivots
  chosen by the monomial order and reducing ``f`` against it yields the same
  normal form without ever forming the full Groebner basis.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Hashable, Iterable, Sequence

try:
    from gmpy2 import gcd as _gcd, mpz as _mpz
except ImportError:  # pragma: no cover
    from math import gcd as _gcd
    _mpz = int

from .linalg import Echelon, to_field, from_field
from .poly import Bidegree, Exponent, MonomialOrder, Polynomial, Ring

log = logging.getLogger(__name__)


class ContractError(ValueError):
    """An input violated a documented precondition."""


class Ideal:
    """A finite generating set in a fixed ring.

    ``refine`` is an optional additive grading finer than the bidegree (for
    instance the parity vector of the x-exponents).  Every generator must be
    homogeneous for it; ``graded_normal_form`` then only builds the rows that
    can interact with ``f``.
    """

    def __init__(self, generators: Iterable[Polynomial], ring: Ring | None = None,
                 refine: Callable[[Exponent], Hashable] | None = None):
        gens = [g for g in generators]
        if ring is None:
            if not gens:
                raise ContractError("cannot infer the ring of an empty ideal")
            ring = gens[0].ring
        if any(g.is_zero() for g in gens):
            raise ContractError("ideal generators must be nonzero")
        self.ring = ring
        self.generators = gens
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self.bigraded = all(g.is_bihomogeneous() for g in gens)
        self.refine = refine
        if refine is not None:
            for g in gens:
                if len({refine(e) for e in g.terms}) != 1:
                    raise ContractError(f"generator {g} is not homogeneous for the refined grading")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring.nvars} variables)"


@dataclass
class GroebnerBasis:
    elements: list
    order: MonomialOrder
    ring: Ring
    truncated_at: int | None = None

    def leading_monomials(self) -> list[Exponent]:
        return [g.leading_monomial for g in self.elements]

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials())

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# --- monomial helpers -------------------------------------------------------

def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(b: Exponent, a: Exponent) -> Exponent:
    return tuple(y - x for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


# --- division ---------------------------------------------------------------
#
# Buchberger works on integer polynomials {exponent: int} kept primitive.
# Scaling by integers instead of dividing by leading coefficients avoids most
# of the coefficient swell of rational arithmetic.

def _primitive(terms: dict) -> dict:
    g = 0
    for v in terms.values():
        g = _gcd(g, v)
        if g == 1:
            return terms
    if g > 1:
        terms = {e: v // g for e, v in terms.items()}
    return terms


def _integer_terms(terms: dict) -> dict:
    """Primitive integer multiple of a rational coefficient dict."""
    den = 1
    for c in terms.values():
        c = Fraction(c)
        den = den * c.denominator // _gcd(den, c.denominator)
    return _primitive({e: _mpz(Fraction(c) * den) for e, c in terms.items()})


def _neg(k: tuple) -> tuple:
    return tuple(-x for x in k)


class _Reducer:
    """Division with remainder by polynomials stored as (lm, lc, terms).

    With ``integral`` set, coefficients are integers and the remainder is
    returned only up to a nonzero scalar; otherwise the divisors must be monic
    and the remainder is exact.
    """

    def __init__(self, order: MonomialOrder, integral: bool = True):
        self.key = order.key
        self.integral = integral
        self.basis: list[tuple[Exponent, object, dict]] = []

    def append(self, terms: dict, lm: Exponent):
        self.basis.append((lm, terms[lm], terms))

    def find_divisor(self, m: Exponent):
        for item in self.basis:
            if _divides(item[0], m):
                return item
        return None

    def reduce(self, terms: dict) -> dict:
        f = dict(terms)
        key = self.key
        integral = self.integral
        heap = [(_neg(key(e)), e) for e in f]
        heapq.heapify(heap)
        rem: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            div = self.find_divisor(m)
            if div is None:
                rem[m] = c
                continue
            lm, lc, g = div
            q = _quot(m, lm)
            if integral:
                h = _gcd(lc, c)
                a, b = lc // h, c // h  # f <- a*f - b*q*g
                if a != 1:
                    for e in f:
                        f[e] *= a
                    for e in rem:
                        rem[e] *= a
            else:
                a, b = 1, c
            for e, v in g.items():
                if e == lm:
                    continue
                e2 = tuple(x + y for x, y in zip(e, q))
                s = f.get(e2)
                if s is None:
                    f[e2] = -b * v
                    heapq.heappush(heap, (_neg(key(e2)), e2))
                else:
                    s -= b * v
                    if s:
                        f[e2] = s
                    else:
                        del f[e2]
            if a != 1:
                g0 = 0
                for v in f.values():
                    g0 = _gcd(g0, v)
                    if g0 == 1:
                        break
                if g0 != 1:
                    for v in rem.values():
                        g0 = _gcd(g0, v)
                        if g0 == 1:
                            break
                if g0 > 1:
                    for e in f:
                        f[e] //= g0
                    for e in rem:
                        rem[e] //= g0
        if integral and rem:
            rem = _primitive(rem)
        return rem


def _orient(terms: dict, key) -> tuple[dict, Exponent]:
    """Make the leading coefficient positive; return terms and leading monomial."""
    lm = max(terms, key=key)
    if terms[lm] < 0:
        terms = {e: -v for e, v in terms.items()}
    return terms, lm


# --- Buchberger -------------------------------------------------------------

def buchberger(gens, order: MonomialOrder | None = None, max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed by the normal strategy (smallest lcm first) with the
    Gebauer-Moeller criteria.  For homogeneous input ``max_degree`` truncates
    the computation: the result is then a Groebner basis of the ideal in all
    degrees up to ``max_degree``.
    """
    polys = list(gens.generators if isinstance(gens, Ideal) else gens)
    if not polys:
        raise ContractError("buchberger needs a nonempty generator list")
    ring = polys[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order.precedence, order.kind)
        polys = [Polynomial(ring, p.terms) for p in polys]
    order = ring.order
    key = order.key
    if max_degree is not None and not all(p.is_homogeneous() for p in polys):
        raise ContractError("degree truncation requires homogeneous generators")

    basis: list[tuple[Exponent, dict]] = []
    red = _Reducer(order)
    pairs: list = []  # heap of (lcm key, counter, i, j, lcm)
    alive: set = set()
    counter = 0

    def add(terms: dict):
        nonlocal counter
        terms, lm = _orient(terms, key)
        k = len(basis)
        # B criterion: an old pair dies if the new lm divides its lcm strictly
        for _, _, i, j, L in pairs:
            if (i, j) in alive and _divides(lm, L) \
                    and _lcm(basis[i][0], lm) != L and _lcm(basis[j][0], lm) != L:
                alive.discard((i, j))
        cand: dict = {}
        for i, (lmi, _) in enumerate(basis):
            cand.setdefault(_lcm(lmi, lm), []).append(i)
        lcms = list(cand)
        for L in lcms:
            # M criterion: keep only lcms minimal under divisibility
            if any(L2 != L and _divides(L2, L) for L2 in lcms):
                continue
            idxs = cand[L]
            # F criterion (one pair per lcm) and the product criterion
            if any(_coprime(basis[i][0], lm) for i in idxs):
                continue
            if max_degree is not None and sum(L) > max_degree:
                continue
            counter += 1
            alive.add((idxs[0], k))
            heapq.heappush(pairs, (key(L), counter, idxs[0], k, L))
        basis.append((lm, terms))
        red.append(terms, lm)

    for p in sorted(polys, key=lambda p: key(p.leading_monomial)):
        r = red.reduce(_integer_terms(p.terms))
        if r:
            add(r)

    while pairs:
        _, _, i, j, L = heapq.heappop(pairs)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        (lmi, fi), (lmj, fj) = basis[i], basis[j]
        qi, qj = _quot(L, lmi), _quot(L, lmj)
        ci, cj = fi[lmi], fj[lmj]
        h = _gcd(ci, cj)
        ai, aj = cj // h, ci // h
        s: dict = {}
        for e, v in fi.items():
            s[tuple(a + b for a, b in zip(e, qi))] = ai * v
        for e, v in fj.items():
            e2 = tuple(a + b for a, b in zip(e, qj))
            t = s.get(e2, 0) - aj * v
            if t:
                s[e2] = t
            else:
                s.pop(e2, None)
        if not s:
            continue
        r = red.reduce(_primitive(s))
        if r:
            add(r)
            log.debug("buchberger: %d elements, %d pairs, degree %d", len(basis), len(pairs), sum(L))

    return GroebnerBasis(_interreduce(basis, order, ring), order, ring, max_degree)


def _interreduce(basis, order, ring) -> list[Polynomial]:
    key = order.key
    # minimal basis: drop elements whose lm is divisible by another's
    items = sorted(basis, key=lambda t: key(t[0]))
    minimal = []
    for lm, terms in items:
        if any(_divides(lm2, lm) for lm2, _ in minimal):
            continue
        minimal.append((lm, terms))
    out = []
    for idx, (lm, terms) in enumerate(minimal):
        red = _Reducer(order)
        for j, (lm2, t2) in enumerate(minimal):
            if j != idx:
                red.append(t2, lm2)
        # no other leading monomial divides lm, so it survives as the leader
        full = red.reduce(terms)
        lc = full[lm]
        out.append(Polynomial._raw(ring, {e: Fraction(int(v), int(lc)) for e, v in full.items()}))
    out.sort(key=lambda p: key(p.leading_monomial))
    return out


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by the reduced basis ``gb``."""
    if f.ring.names != gb.ring.names:
        raise ContractError("polynomial and basis live in different rings")
    if gb.truncated_at is not None and f.total_degree() > gb.truncated_at:
        raise ContractError(
            f"basis truncated at degree {gb.truncated_at} cannot reduce degree {f.total_degree()}"
        )
    red = _Reducer(gb.order, integral=False)
    for g in gb.elements:
        red.append(g.terms, g.leading_monomial)
    return Polynomial(f.ring, red.reduce(f.terms))


def in_ideal(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


# --- bidegree-local normal forms ---------------------------------------------

class GradedReducer:
    """Normal forms modulo a bigraded ideal, one graded piece at a time.

    For each (bidegree, refined class) that is requested, the spanning set
    ``{m * g}`` of the ideal in that piece is row-reduced once and cached.
    Columns are numbered in decreasing monomial order so each echelon pivot is
    a leading monomial; reducing ``f`` by all pivots leaves only standard
    monomials, which is the normal form.
    """

    def __init__(self, ideal: Ideal):
        if not ideal.bigraded:
            raise ContractError("graded normal forms need a bigraded ideal")
        self.ideal = ideal
        self.ring = ideal.ring
        self._pieces: dict = {}
        self._gen_data = []
        for g in ideal.generators:
            self._gen_data.append((g, g.bidegree(), next(iter(g.terms))))

    def piece(self, d: Bidegree, cls=None):
        """(columns, index, echelon) for the piece of bidegree ``d``."""
        k = (tuple(d), cls)
        if k in self._pieces:
            return self._pieces[k]
        ring = self.ring
        refine = self.ideal.refine
        monos = ring.monomials_of_bidegree(*d)
        if refine is not None:
            monos = [m for m in monos if refine(m) == cls]
        monos.sort(key=ring.order.key, reverse=True)
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon()
        for g, gd, g0 in self._gen_data:
            dx, dy = d[0] - gd[0], d[1] - gd[1]
            if dx < 0 or dy < 0:
                continue
            for q in ring.monomials_of_bidegree(dx, dy):
                if refine is not None and refine(tuple(a + b for a, b in zip(q, g0))) != cls:
                    continue
                row = {}
                for e, v in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(e, q))]] = to_field(v)
                ech.add(row)
        log.debug("graded piece %s class %s: %d monomials, ideal rank %d", d, cls, len(monos), len(ech))
        self._pieces[k] = (monos, index, ech)
        return self._pieces[k]

    def standard_monomials(self, d: Bidegree, cls=None) -> list[Exponent]:
        """Monomials of the piece that are not leading monomials of the ideal."""
        monos, _, ech = self.piece(d, cls)
        return [m for i, m in enumerate(monos) if i not in ech.pivots]

    def ideal_dimension(self, d: Bidegree, cls=None) -> int:
        return len(self.piece(d, cls)[2])

    def normal_form(self, f: Polynomial, d: Bidegree | None = None) -> Polynomial:
        if f.is_zero():
            return f
        degs = f.bidegrees()
        if d is None:
            if len(degs) != 1:
                raise ContractError("graded normal form needs a bihomogeneous polynomial")
            d = next(iter(degs))
        elif degs != {tuple(d)}:
            raise ContractError(f"polynomial of bidegrees {sorted(degs)} is not homogeneous of bidegree {tuple(d)}")
        refine = self.ideal.refine
        by_class: dict = {}
        for e, c in f.terms.items():
            by_class.setdefault(refine(e) if refine else None, {})[e] = c
        out: dict = {}
        for cls, terms in by_class.items():
            monos, index, ech = self.piece(d, cls)
            row = ech.reduce_full({index[e]: to_field(c) for e, c in terms.items()})
            for i, c in row.items():
                out[monos[i]] = from_field(c)
        return Polynomial(self.ring, out)


def graded_normal_form(f: Polynomial, ideal: Ideal, d: Bidegree,
                       reducer: GradedReducer | None = None) -> Polynomial:
    """Normal form of a bihomogeneous ``f`` of bidegree ``d`` by Macaulay-matrix reduction."""
    reducer = reducer or GradedReducer(ideal)
    return reducer.normal_form(f, d)


# --- Hilbert series and polynomial -----------------------------------------

def _minimalize(gens: Iterable[Exponent]) -> list[Exponent]:
    gens = sorted(set(gens), key=sum)
    out: list = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(gens: Sequence[Exponent], nvars: int) -> list[int]:
    """Numerator N(t) with HS(S/I) = N(t) / (1-t)^n for a monomial ideal I.

    Pivot splitting on a variable x:  N(I) = N(I + (x)) + t * N(I : x).
    """
    gens = _minimalize(gens)
    return _numerator(tuple(gens), nvars)


def _numerator(gens: tuple, nvars: int) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    # pairwise coprime generators: product of (1 - t^deg)
    supports = [frozenset(i for i, k in enumerate(g) if k) for g in gens]
    seen: set = set()
    coprime = True
    for s in supports:
        if seen & s:
            coprime = False
            break
        seen |= s
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return _trim(out)
    # pivot on the variable occurring in the most nonlinear generators
    counts = [0] * nvars
    for g in gens:
        if sum(g) > 1:
            for i, k in enumerate(g):
                if k:
                    counts[i] += 1
    x = max(range(nvars), key=lambda i: counts[i])
    unit = tuple(int(i == x) for i in range(nvars))
    plus = _minimalize(list(gens) + [unit])
    colon = _minimalize(tuple(max(k - (i == x), 0) for i, k in enumerate(g)) for g in gens)
    a = _numerator(tuple(plus), nvars)
    b = _numerator(tuple(colon), nvars)
    return _trim(_poly_add(a, [0] + b))


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _divide_one_minus_t(p: list) -> list | None:
    """p / (1 - t) if exact, else None."""
    if sum(p) != 0:
        return None
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q or [0]


@dataclass
class HilbertData:
    """Hilbert series and polynomial of S/I for a homogeneous ideal I."""

    nvars: int
    numerator: list  # N(t), HS = N(t) / (1 - t)^nvars
    h_vector: list  # h(t), HS = h(t) / (1 - t)^(dimension + 1)
    dimension: int  # projective dimension, -1 for the empty scheme
    polynomial: list = field(default_factory=list)  # P(s) coefficients, ascending powers of s

    @property
    def arithmetic_genus(self) -> Fraction:
        """(-1)^d (P(0) - 1)."""
        p0 = self.polynomial[0] if self.polynomial else Fraction(0)
        return (-1) ** self.dimension * (p0 - 1) if self.dimension >= 0 else Fraction(1) - p0

    @property
    def degree(self) -> int:
        return sum(self.h_vector) if self.dimension >= 0 else 0

    def hilbert_function(self, s: int) -> int:
        """dim (S/I)_s, from the series."""
        # coefficient of t^s in N(t)/(1-t)^n
        return sum(c * comb(s - k + self.nvars - 1, self.nvars - 1)
                   for k, c in enumerate(self.numerator) if s - k >= 0)

    def evaluate(self, s) -> Fraction:
        return sum((c * Fraction(s) ** k for k, c in enumerate(self.polynomial)), Fraction(0))


def hilbert_from_numerator(numerator: list, nvars: int) -> HilbertData:
    h = list(numerator)
    power = nvars
    if all(c == 0 for c in h):
        return HilbertData(nvars, numerator, [0], -1, [])
    while power > 0:
        q = _divide_one_minus_t(h)
        if q is None:
            break
        h = _trim(q)
        power -= 1
    d = power - 1
    if d < 0:
        return HilbertData(nvars, numerator, h, -1, [])
    # P(s) = sum_k h_k * C(s - k + d, d)
    poly = [Fraction(0)] * (d + 1)
    for k, hk in enumerate(h):
        if not hk:
            continue
        # prod_{j=1..d} (s - k + j) / d!
        term = [Fraction(1)]
        for j in range(1, d + 1):
            term = _poly_mul(term, [Fraction(j - k), Fraction(1)])
        for i, c in enumerate(term):
            poly[i] += Fraction(hk * c) / factorial(d)
    return HilbertData(nvars, numerator, h, d, poly)


def hilbert_data(gb: GroebnerBasis) -> HilbertData:
    """Hilbert polynomial, dimension and arithmetic genus of Proj(S/I)."""
    if gb.truncated_at is not None:
        raise ContractError("Hilbert data needs a complete Groebner basis")
    if not all(g.is_homogeneous() for g in gb.elements):
        raise ContractError("Hilbert data is defined here for homogeneous ideals only")
    num = hilbert_numerator(gb.leading_monomials(), gb.ring.nvars)
    return hilbert_from_numerator(num, gb.ring.nvars)


def hilbert_polynomial_str(hd: HilbertData, var: str = "t") -> str:
    from .linalg import fraction_str

    parts = []
    for k in range(len(hd.polynomial) - 1, -1, -1):
        c = hd.polynomial[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        coef = fraction_str(abs(c))
        body = coef if not mono else (mono if abs(c) == 1 else f"{coef}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
