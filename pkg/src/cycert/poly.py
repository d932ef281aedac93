"""Sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients.  Variables are named by a ``Ring``; the ring also fixes the
monomial order (graded lexicographic with a configurable variable
precedence) and, optionally, a split of the variables into two blocks so that
every monomial carries a bidegree ``(deg_X, deg_Y)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, NamedTuple, Sequence

Exponent = tuple  # tuple[int, ...]


class Bidegree(NamedTuple):
    x: int
    y: int


class MonomialOrder:
    """Graded monomial order.

    ``precedence`` lists variable indices from the largest variable to the
    smallest, so the default ``range(n)`` gives ``v0 > v1 > ... > v{n-1}``.
    Monomials are compared by total degree first.  Ties are broken
    lexicographically on the exponents read in precedence order (``grlex``)
    or by the reverse lexicographic rule (``grevlex``: the monomial with the
    smaller exponent in the smallest variable that differs is larger).
    """

    KINDS = ("grlex", "grevlex")

    def __init__(self, nvars: int, precedence: Sequence[int] | None = None, kind: str = "grlex"):
        if precedence is None:
            precedence = range(nvars)
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(nvars)):
            raise ValueError(f"precedence {precedence} is not a permutation of 0..{nvars - 1}")
        if kind not in self.KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        self.nvars = nvars
        self.precedence = precedence
        self.kind = kind
        self._identity = precedence == tuple(range(nvars))
        self._reversed = tuple(reversed(precedence))

    def key(self, m: Exponent) -> tuple:
        """Sort key; larger key means larger monomial."""
        if self.kind == "grevlex":
            return (sum(m),) + tuple(-m[i] for i in self._reversed)
        if self._identity:
            return (sum(m),) + tuple(m)
        return (sum(m),) + tuple(m[i] for i in self.precedence)

    def compare(self, m1: Exponent, m2: Exponent) -> int:
        if len(m1) != self.nvars or len(m2) != self.nvars:
            raise ValueError(
                f"exponent lengths {len(m1)}, {len(m2)} do not match order on {self.nvars} variables"
            )
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.precedence == self.precedence
                and other.kind == self.kind)

    def __hash__(self):
        return hash((self.precedence, self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind}, precedence={list(self.precedence)})"


def compare(m1: Exponent, m2: Exponent, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller, equal or greater than ``m2``."""
    return order.compare(m1, m2)


class Ring:
    """A polynomial ring Q[v_0, ..., v_{n-1}] with names, order and grading.

    ``x_count`` is the number of leading variables counted by ``deg_X``; the
    remaining variables are counted by ``deg_Y``.
    """

    def __init__(self, names: Sequence[str], x_count: int | None = None,
                 precedence: Sequence[int] | None = None, kind: str = "grlex"):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.x_count = self.nvars if x_count is None else x_count
        self.order = MonomialOrder(self.nvars, precedence, kind)
        self._index = {name: i for i, name in enumerate(self.names)}

    def with_order(self, precedence: Sequence[int] | None = None, kind: str = "grlex") -> "Ring":
        return Ring(self.names, self.x_count, precedence, kind)

    def index(self, name: str) -> int:
        return self._index[name]

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.x_count == other.x_count and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.x_count, self.order))

    def __repr__(self):
        return f"Ring({', '.join(self.names)}; {self.order!r})"

    # construction helpers
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exponent: Sequence[int], coeff=1) -> "Polynomial":
        exponent = tuple(exponent)
        if len(exponent) != self.nvars or min(exponent, default=0) < 0:
            raise ValueError(f"bad exponent {exponent} for {self.nvars} variables")
        c = Fraction(coeff)
        return Polynomial(self, {exponent: c} if c else {})

    def bidegree(self, m: Exponent) -> Bidegree:
        return Bidegree(sum(m[: self.x_count]), sum(m[self.x_count:]))

    def monomials_of_bidegree(self, dx: int, dy: int) -> list[Exponent]:
        """All exponents with the given bidegree, in no particular order."""
        xs = _compositions(dx, self.x_count)
        ys = _compositions(dy, self.nvars - self.x_count)
        return [a + b for a in xs for b in ys]

    def monomials_of_degree(self, d: int) -> list[Exponent]:
        return _compositions(d, self.nvars)

    # text form
    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def format_monomial(self, m: Exponent) -> str:
        parts = []
        for name, k in zip(self.names, m):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"


def _compositions(d: int, n: int) -> list[Exponent]:
    """Exponent vectors of length ``n`` summing to ``d``."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


# x8 > x1 > ... > x7 > y1 > ... > y4; with this tie-break the standard
# monomials at the Vandermonde point come out as products of x5..x7 and y2..y4.
JACOBIAN_PRECEDENCE = (7, 0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11)


def jacobian_ring(precedence: Sequence[int] | None = None) -> Ring:
    """Q[x1..x8, y1..y4] with deg_X counting the x variables."""
    names = [f"x{i}" for i in range(1, 9)] + [f"y{i}" for i in range(1, 5)]
    if precedence is None:
        precedence = JACOBIAN_PRECEDENCE
    return Ring(names, x_count=8, precedence=precedence)


def z_ring(n: int = 9, precedence: Sequence[int] | None = None) -> Ring:
    return Ring([f"z{i}" for i in range(1, n + 1)], precedence=precedence)


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to Fractions."""

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != ring.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent {e} for {ring.nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # structure
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def coeff(self, m: Exponent) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def monomials(self) -> list[Exponent]:
        """Exponents in descending monomial order."""
        return sorted(self.terms, key=self.ring.order.key, reverse=True)

    @cached_property
    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order.key)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def bidegrees(self) -> set:
        return {self.ring.bidegree(e) for e in self.terms}

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self) -> Bidegree:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError(f"polynomial is not bihomogeneous: {sorted(degs)}")
        return next(iter(degs))

    # arithmetic
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, m: Exponent, c=1) -> "Polynomial":
        """Multiply by the single term ``c * x^m``."""
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(e, m)): c * v for e, v in self.terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._raw(self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient)

    def diff(self, var) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = c * e[i]
        return Polynomial._raw(self.ring, terms)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= Fraction(v) ** k
            total += term
        return total

    def substitute_signs(self, signs: Sequence[int]) -> "Polynomial":
        """Apply v_i -> signs[i] * v_i."""
        terms = {}
        for e, c in self.terms.items():
            s = 1
            for sg, k in zip(signs, e):
                if sg < 0 and k & 1:
                    s = -s
            terms[e] = c if s > 0 else -c
        return Polynomial._raw(self.ring, terms)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Text form, terms in descending order: ``3*x1^2*y1 - 1/2*x2*y4``."""
    if not p.terms:
        return "0"
    out = []
    for i, e in enumerate(p.monomials()):
        c = p.terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = p.ring.format_monomial(e)
        if mono == "1":
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\^)|(\*)|([+-])|(\()|(\)))")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the text form written by ``format_polynomial``.

    Accepts sums of products of rationals, variables, ``^`` integer powers
    and parenthesised subexpressions.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastindex
        tokens.append((kind, m.group(kind)))
    tokens.append((0, None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        kind, val = peek()
        negate = False
        if kind == 5:
            take()
            negate = val == "-"
        total = term()
        if negate:
            total = -total
        while peek()[0] == 5:
            _, op = take()
            t = term()
            total = total + t if op == "+" else total - t
        return total

    def term():
        result = power()
        while peek()[0] == 4:
            take()
            result = result * power()
        return result

    def power():
        base = atom()
        if peek()[0] == 3:
            take()
            kind, val = take()
            if kind != 1 or "/" in val:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == 1:
            return ring.const(Fraction(val))
        if kind == 2:
            if val not in ring._index:
                raise ValueError(f"unknown variable {val!r}")
            return ring.var(val)
        if kind == 6:
            inner = expr()
            if take()[0] != 7:
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != 0:
        raise ValueError(f"trailing input in {text!r}")
    return result


def linear_combination(ring: Ring, pairs: Iterable[tuple]) -> Polynomial:
    """Sum of ``coeff * poly`` over ``pairs``."""
    terms: dict = {}
    for c, p in pairs:
        c = Fraction(c)
        if not c:
            continue
        for e, v in p.terms.items():
            s = terms.get(e, 0) + c * v
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
    return Polynomial._raw(ring, terms)
