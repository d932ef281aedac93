"""Characters of semisimple Lie algebras.

Weights are integer tuples in the basis of fundamental weights (Dynkin
labels); for a semisimple algebra the labels of the simple factors are
concatenated.  A character is a dict weight -> multiplicity.  Simple roots
are numbered as in Bourbaki.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_CAP = 400
SERIES = ("A", "B", "C", "D", "G", "F", "E")


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        ok = {
            "A": n >= 1, "B": n >= 3, "C": n >= 2, "D": n >= 4,
            "G": n == 2, "F": n == 4, "E": n in (6, 7),
        }.get(s, False)
        if not ok:
            raise RepresentationError(f"unsupported simple type {s}{n}")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @property
    def data(self) -> "_TypeData":
        return _type_data(self.series, self.rank)


Algebra = tuple  # of SimpleType


def simple_type(name: str) -> SimpleType:
    m = re.fullmatch(r"([A-G])(\d+)", name.strip())
    if not m:
        raise RepresentationError(f"bad type {name!r}")
    return SimpleType(m.group(1), int(m.group(2)))


# --- root data ------------------------------------------------------------------

def _root_gram(series: str, n: int) -> list[list[Fraction]]:
    """(alpha_i, alpha_j) for the simple roots, long roots of length^2 2."""
    B = [[Fraction(0)] * n for _ in range(n)]
    F = Fraction

    def link(i, j, v):
        B[i][j] = B[j][i] = F(v)

    if series in "ABCD":
        for i in range(n):
            B[i][i] = F(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
        if series == "B":
            B[n - 1][n - 1] = F(1)
        elif series == "C":
            for i in range(n - 1):
                B[i][i] = F(1)
            for i in range(n - 2):
                link(i, i + 1, F(-1, 2))
            link(n - 2, n - 1, -1)
        elif series == "D":
            link(n - 2, n - 1, 0)
            link(n - 3, n - 1, -1)
    elif series == "G":
        B = [[F(2, 3), F(-1)], [F(-1), F(2)]]
    elif series == "F":
        B = [[F(2), F(-1), F(0), F(0)], [F(-1), F(2), F(-1), F(0)],
             [F(0), F(-1), F(1), F(-1, 2)], [F(0), F(0), F(-1, 2), F(1)]]
    elif series == "E":
        for i in range(n):
            B[i][i] = F(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    return B


def _inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [v / pv for v in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]


class _TypeData:
    def __init__(self, series: str, n: int):
        self.series, self.rank = series, n
        B = _root_gram(series, n)
        self.root_gram = B
        # cartan[i][j] = <alpha_i, alpha_j^vee>; alpha_i = sum_j cartan[i][j] omega_j
        self.cartan = [[int(2 * B[i][j] / B[j][j]) for j in range(n)] for i in range(n)]
        self.half_len = [B[i][i] / 2 for i in range(n)]
        inv = _inverse([[Fraction(v) for v in r] for r in self.cartan])
        self.cartan_inv = inv
        # Gram matrix of the fundamental weights: C G = D
        self.gram = [[inv[i][j] * self.half_len[j] for j in range(n)] for i in range(n)]
        self.positive_roots = self._positive_roots()  # in simple-root coordinates
        self.positive_roots_w = [
            tuple(sum(r[i] * self.cartan[i][j] for i in range(n)) for j in range(n))
            for r in self.positive_roots
        ]
        self.rho = (1,) * n

    def _positive_roots(self) -> list[tuple]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    q = 0
                    while True:
                        gamma = tuple(b - (q + 1) * (j == i) for j, b in enumerate(beta))
                        if gamma in roots:
                            q += 1
                        else:
                            break
                    p = q - sum(beta[j] * self.cartan[j][i] for j in range(n))
                    if p > 0:
                        gamma = tuple(b + (j == i) for j, b in enumerate(beta))
                        if gamma not in roots:
                            roots.add(gamma)
                            nxt.append(gamma)
            layer = nxt
        return sorted(roots, key=lambda r: (sum(r), r))

    def pair(self, mu: Sequence, root: Sequence) -> Fraction:
        """(mu, alpha) with mu in weight and alpha in root coordinates."""
        return sum((Fraction(root[j]) * mu[j] * self.half_len[j] for j in range(self.rank)), Fraction(0))

    def norm(self, mu: Sequence) -> Fraction:
        n = self.rank
        return sum((self.gram[i][j] * mu[i] * mu[j] for i in range(n) for j in range(n) if mu[i] and mu[j]),
                   Fraction(0))

    def level(self, mu: Sequence) -> Fraction:
        """Sum of the simple-root coordinates of mu."""
        n = self.rank
        return sum((mu[i] * self.cartan_inv[i][j] for i in range(n) for j in range(n) if mu[i]), Fraction(0))

    def reflect(self, mu: tuple, i: int) -> tuple:
        k = mu[i]
        return tuple(m - k * c for m, c in zip(mu, self.cartan[i]))

    def dominant(self, mu: tuple) -> tuple:
        while True:
            for i, k in enumerate(mu):
                if k < 0:
                    mu = self.reflect(mu, i)
                    break
            else:
                return mu

    def orbit(self, mu: tuple) -> list[tuple]:
        seen = {mu}
        todo = deque([mu])
        while todo:
            nu = todo.popleft()
            for i in range(self.rank):
                if nu[i]:
                    r = self.reflect(nu, i)
                    if r not in seen:
                        seen.add(r)
                        todo.append(r)
        return sorted(seen, reverse=True)

    def dual(self, mu: tuple) -> tuple:
        s, n = self.series, self.rank
        if s == "A":
            return tuple(reversed(mu))
        if s == "D" and n % 2:
            return mu[:-2] + (mu[-1], mu[-2])
        if s == "E" and n == 6:
            perm = (5, 1, 4, 3, 2, 0)
            return tuple(mu[perm[i]] for i in range(6))
        return tuple(mu)


@lru_cache(maxsize=None)
def _type_data(series: str, n: int) -> _TypeData:
    return _TypeData(series, n)


def min_nontrivial_dim(t: SimpleType) -> int:
    n = t.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n, "G": 7, "F": 26}.get(
        t.series, {6: 27, 7: 56}.get(n, 0))


# --- algebras and weights --------------------------------------------------------------

def split(alg: Algebra, weight: Sequence[int]) -> list[tuple]:
    out, k = [], 0
    for t in alg:
        out.append(tuple(weight[k:k + t.rank]))
        k += t.rank
    if k != len(weight):
        raise RepresentationError(f"weight of length {len(weight)} for algebra of rank {k}")
    return out


def parse_weight(text: str) -> tuple[Algebra, tuple]:
    """'A1:[1]+C2:[2,0]' -> ((A1, C2), (1, 2, 0))."""
    alg, weight = [], []
    for part in text.replace(" ", "").split("+"):
        m = re.fullmatch(r"([A-G]\d+):\[([-\d,]*)\]", part)
        if not m:
            raise RepresentationError(f"cannot parse {part!r}; expected e.g. A5:[0,0,1,0,0]")
        t = simple_type(m.group(1))
        labels = tuple(int(v) for v in m.group(2).split(",")) if m.group(2) else ()
        if len(labels) != t.rank:
            raise RepresentationError(f"{t} needs {t.rank} labels, got {len(labels)}")
        alg.append(t)
        weight.extend(labels)
    return tuple(alg), tuple(weight)


def format_weight(alg: Algebra, weight: Sequence[int]) -> str:
    return "+".join(f"{t}:[{','.join(map(str, w))}]" for t, w in zip(alg, split(alg, weight)))


def format_algebra(alg: Algebra) -> str:
    return "+".join(map(str, alg))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(k >= 0 for k in weight)


# --- dimensions and weight systems ----------------------------------------------------

def weyl_dim(alg, weight: Sequence[int]) -> int:
    """Weyl's dimension formula, factor by factor."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    if not is_dominant(weight):
        raise RepresentationError(f"{weight} is not dominant")
    out = Fraction(1)
    for t, w in zip(alg, split(alg, weight)):
        d = t.data
        lr = tuple(a + 1 for a in w)
        for r in d.positive_roots:
            out *= d.pair(lr, r) / d.pair(d.rho, r)
    assert out.denominator == 1
    return int(out)


@lru_cache(maxsize=None)
def _dominant_multiplicities(t: SimpleType, lam: tuple) -> dict:
    """Freudenthal's formula on the dominant weights of V(lam)."""
    d = t.data
    roots = list(zip(d.positive_roots, d.positive_roots_w))
    dom = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for r, rw in roots:
            k = int(d.pair(mu, r) * 2 / _root_norm(d, r))
            for j in range(1, k + 1):
                nu = d.dominant(tuple(m - j * a for m, a in zip(mu, rw)))
                if nu not in dom:
                    dom.add(nu)
                    todo.append(nu)
    order = sorted(dom, key=d.level, reverse=True)
    lr = tuple(a + 1 for a in lam)
    top = d.norm(lr)
    mult = {lam: 1}
    for mu in order[1:]:
        s = Fraction(0)
        for r, rw in roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, rw))
                dn = d.dominant(nu)
                if dn not in dom:
                    break
                s += mult[dn] * d.pair(nu, r)
                k += 1
        val = 2 * s / (top - d.norm(tuple(a + 1 for a in mu)))
        assert val.denominator == 1
        mult[mu] = int(val)
    return {mu: m for mu, m in mult.items() if m}


def _root_norm(d: _TypeData, r: Sequence[int]) -> Fraction:
    n = d.rank
    return sum((d.root_gram[i][j] * r[i] * r[j] for i in range(n) for j in range(n)), Fraction(0))


def simple_character(t: SimpleType, lam: tuple) -> dict:
    d = t.data
    out = {}
    for mu, m in _dominant_multiplicities(t, tuple(lam)).items():
        for nu in d.orbit(mu):
            out[nu] = m
    return out


def weight_system(alg, weight: Sequence[int], cap: int = DEFAULT_CAP) -> dict:
    """Full character of the irreducible module, refused above ``cap`` dimensions."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    weight = tuple(weight)
    dim = weyl_dim(alg, weight)
    if dim > cap:
        raise RepresentationError(f"dimension {dim} exceeds the working cap {cap}")
    return _product_character(alg, weight)


@lru_cache(maxsize=None)
def _product_character_cached(alg: Algebra, weight: tuple) -> tuple:
    chars = [simple_character(t, w) for t, w in zip(alg, split(alg, weight))]
    out = {(): 1}
    for ch in chars:
        out = outer_product(out, ch)
    return tuple(sorted(out.items(), reverse=True))


def _product_character(alg: Algebra, weight: tuple) -> dict:
    chi = dict(_product_character_cached(alg, weight))
    assert mass(chi) == weyl_dim(alg, weight)
    return chi


# --- character arithmetic ---------------------------------------------------------------

def mass(chi: dict) -> int:
    return sum(chi.values())


def outer_product(a: dict, b: dict) -> dict:
    """Character of the external tensor product (weights concatenated)."""
    return {u + v: m * n for u, m in a.items() for v, n in b.items()}


def tensor_character(a: dict, b: dict) -> dict:
    """Pointwise product of characters of the same algebra."""
    out: dict = {}
    for u, m in a.items():
        for v, n in b.items():
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, 0) + m * n
    return out


def sym2_character(chi: dict) -> dict:
    out: dict = {}
    items = sorted(chi.items())
    for i, (u, m) in enumerate(items):
        w = tuple(2 * x for x in u)
        out[w] = out.get(w, 0) + m * (m + 1) // 2
        for v, n in items[i + 1:]:
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, 0) + m * n
    return out


def wedge2_character(chi: dict) -> dict:
    out: dict = {}
    items = sorted(chi.items())
    for i, (u, m) in enumerate(items):
        if m > 1:
            w = tuple(2 * x for x in u)
            out[w] = out.get(w, 0) + m * (m - 1) // 2
        for v, n in items[i + 1:]:
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, 0) + m * n
    return {w: m for w, m in out.items() if m}


def _level(alg: Algebra, weight: tuple) -> Fraction:
    return sum((t.data.level(w) for t, w in zip(alg, split(alg, weight))), Fraction(0))


def decompose_character(alg, chi: dict) -> list[tuple[tuple, int]]:
    """Irreducible constituents, by repeated extraction of the highest weight."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    rest = {w: m for w, m in chi.items() if m}
    out = []
    while rest:
        top = max(rest, key=lambda w: (_level(alg, w), w))
        m = rest[top]
        if m < 0 or not is_dominant(top):
            raise RepresentationError("input is not the character of a representation")
        for w, k in _product_character(alg, top).items():
            v = rest.get(w, 0) - m * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
        out.append((top, m))
    return out


def rebuild_character(alg, decomposition: Iterable[tuple[tuple, int]]) -> dict:
    if isinstance(alg, SimpleType):
        alg = (alg,)
    out: dict = {}
    for w, m in decomposition:
        for u, k in _product_character(alg, tuple(w)).items():
            out[u] = out.get(u, 0) + m * k
    return {u: k for u, k in out.items() if k}


def trivial_multiplicity(alg, chi: dict) -> int:
    zero = tuple(0 for t in (alg if not isinstance(alg, SimpleType) else (alg,)) for _ in range(t.rank))
    return dict(decompose_character(alg, chi)).get(zero, 0)


# --- duality and invariant forms ----------------------------------------------------------

def dual_weight(alg, weight: Sequence[int]) -> tuple:
    """-w0(weight)."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    return tuple(x for t, w in zip(alg, split(alg, tuple(weight))) for x in t.data.dual(w))


def is_symplectic(alg, weight: Sequence[int], cap: int = DEFAULT_CAP) -> str:
    """'symplectic', 'orthogonal' or 'not-self-dual'."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    weight = tuple(weight)
    if dual_weight(alg, weight) != weight:
        return "not-self-dual"
    chi = weight_system(alg, weight, cap)
    if trivial_multiplicity(alg, wedge2_character(chi)):
        return "symplectic"
    if trivial_multiplicity(alg, sym2_character(chi)):
        return "orthogonal"
    raise RepresentationError("self-dual module without an invariant form")


# --- one-parameter subgroups -------------------------------------------------------------

def cocharacter_weights(alg, weight_or_character, c: Sequence) -> dict:
    """Multiplicities of the values <mu, c> over the weights mu."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    chi = weight_or_character if isinstance(weight_or_character, dict) else weight_system(alg, weight_or_character)
    out: dict = {}
    for mu, m in chi.items():
        v = sum(Fraction(a) * b for a, b in zip(mu, c))
        if v.denominator != 1:
            raise RepresentationError(f"cocharacter pairs to {v} on {mu}")
        out[int(v)] = out.get(int(v), 0) + m
    return dict(sorted(out.items(), reverse=True))


# --- classification -------------------------------------------------------------------------

def simple_types_up_to(d: int) -> list[SimpleType]:
    """Simple types with a nontrivial irreducible of dimension at most d."""
    out = []
    for s, start in (("A", 1), ("B", 3), ("C", 2), ("D", 4)):
        n = start
        while min_nontrivial_dim(SimpleType(s, n)) <= d:
            out.append(SimpleType(s, n))
            n += 1
    for s, n in (("G", 2), ("F", 4), ("E", 6), ("E", 7)):
        if min_nontrivial_dim(SimpleType(s, n)) <= d:
            out.append(SimpleType(s, n))
    return out


def irreps_of_dim(t: SimpleType, d: int) -> list[tuple]:
    """Dominant weights of t with Weyl dimension exactly d.

    The dimension grows strictly with each label, so the search prunes as
    soon as a partial weight already exceeds d.
    """
    out = []
    n = t.rank

    def rec(prefix):
        if len(prefix) == n:
            if weyl_dim(t, prefix) == d and any(prefix):
                out.append(tuple(prefix))
            return
        k = 0
        while True:
            w = prefix + [k] + [0] * (n - len(prefix) - 1)
            if weyl_dim(t, w) > d:
                break
            rec(prefix + [k])
            k += 1

    rec([])
    return sorted(out)


def _divisors(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if n % k == 0]


def tensor_candidates(dim: int) -> list[tuple[Algebra, tuple]]:
    """Irreducibles of semisimple algebras of the given dimension, every factor nontrivial."""
    atoms = []
    for d in _divisors(dim):
        for t in simple_types_up_to(d):
            for w in irreps_of_dim(t, d):
                atoms.append((d, t, w))
    atoms.sort(key=lambda a: (a[1], a[2]))
    out = []

    def rec(start, remaining, chosen):
        if remaining == 1:
            alg = tuple(t for _, t, _ in chosen)
            weight = tuple(x for _, _, w in chosen for x in w)
            out.append((alg, weight))
            return
        for i in range(start, len(atoms)):
            d, t, w = atoms[i]
            if remaining % d == 0:
                rec(i, remaining // d, chosen + [atoms[i]])

    rec(0, dim, [])
    return out


def classify_semisimple_irreps(dim: int, symplectic: bool = True, proper: bool = False):
    """Irreducible dim-dimensional modules, optionally only those with a trivial summand in Lambda^2.

    With ``proper`` the defining module of sp(dim) itself is left out.
    """
    if dim > 64:
        raise RepresentationError("classification is limited to dimension 64")
    out = []
    for alg, weight in tensor_candidates(dim):
        if proper and alg == (SimpleType("C", dim // 2),) and weight == (1,) + (0,) * (dim // 2 - 1):
            continue
        if symplectic:
            chi = weight_system(alg, weight, cap=max(DEFAULT_CAP, dim))
            if not trivial_multiplicity(alg, wedge2_character(chi)):
                continue
        out.append((alg, weight))
    return out


def wedge2_report(alg, weight) -> list[tuple[tuple, int, int]]:
    """(highest weight, multiplicity, dimension) of the constituents of Lambda^2."""
    if isinstance(alg, SimpleType):
        alg = (alg,)
    dec = decompose_character(alg, wedge2_character(weight_system(alg, weight)))
    return [(w, m, weyl_dim(alg, w)) for w, m in dec]
