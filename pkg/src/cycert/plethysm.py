"""The Higgs field on S^2(R) and its iterated images.

R = R_0 + R_1 + R_2 + R_3 has the basis v_1..v_20 and S^2(R) the basis
u_phi(i,j) = v_i v_j (i <= j).  Multiplication by w_k acts on S^2(R) as a
derivation:

    v_i v_j  ->  sum_l c_il v_l v_j + sum_l c_jl v_i v_l.

Starting from v_1^2 = 1*1, the span of all images under the nine operators
has dimensions 1, 9, 45, 78.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .jacobian import Arrangement, pairs
from .linalg import Echelon, RationalMatrix, from_field, matrix_fingerprint, to_field


def sym2_operator(C: RationalMatrix) -> RationalMatrix:
    """210x210 matrix of the derivation induced by C on S^2 (column convention)."""
    n = C.nrows
    labels = pairs(n)
    index = {pq: t for t, pq in enumerate(labels)}
    N = len(labels)
    out = [[Fraction(0)] * N for _ in range(N)]
    cols = [C.column(i) for i in range(n)]
    for t, (i, j) in enumerate(labels):
        for src, other in ((i, j), (j, i)):
            for l, c in enumerate(cols[src]):
                if c:
                    out[index[tuple(sorted((l, other)))]][t] += c
    return RationalMatrix(out)


def block_partition(levels: Sequence[int]) -> list[int]:
    """Sizes of the blocks of S^2 by total level l_i + l_j."""
    top = 2 * max(levels)
    sizes = [0] * (top + 1)
    for i, j in pairs(len(levels)):
        sizes[levels[i] + levels[j]] += 1
    return sizes


def pair_levels(levels: Sequence[int]) -> list[int]:
    return [levels[i] + levels[j] for i, j in pairs(len(levels))]


def respects_grading(S: RationalMatrix, levels: Sequence[int]) -> bool:
    """Every nonzero entry maps block m to block m + 1."""
    lv = pair_levels(levels)
    return all(not v or lv[r] == lv[c] + 1 for r, row in enumerate(S.rows) for c, v in enumerate(row))


@dataclass
class ImageChain:
    dims: list
    bases: list  # reduced echelon rows of each image, as dicts
    fingerprint: str


def _sparse_columns(S: RationalMatrix) -> list[dict]:
    cols = [dict() for _ in range(S.ncols)]
    for r, row in enumerate(S.rows):
        for c, v in enumerate(row):
            if v:
                cols[c][r] = to_field(v)
    return cols


def _apply(cols: list[dict], vec: dict) -> dict:
    out: dict = {}
    for c, x in vec.items():
        for r, v in cols[c].items():
            s = out.get(r, 0) + x * v
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return out


def iterated_images(ops: Sequence[RationalMatrix], start: int = 0, steps: int = 3) -> ImageChain:
    """Dimensions of V_0 = <u_start>, V_{m+1} = sum_k S_k(V_m)."""
    cols = [_sparse_columns(S) for S in ops]
    current = [{start: to_field(1)}]
    dims = [1]
    bases = [current]
    for _ in range(steps):
        ech = Echelon()
        for vec in current:
            for c in cols:
                img = _apply(c, vec)
                if img:
                    ech.add(img)
        current = ech.reduced_rows()
        dims.append(len(current))
        bases.append(current)
    n = ops[0].ncols
    dense = [[from_field(r.get(j, 0)) for j in range(n)] for r in current]
    return ImageChain(dims, bases, matrix_fingerprint(dense))


def sym2_operators(arr: Arrangement) -> list[RationalMatrix]:
    return [sym2_operator(C) for C in arr.operators]


def iterated_image_dims(arr: Arrangement) -> list[int]:
    return iterated_images(sym2_operators(arr)).dims


# --- Hodge vectors ---------------------------------------------------------------

def _exact_quotient(h: Sequence[int], d: Sequence[int]):
    """h / d over the integers if exact with nonnegative quotient, else None."""
    h = list(h)
    q = [0] * (len(h) - len(d) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(h[k + len(d) - 1], d[-1])
        if r or c < 0:
            return None
        q[k] = c
        for i, v in enumerate(d):
            h[k + i] -= c * v
    return q if not any(h) else None


def hodge_vector_factorizations(h: Sequence[int]) -> list[tuple[list[int], list[int]]]:
    """Ordered pairs (h1, h2) of nontrivial Hodge vectors with h1 * h2 = h.

    Coefficients are nonnegative integers and constant terms are 1; since
    h_k >= (h1)_k for such products, the search is bounded coefficientwise.
    """
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    if not h or h[0] != 1 or min(h) < 0:
        raise ValueError("a Hodge vector has nonnegative entries and constant term 1")
    out = []
    deg = len(h) - 1
    for d1 in range(1, deg):
        ranges = [range(0, h[k] + 1) for k in range(1, d1)] + [range(1, h[d1] + 1)]
        for tail in product(*ranges):
            h1 = [1, *tail]
            h2 = _exact_quotient(h, h1)
            if h2 is not None and h2[0] == 1:
                out.append((h1, h2))
    return out


def hodge_vector_str(h: Sequence[int], var: str = "q") -> str:
    parts = []
    for k, c in enumerate(h):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return " + ".join(parts) or "0"


def operators_commute(ops: Sequence[RationalMatrix]) -> bool:
    """AB = BA for all pairs, compared column by column on sparse columns."""
    cols = [_sparse_columns(S) for S in ops]
    for a, b in combinations(cols, 2):
        for c in range(len(a)):
            if _apply(a, b[c]) != _apply(b, a[c]):
                return False
    return True
