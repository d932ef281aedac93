"""Acceptance criteria, one test each.  A PASS/FAIL line per criterion is
printed in the terminal summary (see conftest.py)."""

import json
import random
import time
from fractions import Fraction

from cycert import cli, lie
from cycert.charvar import characteristic_ideal, characteristic_invariants, segre_ideal
from cycert.ideal import buchberger, normal_form
from cycert.jacobian import Arrangement, x_parity
from cycert.pipeline import canonical
from cycert.plethysm import (hodge_vector_factorizations, iterated_images, operators_commute, respects_grading,
                             sym2_operators)

TABLES = {
    0: ["1"],
    1: ["x5^2*y2", "x5^2*y3", "x5^2*y4", "x6^2*y2", "x6^2*y3", "x6^2*y4", "x7^2*y2", "x7^2*y3", "x7^2*y4"],
    2: ["x6^4*y3^2", "x6^4*y3*y4", "x6^4*y4^2", "x6^2*x7^2*y3^2", "x6^2*x7^2*y3*y4", "x6^2*x7^2*y4^2",
        "x7^4*y3^2", "x7^4*y3*y4", "x7^4*y4^2"],
    3: ["x7^6*y4^3"],
}

SEVEN = ["A1:[19]", "A5:[0,0,1,0,0]", "C2:[3,0]", "A1:[1]+C2:[2,0]", "A1:[4]+C2:[1,0]",
         "A1:[1]+D5:[1,0,0,0,0]", "C2:[1,0]+C2:[0,1]"]


def cli_json(capsys, *argv):
    code = cli.main(list(argv))
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def test_criterion_1_bases(capsys):
    t = time.time()
    for p in range(4):
        code, out = cli_json(capsys, "basis", "--p", str(p))
        assert code == 0
        assert out["bases"][str(p)] == TABLES[p]
    assert time.time() - t < 60


def test_criterion_2_characteristic_subvariety():
    t = time.time()
    hd = characteristic_invariants(characteristic_ideal(Arrangement.reference(), 1))
    assert hd.dimension == 2
    assert hd.arithmetic_genus == -41
    seg = characteristic_invariants(segre_ideal())
    assert (seg.dimension, seg.arithmetic_genus) == (4, 0)
    assert time.time() - t < 300


def test_criterion_3_plethysm_chain():
    t = time.time()
    dims = iterated_images(sym2_operators(Arrangement.reference())).dims
    assert dims == [1, 9, 45, 78]
    assert dims[3] > 65
    assert sum(dims) == 133 > 84
    assert time.time() - t < 120


def test_criterion_4_representations():
    t = time.time()
    alg, w = lie.parse_weight("A5:[0,0,1,0,0]")
    for lab, d in (((0, 0, 1, 0, 0), 20), ((1, 0, 0, 0, 1), 35), ((0, 1, 0, 1, 0), 189), ((0, 0, 2, 0, 0), 175)):
        assert lie.weyl_dim(alg, lab) == d
    chi = lie.weight_system(alg, w)
    assert sorted(lie.decompose_character(alg, lie.sym2_character(chi))) == [((0, 0, 2, 0, 0), 1), ((1, 0, 0, 0, 1), 1)]
    assert sorted(lie.decompose_character(alg, lie.wedge2_character(chi))) == [((0, 0, 0, 0, 0), 1), ((0, 1, 0, 1, 0), 1)]
    c = (1, 2, 3, 2, 1)
    assert list(lie.cocharacter_weights(alg, (1, 0, 0, 0, 1), c).values()) == [9, 17, 9]
    assert list(lie.cocharacter_weights(alg, (0, 0, 2, 0, 0), c).values()) == [1, 9, 45, 65, 45, 9, 1]
    alg, w = lie.parse_weight("C2:[3,0]")
    dec = lie.decompose_character(alg, lie.sym2_character(lie.weight_system(alg, w)))
    assert sorted(lie.weyl_dim(alg, u) for u, m in dec for _ in range(m)) == [10, 35, 81, 84]
    assert time.time() - t < 60


def test_criterion_5_classification(capsys):
    t = time.time()
    code, out = cli_json(capsys, "reps", "classify", "--dim", "20", "--symplectic")
    assert code == 0
    alg, w = lie.parse_weight("A1:[1]+A1:[1]+A4:[1,0,0,0]")
    rep = lie.wedge2_report(alg, w)
    assert len(rep) == 4 and not any(not any(u) for u, _, _ in rep)
    assert time.time() - t < 180
    got = sorted(e["rep"] for e in out["entries"])
    want = sorted(canonical(*lie.parse_weight(n)) for n in SEVEN)
    assert set(want) <= set(got)
    # the listed seven are a strict subset of what the search returns; see the README
    extra = sorted(set(got) - set(want))
    assert got == want, f"symplectic irreducibles beyond the listed seven: {extra}"


def test_criterion_6_properties():
    t = time.time()
    rng = random.Random(0)
    arr = Arrangement.reference()
    ring = arr.ring
    # normal forms: idempotent, linear, and equal to full-Buchberger reduction
    gb = buchberger(arr.ideal)
    for p in (1, 2, 3):
        ms = [m for m in ring.monomials_of_bidegree(2 * p, p) if not any(x_parity(m))]
        sample = rng.sample(ms, 15)
        for m in sample:
            f = ring.monomial(m)
            nf = arr.normal_form(f)
            assert arr.normal_form(nf) == nf
            assert normal_form(f, gb) == nf
        f, g = ring.monomial(sample[0]), ring.monomial(sample[1])
        assert arr.normal_form(f.scale(3) - g) == arr.normal_form(f).scale(3) - arr.normal_form(g)
    # Higgs operators and their S^2 derivations
    ops = arr.operators
    assert all(a @ b == b @ a for a in ops for b in ops)
    S = sym2_operators(arr)
    assert all(respects_grading(s, arr.level_of) for s in S)
    assert operators_commute(S)
    # characters
    for text in ("A5:[0,0,1,0,0]", "C2:[3,0]", "G2:[1,1]", "A1:[1]+D5:[1,0,0,0,0]"):
        alg, w = lie.parse_weight(text)
        chi = lie.weight_system(alg, w)
        n = lie.weyl_dim(alg, w)
        assert lie.mass(chi) == n
        for sq in (lie.sym2_character(chi), lie.wedge2_character(chi)):
            assert lie.rebuild_character(alg, lie.decompose_character(alg, sq)) == sq
        assert lie.mass(lie.sym2_character(chi)) + lie.mass(lie.wedge2_character(chi)) == n * n
    assert ([1, 1], [1, 8, 1]) in hodge_vector_factorizations([1, 9, 9, 1])
    assert time.time() - t < 300
