import pytest
from hypothesis import given, settings, strategies as st

from cycert import lie
from cycert.lie import RepresentationError, SimpleType


def W(text):
    return lie.parse_weight(text)


@pytest.mark.parametrize("name,dim", [
    ("A5:[0,0,1,0,0]", 20), ("A5:[1,0,0,0,1]", 35), ("A5:[0,1,0,1,0]", 189), ("A5:[0,0,2,0,0]", 175),
    ("A1:[19]", 20), ("C2:[3,0]", 20), ("G2:[1,0]", 7), ("G2:[0,1]", 14), ("B3:[0,0,1]", 8),
    ("F4:[0,0,0,1]", 26), ("E6:[1,0,0,0,0,0]", 27), ("E7:[0,0,0,0,0,0,1]", 56), ("D5:[0,0,0,0,1]", 16),
    ("A1:[1]+D5:[1,0,0,0,0]", 20),
])
def test_dimensions(name, dim):
    assert lie.weyl_dim(*W(name)) == dim


def test_parse_format_roundtrip():
    for text in ("A1:[1]+C2:[2,0]", "E6:[0,0,0,0,0,1]", "A5:[0,0,1,0,0]"):
        assert lie.format_weight(*W(text)) == text
    for bad in ("A0:[]", "B2:[1,0]", "A2:[1]", "X3:[1,1,1]", "A1[1]"):
        with pytest.raises(RepresentationError):
            W(bad)


def names(alg, dec):
    return sorted(lie.format_weight(alg, w) for w, m in dec for _ in range(m))


def test_third_wedge_of_six():
    alg, w = W("A5:[0,0,1,0,0]")
    chi = lie.weight_system(alg, w)
    assert names(alg, lie.decompose_character(alg, lie.sym2_character(chi))) == ["A5:[0,0,2,0,0]", "A5:[1,0,0,0,1]"]
    assert names(alg, lie.decompose_character(alg, lie.wedge2_character(chi))) == ["A5:[0,0,0,0,0]", "A5:[0,1,0,1,0]"]
    assert lie.is_symplectic(alg, w) == "symplectic"
    six = (1, 2, 3, 2, 1)
    assert list(lie.cocharacter_weights(alg, w, six).values()) == [1, 9, 9, 1]
    assert list(lie.cocharacter_weights(alg, (1, 0, 0, 0, 1), six).values()) == [9, 17, 9]
    assert list(lie.cocharacter_weights(alg, (0, 0, 2, 0, 0), six).values()) == [1, 9, 45, 65, 45, 9, 1]


def test_sym2_of_c2():
    alg, w = W("C2:[3,0]")
    dec = lie.decompose_character(alg, lie.sym2_character(lie.weight_system(alg, w)))
    assert sorted(lie.weyl_dim(alg, u) for u, m in dec for _ in range(m)) == [10, 35, 81, 84]


def test_zero_weight_multiplicity():
    alg, w = W("A2:[1,1]")
    assert lie.weight_system(alg, w)[(0, 0)] == 2
    alg, w = W("G2:[0,1]")
    assert lie.weight_system(alg, w)[(0, 0)] == 2


def test_cap():
    with pytest.raises(RepresentationError):
        lie.weight_system(*W("A5:[0,1,0,1,0]"), cap=100)


def test_a1_times_d5_pattern():
    alg, w = W("A1:[1]+D5:[1,0,0,0,0]")
    c = (1, 2, 2, 2, 1, 1)
    chi = lie.weight_system(alg, w)
    assert list(lie.cocharacter_weights(alg, chi, c).values()) == [1, 9, 9, 1]
    s2 = lie.sym2_character(chi)
    assert list(lie.cocharacter_weights(alg, s2, c).values()) == [1, 9, 54, 82, 54, 9, 1]
    got = {lie.weyl_dim(alg, u): list(lie.cocharacter_weights(alg, u, c).values())
           for u, m in lie.decompose_character(alg, s2)}
    assert got == {3: [1, 1, 1], 45: [8, 29, 8], 162: [1, 9, 45, 52, 45, 9, 1]}


def test_rejected_product_has_no_form():
    alg, w = W("A1:[1]+A1:[1]+A4:[1,0,0,0]")
    rep = lie.wedge2_report(alg, w)
    assert sorted(d for _, _, d in rep) == [10, 45, 45, 90]
    assert not any(not any(u) for u, _, _ in rep)


def test_small_classifications():
    assert lie.classify_semisimple_irreps(2) == [((SimpleType("A", 1),), (1,))]
    found = {lie.format_weight(a, w) for a, w in lie.classify_semisimple_irreps(4)}
    assert found == {"A1:[3]", "C2:[1,0]"}


def _self_dual_cases():
    out = []
    for t in (SimpleType("A", 1), SimpleType("A", 2), SimpleType("C", 2), SimpleType("G", 2)):
        for d in range(2, 31):
            out += [(t, w) for w in lie.irreps_of_dim(t, d)]
    return out


CASES = _self_dual_cases()


@given(st.sampled_from(CASES))
@settings(max_examples=40, deadline=None)
def test_forms_and_characters(case):
    t, w = case
    alg = (t,)
    chi = lie.weight_system(alg, w)
    n = lie.mass(chi)
    assert n == lie.weyl_dim(alg, w)
    s2, l2 = lie.sym2_character(chi), lie.wedge2_character(chi)
    assert lie.mass(s2) + lie.mass(l2) == n * n
    assert lie.mass(s2) == n * (n + 1) // 2
    assert lie.rebuild_character(alg, lie.decompose_character(alg, s2)) == s2
    a, b = lie.trivial_multiplicity(alg, s2), lie.trivial_multiplicity(alg, l2)
    if lie.dual_weight(alg, w) == tuple(w):
        assert a + b == 1
    else:
        assert a == b == 0
    # a cocharacter gives a symmetric grading on self-dual modules
    c = (1,) * t.rank
    grades = lie.cocharacter_weights(alg, chi, c)
    if lie.dual_weight(alg, w) == tuple(w):
        assert all(grades.get(-k) == v for k, v in grades.items())
