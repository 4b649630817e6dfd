from hypothesis import given, settings, strategies as st

import pytest

from oracles import lr_by_schur
from fourfold.algebra import Poly
from fourfold.errors import BoxViolation, GradeMismatch
from fourfold.schubert import (
    SchubertExpr,
    all_partitions_in_box,
    chern_to_schubert,
    complement,
    degree_pair,
    giambelli,
    lr_expand,
    make_partition,
    pieri,
    schubert_to_chern,
)

G26 = (2, 6)
G36 = (3, 6)


def s(box, *terms):
    return SchubertExpr(box, dict(terms))


def test_small_products():
    assert lr_expand((1,), (1,), G26) == s(G26, ((2,), 1), ((1, 1), 1))
    assert lr_expand((2,), (2,), G26) == s(G26, ((4,), 1), ((3, 1), 1), ((2, 2), 1))
    assert lr_expand((2,), (1, 1), G26) == s(G26, ((3, 1), 1))
    # sigma_5 falls outside the 2 x 4 box
    assert lr_expand((4,), (1,), G26) == s(G26, ((4, 1), 1))


def test_trailing_zeros_and_box():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(BoxViolation):
        make_partition([1, 2])
    with pytest.raises(BoxViolation):
        lr_expand((5,), (1,), G26)
    with pytest.raises(BoxViolation):
        lr_expand((1, 1, 1), (1,), G26)


def test_degree_pair():
    assert degree_pair((3, 1), (3, 1), G26) == 1
    assert degree_pair((4,), (2, 2), G26) == 0
    assert complement((3, 1), G26) == (3, 1)
    with pytest.raises(GradeMismatch):
        degree_pair((1,), (1,), G26)


BOXES = [(2, 5), (2, 6), (3, 6), (3, 7), (4, 8)]


@st.composite
def two_partitions(draw):
    box = draw(st.sampled_from(BOXES))
    parts = all_partitions_in_box(box)
    small = [p for p in parts if sum(p) <= 5]
    return box, draw(st.sampled_from(small)), draw(st.sampled_from(small))


@given(two_partitions())
@settings(max_examples=80, deadline=None)
def test_lr_matches_schur_oracle(case):
    box, lam, mu = case
    expected = lr_by_schur(lam, mu, box[0], box[1])
    assert lr_expand(lam, mu, box).terms == {k: v for k, v in expected.items() if v}


@given(two_partitions())
@settings(max_examples=80, deadline=None)
def test_lr_symmetry(case):
    box, lam, mu = case
    assert lr_expand(lam, mu, box) == lr_expand(mu, lam, box)


@given(st.sampled_from([G26, G36]), st.data())
@settings(max_examples=60, deadline=None)
def test_lr_associativity(box, data):
    parts = all_partitions_in_box(box)
    a, b, c = (SchubertExpr(box, {data.draw(st.sampled_from(parts)): 1}) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@given(st.sampled_from(BOXES), st.data())
@settings(max_examples=60, deadline=None)
def test_pieri_consistency(box, data):
    lam = data.draw(st.sampled_from(all_partitions_in_box(box)))
    k = data.draw(st.integers(1, box[1] - box[0]))
    assert lr_expand(lam, (k,), box).terms == {nu: c for nu, c in pieri(lam, k, box).items()}


@given(st.sampled_from(BOXES), st.data())
@settings(max_examples=60, deadline=None)
def test_pairing_matches_point_coefficient(box, data):
    l, n = box
    parts = all_partitions_in_box(box)
    lam = data.draw(st.sampled_from(parts))
    comp = [p for p in parts if sum(p) == l * (n - l) - sum(lam)]
    mu = data.draw(st.sampled_from(comp))
    point = ((n - l),) * l
    assert degree_pair(lam, mu, box) == lr_expand(lam, mu, box).coefficient(point)


def test_fano_class_conversion():
    p = Poly.parse("18*c1^2*c2 + 9*c2^2", ["c1", "c2"])
    assert str(chern_to_schubert(p, G26)) == "18*s[3,1] + 27*s[2,2]"
    assert str(chern_to_schubert(Poly.parse("5*c1^2 - 8*c2", ["c1", "c2"]), G26)) == "5*s[2] - 3*s[1,1]"


def test_giambelli_inverts_conversion():
    for box in [G26, G36, (3, 7)]:
        for lam in all_partitions_in_box(box):
            if sum(lam) <= 4:
                expr = SchubertExpr(box, {lam: 1})
                assert chern_to_schubert(schubert_to_chern(expr), box) == expr
    assert str(giambelli((2,), 2)) == "c1^2 - c2"


@st.composite
def chern_polys(draw):
    names = ["c1", "c2", "c3"]
    weights = [1, 2, 3]
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        mono = tuple(draw(st.integers(0, 2)) for _ in names)
        if sum(w * e for w, e in zip(weights, mono)) <= 4:
            terms[mono] = draw(st.integers(-3, 3))
    return Poly(names, terms)


@given(chern_polys(), chern_polys())
@settings(max_examples=40, deadline=None)
def test_chern_to_schubert_is_multiplicative(p, q):
    box = G36
    assert chern_to_schubert(p * q, box) == chern_to_schubert(p, box) * chern_to_schubert(q, box)
    assert chern_to_schubert(p + q, box) == chern_to_schubert(p, box) + chern_to_schubert(q, box)
