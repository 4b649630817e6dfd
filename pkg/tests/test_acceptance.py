"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line to the terminal (even without -s).
"""

import contextlib
import math
import random
from fractions import Fraction

import pytest

from oracles import lr_by_schur, n3_table, sublevel_table
from fourfold.algebra import Poly, elementary_symmetric, symmetric_reduce
from fourfold.bundles import (
    DirectSum,
    LineBundle,
    Sym,
    TautDualSub,
    TautQuot,
    TautSub,
    Tensor,
    Wedge,
    chern_class,
    fundamental_class,
    realize,
    tangent_bundle,
    total_chern,
    zero_locus_c2,
)
from fourfold.chow import Grassmannian, Product
from fourfold.lattice import (
    Family,
    Finite,
    Infinite,
    closed_form_bound,
    enumerate_sublevel,
    representable,
    restricted_count_n3,
)
from fourfold.pairs import (
    QForm,
    is_decent,
    lawrence_discriminant,
    nu_self_degree,
    q_eval,
    q_minimum,
)
from fourfold.schubert import (
    SchubertExpr,
    all_partitions_in_box,
    chern_to_schubert,
    degree_pair,
    lr_expand,
)
from fourfold.surfaces import (
    EXACT_VALUE,
    ChiAndK2,
    chi_noether,
    invariant_from_chern,
    invariant_threshold,
)

G26 = Grassmannian(2, 6)
G610 = Grassmannian(6, 10)


@pytest.fixture
def verdict(capsys):
    @contextlib.contextmanager
    def run(number, title):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {title}")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number}: {title}")

    return run


def points(r):
    return list(getattr(r, "points", ()))


def test_criterion_01_q_reproduction(qforms, verdict):
    printed = {
        "sextic": "6*x1^2 - 90*x1",
        "fano": "45*x1^2 + 36*x1*x2 + 27*x2^2 - 171*x1 - 9*x2",
        "dv": "279*x1^2 + 696*x1*x2 + 477*x2^2 - 351*x1 - 309*x2",
        "cicy41": "30*x2*x3 - 150*x2",
        "cicy130": "16*x1*x2 + 48*x1*x3 + 24*x2^2 + 48*x2*x3 + 8*x3^2 - 72*x1 - 128*x2 - 112*x3",
        "cicy133": "32*x1*x2 + 64*x1*x3 + 32*x2^2 + 32*x2*x3 - 96*x1 - 128*x2 - 96*x3",
    }
    with verdict(1, "Q reproduced verbatim for all six pairs"):
        for name, text in printed.items():
            assert str(qforms[name]) == text, name


def test_criterion_02_fano_gram(qforms, verdict):
    with verdict(2, "Fano Gram via Schubert/LR and [F] = 18 s31 + 27 s22"):
        q = qforms["fano"]
        assert q.gram == ((45, 18), (18, 27))
        assert q.linear == (171, 9)
        c4 = chern_class(realize(Sym(3, TautDualSub()), G26), 4)
        assert chern_to_schubert(c4, (2, 6)) == SchubertExpr((2, 6), {(3, 1): 18, (2, 2): 27})
        assert str(fundamental_class(G26, Sym(3, TautDualSub()))) == "18*s[3,1] + 27*s[2,2]"


def test_criterion_03_chern_fixtures(verdict):
    def c(k, expr, ambient):
        return str(chern_class(realize(expr, ambient), k))

    with verdict(3, "published Chern classes, tangent and normal c2"):
        assert c(2, Sym(3, TautDualSub()), G26) == "11*c1^2 + 10*c2"
        assert c(4, Sym(3, TautDualSub()), G26) == "18*c1^2*c2 + 9*c2^2"
        assert c(2, Wedge(3, TautDualSub()), G610) == "45*c1^2 + 6*c2"
        assert c(2, Tensor((TautSub(), TautDualSub())), G26) == "-c1^2 + 4*c2"
        assert str(chern_class(tangent_bundle(G26), 2)) == "16*c1^2 + 2*c2"
        assert str(chern_class(tangent_bundle(G610), 2)) == "50*c1^2 - 2*c2"
        assert str(zero_locus_c2(G26, Sym(3, TautDualSub())).to_generators()) == "5*c1^2 - 8*c2"
        assert str(zero_locus_c2(G610, Wedge(3, TautDualSub())).to_generators()) == "5*c1^2 - 8*c2"


def test_criterion_04_decency(qforms, verdict):
    expected = {"sextic": True, "fano": True, "dv": True, "cicy41": False, "cicy130": False, "cicy133": False}
    with verdict(4, "decency verdicts"):
        for name, decent in expected.items():
            assert is_decent(qforms[name]).decent is decent, name


def test_criterion_05_minima(qforms, pairs, verdict):
    with verdict(5, "common minimum (5/2, -3/2) = -207 and 828 = 4*207"):
        for name in ("fano", "dv"):
            vertex, value = q_minimum(qforms[name])
            assert vertex == (Fraction(5, 2), Fraction(-3, 2)) and value == -207
            assert nu_self_degree(pairs[name]) == 828 == 4 * 207


def test_criterion_06_lawrence(qforms, verdict):
    with verdict(6, "Lawrence discriminants (24057, 207) and (5713983, 207)"):
        assert lawrence_discriminant(qforms["fano"]) == (24057, 207)
        assert lawrence_discriminant(qforms["dv"]) == (5713983, 207)


def test_criterion_07_sextic_count_and_soundness(qforms, verdict):
    with verdict(7, "sextic count 16 = bound, soundness on min + 10k, k <= 50"):
        q = qforms["sextic"]
        assert len(points(enumerate_sublevel(q, 0))) == 16
        assert closed_form_bound(q, 0) == pytest.approx(16, abs=1e-9)
        for name in ("sextic", "fano", "dv"):
            q = qforms[name]
            m0 = q_minimum(q)[1]
            for k in range(51):
                s = m0 + 10 * k
                assert len(points(enumerate_sublevel(q, s))) <= closed_form_bound(q, s) + 1e-9, (name, s)


def test_criterion_08_plane_not_ambient(qforms, verdict):
    with verdict(8, "plane threshold is exactly 6 and 6 is not a value of Q_DV"):
        assert invariant_threshold(ChiAndK2(1, 9)) == (EXACT_VALUE, 6)
        assert representable(qforms["dv"], 6, 6).representable is False


def test_criterion_09_surface_fixtures(qforms, verdict):
    with verdict(9, "surface fixtures match Q and Noether"):
        assert invariant_from_chern(45, 27) == 18 == q_eval(qforms["fano"], (0, 1))
        assert invariant_from_chern(900, 972) == -72 == q_eval(qforms["dv"], (1, 0))
        assert chi_noether(900, 972) == 156 == 1 + 0 + 155


def test_criterion_10_non_decent_counts(qforms, verdict):
    with verdict(10, "#133 finite/infinite counts, #41 modulus 30, #130 count 0"):
        q133 = qforms["cicy133"]
        r = restricted_count_n3(q133, -64, "hyperbola")
        assert r == Finite(((1, 2, 3), (2, 0, 4), (3, 2, 1), (4, 0, 2)))
        inf = restricted_count_n3(q133, -96, "hyperbola")
        assert isinstance(inf, Infinite)
        assert set(inf.families) == {Family((0, 3, 0), (1, 0, 0)), Family((0, 3, 0), (0, 0, 1))}
        rep = representable(qforms["cicy41"], 2, 6)
        assert rep.representable is False and rep.certificate == {"method": "modular", "modulus": 30}
        r130 = restricted_count_n3(qforms["cicy130"], 6, "bounded-box")
        assert isinstance(r130, Finite) and r130.count == 0
        # cross-check against the brute-force table on a box well past every floor
        q130 = qforms["cicy130"]
        assert n3_table(q130.gram, q130.linear, 6, 6, side=80).get(6, []) == []
        assert n3_table(q133.gram, q133.linear, -64, -64, side=80)[-64] == list(r.points)


def _whitney(rng):
    v = Product(2, 3)
    lines = [LineBundle(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)]
    e = Sym(2, DirectSum((lines[0], lines[1])))
    f = Tensor((lines[2], lines[3]))
    be, bf = realize(e, v), realize(f, v)
    ce, cf = total_chern(be, 4), total_chern(bf, 4)
    cs = total_chern(realize(DirectSum((e, f)), v), 4)
    for k in range(5):
        assert cs[k] == sum((ce[i] * cf[k - i] for i in range(k + 1)), Poly.zero(v.generators))
    g = Grassmannian(2, 5)
    atoms = [TautSub(), TautDualSub(), TautQuot()]
    a, b = realize(rng.choice(atoms), g), realize(Sym(2, rng.choice(atoms)), g)
    ca, cb, cs = total_chern(a, 3), total_chern(b, 3), total_chern(a + b, 3)
    for k in range(4):
        assert cs[k] == sum((ca[i] * cb[k - i] for i in range(k + 1)), Poly.zero(g.generators))


def _lr(rng):
    for box in ((2, 6), (3, 6)):
        parts = all_partitions_in_box(box)
        for _ in range(15):
            lam, mu, nu = (rng.choice(parts) for _ in range(3))
            assert lr_expand(lam, mu, box) == lr_expand(mu, lam, box)
            assert lr_expand(lam, mu, box).terms == lr_by_schur(lam, mu, *box)
            a, b, c = (SchubertExpr(box, {p: 1}) for p in (lam, mu, nu))
            assert (a * b) * c == a * (b * c)
            l, n = box
            comp = [p for p in parts if sum(p) == l * (n - l) - sum(lam)]
            mu = rng.choice(comp)
            assert degree_pair(lam, mu, box) == lr_expand(lam, mu, box).coefficient(((n - l),) * l)


def _enumeration(rng, qforms):
    forms = [qforms["sextic"], qforms["fano"], qforms["dv"]]
    while len(forms) < 8:
        a, c, b = rng.randint(1, 20), rng.randint(1, 20), rng.randint(-20, 20)
        if a * c > b * b:
            forms.append(QForm(("u", "v"), ((a, b), (b, c)), (rng.randint(-20, 20), rng.randint(-20, 20))))
    for q in forms:
        table = sublevel_table(q.gram, q.linear, 40)
        for s in range(math.floor(q_minimum(q)[1]) - 1, 41, 3):
            assert points(enumerate_sublevel(q, s)) == [x for x, v in table if v <= s]


def _symmetric_round_trip(rng):
    for _ in range(10):
        n = rng.randint(1, 5)
        v = [f"x{i}" for i in range(1, n + 1)]
        xs = Poly.gens(v)
        es = [elementary_symmetric(k, xs, v) for k in range(1, n + 1)]
        p = Poly.zero(v)
        for _ in range(rng.randint(1, 3)):
            term = Poly.const(rng.randint(-4, 4), v)
            budget = rng.randint(0, 6)
            while budget > 0:
                k = rng.randint(1, min(n, budget))
                term, budget = term * es[k - 1], budget - k
            p = p + term
        q = symmetric_reduce(p, v)
        assert q.subs({f"e{k}": es[k - 1] for k in range(1, n + 1)}) == p


def test_criterion_11_property_suites(qforms, verdict):
    rng = random.Random(20261015)
    with verdict(11, "Whitney, LR, pairing coherence, enumeration and reduction properties"):
        for _ in range(5):
            _whitney(rng)
        _lr(rng)
        _enumeration(rng, qforms)
        _symmetric_round_trip(rng)
