import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heartglue.model import (
    BigradedObject,
    Cut,
    HNTower,
    OracleModel,
    QuiverModel,
    SemisimpleModel,
    SwapBlocked,
    bigraded_samples,
    brute_hom_ext,
    hom_basis,
    interval_ext,
    interval_hom,
    interval_representation,
    inversions,
    random_bigraded,
    random_quiver_object,
    reorder_tower,
    verify_t_structure,
)
from heartglue.perversity import Perversity
from heartglue.slicing import HeartTable
from heartglue.zposet import (
    Z,
    Z_LEX_ZHAT,
    ZHAT,
    DomainError,
    LexProduct,
    alpha,
    exchange,
    gamma_p,
    projection_first,
)

import brute

E = exchange(Z, ZHAT)
E_CUT = Cut(LexProduct(ZHAT, Z), (0, 0))


def obj(*pairs):
    return BigradedObject(tuple((n, w, 1) for n, w in pairs))


# -- hom dimensions -----------------------------------------------------------


def test_semisimple_hom_only_matching_labels():
    m = SemisimpleModel()
    x = obj((0, 0))
    assert m.hom_dimension(x, x, 0) == 1
    assert m.hom_dimension(x, x, 1) == 0
    assert m.hom_dimension(x, x.shift(1), 1) == 0
    assert m.hom_dimension(x, obj((0, 1)), 0) == 0
    assert m.hom_dimension(BigradedObject(((0, 0, 2),)), BigradedObject(((0, 0, 3),)), 0) == 6


def test_a2_projective_and_simple():
    q = QuiverModel(2)
    p1, s2, p2 = q.obj(((1, 1), 0, 1)), q.obj(((2, 2), 0, 1)), q.obj(((1, 2), 0, 1))
    assert q.hom_dimension(s2, p1, 1) == 1
    assert q.hom_dimension(p1, s2, 0) == 0
    assert q.hom_dimension(p1, p2, 0) == 1
    assert q.hom_dimension(p2, s2, 0) == 1
    assert brute.quiver_hom_ext(2, (2, 2), (1, 1)) == (0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_interval_formulas_match_linear_algebra(n):
    ivs = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    for i, j in itertools.product(ivs, repeat=2):
        hom, ext = brute.quiver_hom_ext(n, i, j)
        assert interval_hom(i, j) == hom, (i, j)
        assert interval_ext(i, j, 1) == ext, (i, j)
        assert interval_ext(i, j, 2) == 0
        assert brute_hom_ext(interval_representation(n, *i), interval_representation(n, *j)) == (hom, ext)


def test_hom_basis_dimension():
    p2 = interval_representation(2, 1, 2)
    s1 = interval_representation(2, 1, 1)
    assert len(hom_basis(p2, p2)) == 1
    assert len(hom_basis(s1, p2)) == 1
    assert len(hom_basis(p2, s1)) == 0


def test_quiver_hom_matches_brute_on_random_objects():
    rng = random.Random(7)
    for n in (2, 3):
        q = QuiverModel(n)
        for _ in range(30):
            x = random_quiver_object(rng, n, 3, -1, 1)
            y = random_quiver_object(rng, n, 3, -1, 1)
            for k in (-1, 0, 1, 2):
                assert q.hom_dimension(x, y, k) == q.hom_dimension_brute(x, y, k)


def test_quiver_rejects_bad_input():
    with pytest.raises(DomainError):
        QuiverModel(3, (0, 1, 0))
    with pytest.raises(DomainError):
        QuiverModel(2).ext((1, 3), (1, 1), 0)
    with pytest.raises(DomainError):
        QuiverModel(2).hom_dimension(QuiverModel(3).obj(), QuiverModel(2).obj(), 0)


# -- towers -------------------------------------------------------------------


def test_hn_tower_orders_labels_decreasingly():
    x = obj((0, 3), (0, 5), (1, 2))
    t = SemisimpleModel().hn_tower(x)
    assert t.labels == [(1, 2), (0, 5), (0, 3)]
    assert t.reassemble() == x


def test_hn_tower_of_zero_is_empty():
    t = SemisimpleModel().hn_tower(BigradedObject.zero())
    assert len(t) == 0
    assert t.reassemble().is_zero()


def test_hn_tower_of_p2_has_one_factor():
    q = QuiverModel(2)
    t = q.hn_tower(q.obj(((1, 2), 0, 1)))
    assert t.labels == [(0, 0)]


def test_hn_tower_splits_p2_with_two_weights():
    q = QuiverModel(2, (1, 0))
    x = q.obj(((1, 2), 0, 1))
    t = q.hn_tower(x)
    assert t.labels == [(0, 1), (0, 0)]
    assert t.partial_object(1) == q.obj(((1, 1), 0, 1))
    assert t.quotient_object(1) == q.obj(((2, 2), 0, 1))
    assert t.reassemble() == x


def test_hn_tower_rejects_unsorted_labels():
    t = SemisimpleModel().hn_tower(obj((0, 0), (1, 0)))
    with pytest.raises(DomainError):
        HNTower(t.model, t.source, tuple(reversed(t.factors)))


@given(st.integers(0, 10**6))
def test_hn_tower_reassembles(seed):
    rng = random.Random(seed)
    m = SemisimpleModel()
    x = random_bigraded(rng)
    t = m.hn_tower(x)
    assert m.isomorphic(t.reassemble(), x)
    assert all(a > b for a, b in zip(t.labels, t.labels[1:]))


def test_reorder_leaves_sorted_tower_alone():
    m = SemisimpleModel()
    # e sends (1, 0) to (0, 1) in U and (0, 0) to (0, 0) in L for the cut at (0, 1)
    cut = Cut(LexProduct(ZHAT, Z), (0, 1))
    r = reorder_tower(m.hn_tower(obj((1, 0), (0, 0))), E, cut, m.oracle)
    assert r.swaps == ()
    assert r.sides == ("U", "L")


def test_reorder_swaps_an_inverted_pair():
    m = SemisimpleModel()
    cut = Cut(LexProduct(ZHAT, Z), (1, 0))
    t = m.hn_tower(obj((1, 0), (0, 1)))
    assert t.labels == [(1, 0), (0, 1)]
    r = reorder_tower(t, E, cut, m.oracle)
    assert len(r.swaps) == 1
    assert r.tower.labels == [(0, 1), (1, 0)]
    assert r.sides == ("U", "L")


def test_reorder_blocked_by_nonvanishing_ext():
    # moving D_(0,1) above D_(1,0) needs Ext^2(heart_1, heart_0) = 0
    table = HeartTable([0, 1], True, {(1, 0, 2): False})
    m = OracleModel(table)
    cut = Cut(LexProduct(ZHAT, Z), (1, 0))
    t = m.hn_tower(obj((1, 0), (0, 1)))
    with pytest.raises(SwapBlocked) as err:
        reorder_tower(t, E, cut, m.oracle)
    assert err.value.labels == ((1, 0), (0, 1))


def test_reorder_requires_matching_codomain():
    m = SemisimpleModel()
    with pytest.raises(DomainError):
        reorder_tower(m.hn_tower(obj((0, 0))), E, Cut(Z, 0), m.oracle)


@given(st.integers(0, 10**6))
def test_swap_count_is_number_of_inversions(seed):
    rng = random.Random(seed)
    m = SemisimpleModel()
    x = random_bigraded(rng, 7, -3, 3, 1)
    t = m.hn_tower(x)
    sides = [E_CUT.side(E(lbl)) for lbl in t.labels]
    r = reorder_tower(t, E, E_CUT, m.oracle)
    n = len(t)
    assert len(r.swaps) == inversions(sides) <= n * (n - 1) // 2
    assert list(r.sides) == sorted(sides, key=lambda s: s != "U")


def test_inversions():
    assert inversions("UULL") == 0
    assert inversions("LLUU") == 4
    assert inversions("LULU") == 3


# -- truncation and t-structure checks -----------------------------------------


def test_truncate_semisimple():
    m = SemisimpleModel()
    x = obj((1, 0), (0, 1), (0, -1))
    xu, xl = m.truncate(x, E, Cut(LexProduct(ZHAT, Z), (0, 0)))
    assert xu == obj((1, 0), (0, 1))
    assert xl == obj((0, -1))
    assert m.class_vector(xu) + m.class_vector(xl) == m.class_vector(x)


def test_truncate_quiver_with_weights():
    q = QuiverModel(2, (1, 0))
    x = q.obj(((1, 2), 0, 1))
    xu, xl = q.truncate(x, gamma_p(Perversity.identity()), Cut(Z, 1))
    # gamma_id(0, 1) = 1 is upper, gamma_id(0, 0) = 0 is lower
    assert xu == q.obj(((1, 1), 0, 1))
    assert xl == q.obj(((2, 2), 0, 1))


MAPS = {
    "e": (E, E_CUT),
    "alpha": (alpha(), Cut(Z_LEX_ZHAT, (0, 0))),
    "gamma_id": (gamma_p(Perversity.identity()), Cut(Z, 0)),
    "gamma_middle": (gamma_p(Perversity.middle()), Cut(Z, 0)),
}


@pytest.mark.parametrize("name", sorted(MAPS))
def test_verify_semisimple(name):
    f, cut = MAPS[name]
    rep = verify_t_structure(SemisimpleModel(), f, cut, bigraded_samples(2, -1, 1))
    assert rep.passed, rep.failures[:3]


@pytest.mark.parametrize("weights", [(0, 0), (1, 0), (1, 1, 0), (2, 1, 0), (1, 0, -1)])
@pytest.mark.parametrize("name", sorted(MAPS))
def test_verify_quiver(name, weights):
    f, cut = MAPS[name]
    q = QuiverModel(len(weights), weights)
    rng = random.Random(hash((name, weights)) & 0xFFFF)
    samples = [random_quiver_object(rng, q.n, 3, -2, 2) for _ in range(25)]
    rep = verify_t_structure(q, f, cut, samples)
    assert rep.passed, rep.failures[:3]


def test_verify_reports_orthogonality_failure():
    table = HeartTable([0, 1], True, {(1, 0, 1): False})
    m = OracleModel(table)
    cut = Cut(LexProduct(ZHAT, Z), (1, 0))
    rep = verify_t_structure(m, E, cut, [obj((0, 1)), obj((1, 0))])
    assert rep.decomposes and rep.closed_under_shift
    assert not rep.orthogonal
    assert rep.failures[0]["check"] == "orthogonality"
    assert not rep.passed


def test_verify_reports_blocked_decomposition():
    table = HeartTable([0, 1], True, {(1, 0, 2): False})
    m = OracleModel(table)
    rep = verify_t_structure(m, E, Cut(LexProduct(ZHAT, Z), (1, 0)), [obj((1, 0), (0, 1))])
    assert not rep.decomposes
    assert rep.failures[0]["check"] == "decomposition"


def test_projection_first_is_a_t_structure_for_any_table():
    rng = random.Random(3)
    for _ in range(20):
        labels = [0, 1, 2]
        entries = {
            (a, b, d): rng.random() < 0.5
            for a in labels
            for b in labels
            for d in range(0, 3)
            if d > 0 or a <= b
        }
        m = OracleModel(HeartTable(labels, True, entries))
        samples = [random_bigraded(rng, 4, -2, 2, 1) for _ in range(10)]
        samples = [BigradedObject(tuple((n, w % 3, k) for n, w, k in x.entries)) for x in samples]
        rep = verify_t_structure(m, projection_first(), Cut(Z, 0), samples)
        assert rep.decomposes and rep.closed_under_shift, rep.failures[:2]


def test_upper_and_lower_pieces_meet_in_a_slice():
    # an object in both the (>= j) and (<= j) classes of gamma_p lives in slice j
    f = gamma_p(Perversity.middle())
    for x in bigraded_samples(3, -1, 1):
        for j in range(-3, 4):
            ys = [f(lbl) for lbl in x.labels()]
            if all(y >= j for y in ys) and all(y <= j for y in ys):
                assert set(ys) <= {j}
