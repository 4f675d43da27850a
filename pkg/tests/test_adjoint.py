import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxquandle import (AdElement, AdjointModel, CoxeterGroup, NotSingleClass, ParityError, catalog,
                        coboundary_solve, cocycle_table, parse_graph, reflections, tau_table)
from coxquandle import adjoint as ad
from coxquandle.quandle import Reflection

A2 = parse_graph('{"generators":["s","t"],"m":[[1,3],[3,1]]}')
B2 = parse_graph('{"generators":["s","t"],"m":[[1,4],[4,1]]}')


@pytest.fixture(scope="module")
def a2():
    return AdjointModel(CoxeterGroup(A2))


@pytest.fixture(scope="module")
def b2():
    return AdjointModel(CoxeterGroup(B2))


def P(model, text):
    return model.group.parse(text)


def test_class_length(a2, b2):
    assert a2.class_length(P(a2, "s t s")) == (3,)
    assert b2.class_length(P(b2, "s t")) == (1, 1)
    assert b2.class_length(b2.group.identity) == (0, 0)


def test_cocycle_values(a2, b2):
    assert a2.cocycle_c(P(a2, "s"), P(a2, "t")) == (0,)
    assert a2.cocycle_c(P(a2, "s t"), P(a2, "t s")) == (2,)
    assert b2.cocycle_c(P(b2, "s"), P(b2, "s")) == (1, 0)
    for w in b2.group.enumerate().elements:
        assert b2.cocycle_c(b2.group.identity, w) == (0, 0) == b2.cocycle_c(w, b2.group.identity)


def test_ad_mul_and_inverse(a2):
    s, t = P(a2, "s"), P(a2, "t")
    e_s = AdElement((0,), s)
    assert a2.ad_mul(e_s, e_s) == AdElement((1,), a2.group.identity)
    assert a2.ad_mul(a2.identity, e_s) == e_s == a2.ad_mul(e_s, a2.identity)
    assert a2.ad_inv(AdElement((0,), t)) == AdElement((-1,), t)


def test_embed_generator(a2, b2):
    for s in range(2):
        assert a2.embed_generator(a2.group.gen(s)) == AdElement((0,), a2.group.gen(s))
    assert a2.embed_generator(P(a2, "s t s")) == AdElement((-1,), P(a2, "s t s"))
    assert b2.embed_generator(P(b2, "t s t")) == AdElement((0, -1), P(b2, "t s t"))
    # t s t is conjugate to s, so it lives in class 0
    assert b2.reflection_class(P(b2, "t s t")) == 0
    assert b2.embed_generator(Reflection(P(b2, "t s t"), 0)).v == (0, -1)


def test_embed_rejects_non_reflection(a2):
    with pytest.raises(ValueError):
        a2.embed_generator(P(a2, "s t"))
    with pytest.raises(ParityError):
        a2.embed_generator(Reflection(P(a2, "s t"), 0))


def test_adjoint_relation_example(a2):
    e_s, e_t = a2.e(0), a2.e(1)
    chain = a2.product(a2.ad_inv(e_t), e_s, e_t)
    assert chain == a2.embed_generator(P(a2, "t s t")) == AdElement((-1,), P(a2, "s t s"))
    assert a2.conj(e_s, e_s) == e_s


def test_b2_braid_relation(b2):
    e_s, e_t = b2.e(0), b2.e(1)
    assert b2.product(e_s, e_t, e_s, e_t) == b2.product(e_t, e_s, e_t, e_s)
    assert ad.braid_relations(b2).passed


def test_tau(a2, b2):
    assert a2.tau_rho(P(a2, "s"), P(a2, "t")) == 1
    assert a2.tau_rho(a2.group.identity, P(a2, "s")) == 0
    assert a2.tau_rho(P(a2, "s t"), P(a2, "s t s")) == 0
    with pytest.raises(NotSingleClass):
        b2.tau_rho(P(b2, "s"), P(b2, "t"))


def test_coboundary_solve_a2(a2):
    T = a2.group.enumerate()
    c = cocycle_table(a2, T)
    tau = tau_table(a2, T)
    b = coboundary_solve(T, c, tau)
    assert b is not None
    assert (b[:, 0] == T.lengths() // 2).all()
    assert not ad.coboundary(b - (T.lengths() // 2)[:, None], T).any()
    assert coboundary_solve(T, c, ad.zero_table(a2, T)) is None
    same = coboundary_solve(T, c, c)
    assert same is not None and not same.any()


def test_c_minus_tau_identity_brute(a2):
    """c - tau = d floor(l/2) over all 36 pairs, computed without the solver."""
    g = a2.group
    for x in g.enumerate().elements:
        for y in g.enumerate().elements:
            xy = g.multiply(x, y)
            lhs = a2.cocycle_c(x, y)[0] - a2.tau_rho(x, y)
            rhs = len(x) // 2 + len(y) // 2 - len(xy) // 2
            assert lhs == rhs


def test_cocycle_table_shape_and_parity(b2):
    T = b2.group.enumerate()
    c = cocycle_table(b2, T)
    assert c.c.shape == (8, 8, 2)
    assert c.normalized
    assert ad.cocycle_identity_defect(c, T) == 0


def test_identity_defect_detects_corruption(b2):
    T = b2.group.enumerate()
    c = cocycle_table(b2, T)
    bad = ad.CocycleTable(c.c.copy(), c.normalized)
    bad.c[3, 4, 0] += 1
    assert ad.cocycle_identity_defect(bad, T) > 0


def test_nonsplit_example(b2):
    t = b2.group.gen(1)
    a = AdElement((-1, 5), t)
    assert b2.ad_mul(a, a) == AdElement((-2, 11), b2.group.identity)
    assert ad.nonsplit_witness(b2).passed


def test_commutator_a2(a2):
    res = ad.commutator_check(a2)
    assert res.passed
    assert res.data["commutator_order"] == 3 == res.data["kernel_order"]


def test_commutator_a1():
    res = ad.commutator_check(AdjointModel(CoxeterGroup(catalog("A1"))))
    assert res.passed and res.data["commutator_order"] == 1


def test_pullback_a2(a2):
    assert a2.ab(a2.e(0)) == (1,)
    res = ad.pullback_check(a2, samples=2000)
    assert res.passed


def test_power(a2):
    z = a2.e(0)
    assert a2.power(z, 2) == AdElement((1,), a2.group.identity)
    assert a2.power(z, -1) == a2.ad_inv(z)
    assert a2.power(z, 0) == a2.identity


@pytest.mark.parametrize("name", ["H3", "I2(5)", "D4"])
def test_is_reflection(name):
    g = CoxeterGroup(catalog(name))
    model = AdjointModel(g)
    refl = {x.element for x in reflections(g).items}
    for w in g.enumerate().elements:
        assert model.is_reflection(w) == (w in refl)


word = st.lists(st.integers(0, 3), max_size=10)


@settings(max_examples=150, deadline=None)
@given(word, word, st.lists(st.integers(-3, 3), min_size=2, max_size=2),
       st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_ab_is_homomorphism_f4(u, w, v1, v2):
    g = CoxeterGroup(catalog("F4"))
    m = AdjointModel(g)
    a, b = AdElement(tuple(v1), g.element(u)), AdElement(tuple(v2), g.element(w))
    assert m.ab(m.ad_mul(a, b)) == tuple(x + y for x, y in zip(m.ab(a), m.ab(b)))
    assert m.ad_mul(a, m.ad_inv(a)) == m.identity == m.ad_mul(m.ad_inv(a), a)


@settings(max_examples=100, deadline=None)
@given(word, word, word)
def test_ad_mul_associative_affine(u, v, w):
    g = CoxeterGroup(catalog("tilde-A3"))
    m = AdjointModel(g)
    a, b, c = (AdElement((i,), g.element(x)) for i, x in enumerate((u, v, w)))
    assert m.ad_mul(m.ad_mul(a, b), c) == m.ad_mul(a, m.ad_mul(b, c))


def test_section_is_multiplicative_on_reduced_products():
    """lift(x) lift(y) = lift(xy) whenever lengths add."""
    g = CoxeterGroup(catalog("B3"))
    m = AdjointModel(g)
    T = g.enumerate()
    for x in T.elements[:40]:
        for y in T.elements[:40]:
            xy = g.multiply(x, y)
            if len(xy) == len(x) + len(y):
                assert m.ad_mul(m.lift(x), m.lift(y)) == m.lift(xy)
