import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import y_elements

from yhe.combinatorics import MultiPartition, SetPartition, enumerate_multipartitions, t_lambda
from yhe.parsing import parse_y
from yhe.scalars import Scalar
from yhe.symgroup import Perm, young_subgroup
from yhe.verify import Config, run_suite
from yhe.yokonuma.algebra import (
    YElement,
    juyumaya_basis,
    y_basis_element,
    y_E,
    y_e,
    y_ei,
    y_g,
    y_gw,
    y_inverse_g,
    y_inverse_gw,
    y_one,
    y_star,
    y_t,
    y_u,
    y_x,
)
from yhe.yokonuma.cellular import (
    YCellularBasis,
    cellular_basis_cached,
    y_jm,
    y_jm_prime,
    y_m_lambda,
)


def Y(text, r=2, n=2):
    return parse_y(text, r, n)


def test_quadratic_relation():
    r, n = 3, 2
    g = y_g(1, r, n)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    expected = y_one(r, n) + (y_ei(1, r, n) * g).scale(qq)
    assert g * g == expected
    # explicit form: (1/r) sum_s t1^s t2^-s g1
    e1 = YElement(r, n, {})
    for s in range(r):
        e1 = e1 + y_t(1, r, n, s) * y_t(2, r, n, -s)
    assert expected == y_one(r, n) + (e1 * g).scale(qq * Scalar.monomial(r, Fraction(1, r), 0, 0))


def test_t_moves_through_g():
    for r in (2, 3):
        assert y_g(1, r, 3) * y_t(1, r, 3) == y_t(2, r, 3) * y_g(1, r, 3)
        assert y_g(1, r, 3) * y_t(3, r, 3) == y_t(3, r, 3) * y_g(1, r, 3)


def test_inverse():
    for r in (1, 2, 3):
        g, gi = y_g(1, r, 2), y_inverse_g(1, r, 2)
        assert gi * g == y_one(r, 2) == g * gi
    w = Perm([3, 1, 2])
    assert y_gw(w, 2, 3) * y_inverse_gw(w, 2, 3) == y_one(2, 3)


def test_star_examples():
    r, n = 2, 3
    assert y_star(y_g(1, r, n) * y_g(2, r, n)) == y_g(2, r, n) * y_g(1, r, n)
    assert y_star(y_t(1, r, n)) == y_t(1, r, n)


def test_idempotent_examples():
    r, n = 3, 3
    assert y_E(SetPartition.singletons(3), r) == y_one(r, n)
    assert y_u(1, 0, r, n) * y_u(1, 1, r, n) == YElement(r, n, {})
    assert y_u(1, 1, r, n) * y_u(1, 1, r, n) == y_u(1, 1, r, n)
    total = YElement(r, n, {})
    for k in range(r):
        total = total + y_u(1, k, r, n)
    assert total == y_one(r, n)
    assert y_x(MultiPartition(((1,), (1,), (1,))), r) == y_one(r, n)
    e12 = y_e(1, 2, r, n)
    assert e12 * e12 == e12
    assert y_E(SetPartition.whole(3), r) == e12 * y_e(2, 3, r, n)


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3), (3, 2)])
def test_m_lambda_eigen_relations(r, n):
    for shape in enumerate_multipartitions(r, n):
        m = y_m_lambda(shape, r)
        tl = t_lambda(shape)
        for i in range(1, n + 1):
            ti = y_t(i, r, n)
            expect = m.scale(Scalar.z(r, tl.position(i)))
            assert ti * m == expect == m * ti
        for w in young_subgroup(shape.components):
            gw = y_gw(w, r, n)
            assert m * gw == m.scale(Scalar.q(r, w.length())) == gw * m


@pytest.mark.parametrize("r,n,size", [(1, 2, 2), (2, 2, 8), (2, 3, 48), (3, 2, 18)])
def test_cellular_basis_counts(r, n, size):
    assert len(YCellularBasis(r, n)) == size


def test_express_examples():
    r, n = 2, 2
    basis = cellular_basis_cached(r, n)
    shape, s, t, m = basis.entries[3]
    assert basis.express(m) == {3: Scalar.one(r)}
    ones = basis.one_column()
    expect = {basis.index[(a, a)]: Scalar.one(r) for a in ones}
    assert basis.express(y_one(r, n)) == expect
    for i in (1, 2):
        coeffs = basis.express(y_t(i, r, n))
        assert coeffs == {basis.index[(a, a)]: Scalar.z(r, a.position(i)) for a in ones}


def test_jm_examples():
    r, n = 2, 3
    assert y_jm(1, r, n) == y_one(r, n)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    g = y_g(1, r, n)
    assert y_jm(2, r, n) == g * g == y_one(r, n) + (y_ei(1, r, n) * g).scale(qq)
    assert y_jm_prime(1, r, n) == YElement(r, n, {})
    for k in (1, 2, 3):
        assert y_jm(k, r, n) == y_one(r, n) + y_jm_prime(k, r, n).scale(Scalar.q(r, 2) - 1)


def test_jm_content_example():
    m = y_m_lambda(MultiPartition(((2,),)), 1)
    assert m * y_jm(2, 1, 2) == m.scale(Scalar.q(1, 2))


def test_parsed_forms_agree():
    assert Y("g1*g1", 2, 2) == y_g(1, 2, 2) * y_g(1, 2, 2)
    assert Y("g1^-1", 2, 2) == y_inverse_g(1, 2, 2)
    assert Y("e[1,3]", 2, 3) == y_e(1, 3, 2, 3)
    assert Y("E{1,2|3}", 2, 3) == y_e(1, 2, 2, 3)


@pytest.mark.parametrize("suite", ["relations-y", "lusztig", "jm", "cellular-y"])
def test_small_suites(suite):
    checks = run_suite(suite, Config(r=2, n=2))
    assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]


def test_juyumaya_basis_size():
    assert len(list(juyumaya_basis(3, 3))) == 27 * 6


@given(st.data())
def test_associativity(data):
    r, n = data.draw(st.sampled_from([(1, 3), (2, 2), (2, 3), (3, 2)]))
    a, b, c = (data.draw(y_elements(r, n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@given(st.data())
def test_star_is_an_involutive_antiautomorphism(data):
    r, n = data.draw(st.sampled_from([(2, 2), (2, 3), (3, 3)]))
    a, b = data.draw(y_elements(r, n)), data.draw(y_elements(r, n))
    assert y_star(y_star(a)) == a
    assert y_star(a * b) == y_star(b) * y_star(a)


@given(st.data())
def test_one_is_neutral(data):
    x = data.draw(y_elements(2, 3))
    assert x * y_one(2, 3) == x == y_one(2, 3) * x


@given(st.data())
def test_express_reassembles(data):
    x = data.draw(y_elements(2, 2))
    basis = cellular_basis_cached(2, 2)
    assert basis.reassemble(basis.express(x)) == x


def test_m_st_star():
    basis = cellular_basis_cached(2, 3)
    for shape, s, t, m in itertools.islice(basis.entries, 0, None, 5):
        assert y_star(m) == basis.element(t, s)


def test_basis_element_constructor():
    x = y_basis_element((1, 0), Perm([2, 1]), 2)
    assert x == y_t(1, 2, 2) * y_g(1, 2, 2)
