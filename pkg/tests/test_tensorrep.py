from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import y_elements

from yhe.braidsties.algebra import et_E, et_e, et_g, et_one, et_phi
from yhe.combinatorics import SetPartition
from yhe.scalars import Scalar
from yhe.tensorrep import (
    OpMatrix,
    TensorIndex,
    faithfulness_rank,
    mak_F_polys,
    op_E,
    op_G,
    op_H,
    op_T,
    rho,
    structure_dim_identity,
    vandermonde_data,
    verify_mak,
    verify_phi_embedding,
    verify_shoji_identity,
    verify_V_A,
)
from yhe.yokonuma.algebra import y_E, y_ei, y_g, y_one, y_t
from yhe.yokonuma.cellular import BudgetExceeded


def vec(ti, lower, upper):
    return {ti.encode(lower, upper): Scalar.one(ti.r)}


def test_index_round_trip():
    ti = TensorIndex(2, 3)
    assert ti.dim == 216
    for idx in (0, 17, 215):
        assert ti.encode(*ti.decode(idx)) == idx


def test_operator_examples():
    r, n = 3, 2
    ti = TensorIndex(r, n)
    G, E = op_G(1, r, n), op_E(1, r, n)
    one = Scalar.one(r)
    # different upper indices: plain swap, and E kills
    assert G.apply(vec(ti, (1, 2), (0, 1))) == vec(ti, (2, 1), (1, 0))
    assert E.apply(vec(ti, (1, 2), (0, 1))) == {}
    # equal vectors: q
    assert G.apply(vec(ti, (2, 2), (1, 1))) == {ti.encode((2, 2), (1, 1)): Scalar.q(r)}
    # i < j with equal upper index
    got = G.apply(vec(ti, (1, 2), (2, 2)))
    assert got == {ti.encode((1, 2), (2, 2)): Scalar.q(r) - Scalar.q(r, -1), ti.encode((2, 1), (2, 2)): one}
    T = op_T(2, r, n)
    assert T.apply(vec(ti, (1, 1), (0, 2))) == {ti.encode((1, 1), (0, 2)): Scalar.z(r, 2)}


def test_H_swaps_downward():
    r, n = 2, 2
    ti = TensorIndex(r, n)
    H = op_H(2, r, n)
    # v_2^1 comes after v_1^1 in the total order
    assert H.apply(vec(ti, (2, 1), (1, 1))) == vec(ti, (1, 2), (1, 1))


@pytest.mark.parametrize("r,n", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_rho_generator_identities(r, n):
    dim = (r * n) ** n
    I = OpMatrix.identity(r, dim)
    assert rho(y_one(r, n)) == I
    qq = Scalar.q(r) - Scalar.q(r, -1)
    for i in range(1, n):
        E, G = rho(y_ei(i, r, n)), rho(y_g(i, r, n))
        assert E == op_E(i, r, n)
        assert E @ E == E
        assert (G @ G) - I - (E @ G).scale(qq) == OpMatrix.zero(r, dim)
        expect = OpMatrix.zero(r, dim)
        for m in range(r):
            expect = expect + (op_T(i, r, n, m) @ op_T(i + 1, r, n, -m))
        assert expect.scale(Scalar.monomial(r, Fraction(1, r), 0, 0)) == E


@pytest.mark.parametrize("r,n,rank", [(1, 2, 2), (2, 2, 8), (3, 2, 18)])
def test_faithfulness_small(r, n, rank):
    assert faithfulness_rank(r, n) == rank


def test_faithfulness_budget():
    with pytest.raises(BudgetExceeded):
        faithfulness_rank(2, 3, budget=10)


@pytest.mark.parametrize("r,n,pair", [(2, 1, (2, 2)), (2, 2, (8, 8)), (1, 4, (24, 24)), (3, 4, (1944, 1944))])
def test_structure_identity(r, n, pair):
    assert structure_dim_identity(r, n) == pair


def test_F_for_r_one():
    assert [[c == 1 for c in row] for row in mak_F_polys(1)] == [[True]]
    delta, _ = vandermonde_data(2)
    assert delta * delta == 4


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_mak_checks(r):
    assert all(ok for _, ok, _ in verify_mak(r, 2))


@pytest.mark.parametrize("r,n", [(1, 2), (1, 3), (2, 2), (3, 2)])
def test_shoji_identity(r, n):
    checks = list(verify_shoji_identity(r, n))
    assert checks and all(ok for _, ok, _ in checks), [c for c in checks if not c[1]]


def test_r_one_reduces_to_jimbo():
    assert op_G(1, 1, 3) == op_H(2, 1, 3)
    assert op_G(2, 1, 3) == op_H(3, 1, 3)


@pytest.mark.parametrize("n", [2, 3])
def test_V_A_subspaces(n):
    assert all(ok for _, ok, _ in verify_V_A(n))


def test_phi_embedding():
    assert verify_phi_embedding(1, 1) == (1, 1)
    assert verify_phi_embedding(2, 2) == (4, 4)
    with pytest.raises(Exception):
        verify_phi_embedding(1, 2)


def test_phi_examples():
    r = 3
    assert et_phi(et_one(3), r) == y_one(r, 3)
    assert et_phi(et_e(1, 3), r) == y_ei(1, r, 3)
    assert et_phi(et_E(SetPartition.whole(3)), r) == y_E(SetPartition.whole(3), r)
    assert et_phi(et_g(2, 3), r) == y_g(2, r, 3)


@settings(max_examples=15)
@given(st.data())
def test_rho_is_multiplicative(data):
    r, n = data.draw(st.sampled_from([(2, 2), (3, 2), (1, 3)]))
    a, b = data.draw(y_elements(r, n)), data.draw(y_elements(r, n))
    assert rho(a * b) == rho(a) @ rho(b)


def test_rho_commutes_t_with_E():
    r, n = 2, 3
    t, E = rho(y_t(1, r, n)), rho(y_ei(2, r, n))
    assert t @ E == E @ t


def test_export_forms():
    m = op_G(1, 1, 2)
    assert m.to_csv().splitlines()[0] == "row,col,value"
    assert '"dim": 4' in m.to_json()
