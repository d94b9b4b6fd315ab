import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yhe.combinatorics import (
    EQUAL,
    GREATER,
    INCOMPARABLE,
    LambdaShape,
    MultiPartition,
    MultiTableau,
    SetPartition,
    bell,
    coarsenings,
    count_std_shape,
    dominance,
    enumerate_lambda_shapes,
    enumerate_multipartitions,
    enumerate_set_partitions,
    enumerate_std,
    enumerate_std_lambda,
    faa_di_bruno,
    hook_length_count,
    lambda_t,
    mobius,
    parse_partition,
    partitions,
    shape_above,
)
from yhe.scalars import UsageError


def tab(*rows):
    return MultiTableau((tuple(tuple(r) for r in rows),))


def brute_std_count(lam):
    """Standard tableaux of one partition by trying every filling."""
    n = sum(lam)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in lam:
            rows.append(perm[k:k + p])
            k += p
        if tab(*rows).is_standard():
            count += 1
    return count


def test_multipartition_enumeration_examples():
    assert [m.components for m in enumerate_multipartitions(1, 2)] == [((2,),), ((1, 1),)]
    assert len(enumerate_multipartitions(2, 1)) == 2
    shapes = enumerate_multipartitions(2, 2)
    assert len(shapes) == 5
    assert sum(len(enumerate_std(s)) ** 2 for s in shapes) == 8


def test_std_examples():
    assert len(enumerate_std(MultiPartition(((1, 1),)))) == 1
    assert len(enumerate_std(MultiPartition(((2, 1),)))) == 2
    assert len(enumerate_std(MultiPartition(((1,), (1,))))) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_length_against_brute_force(n):
    for lam in partitions(n):
        assert hook_length_count(lam) == len(enumerate_std(MultiPartition((lam,))))
        if n <= 5:
            assert hook_length_count(lam) == brute_std_count(lam)
    assert sum(hook_length_count(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_tableau_dominance_examples():
    a = tab((1, 3), (2, 5), (4,))
    b = tab((2, 4), (3, 5), (1,))
    c = tab((4, 5), (1, 3), (2,))
    assert dominance(a, b) == GREATER
    assert dominance(a, c) == GREATER
    assert dominance(b, c) == INCOMPARABLE
    assert dominance(a, a) == EQUAL


def test_composition_dominance():
    assert dominance((3, 3, 1), (3, 2, 2)) == GREATER
    assert dominance((3, 3, 1), (4, 1, 1, 1)) == INCOMPARABLE
    with pytest.raises(UsageError):
        dominance((1,), MultiPartition(((1,),)))


def test_tableau_dominance_is_a_strict_partial_order():
    tabs = enumerate_std(MultiPartition(((2, 1), (1,))))
    above = {(s, t) for s in tabs for t in tabs if dominance(s, t) == GREATER}
    assert all((t, t) not in above for t in tabs)
    for (a, b), (c, d) in itertools.product(above, repeat=2):
        if b == c:
            assert (a, d) in above


def test_mobius_examples():
    bottom = SetPartition.singletons(3)
    assert mobius(bottom, bottom) == 1
    assert mobius(bottom, SetPartition.whole(3)) == 2
    assert mobius(bottom, SetPartition.parse("{1,2|3}")) == -1
    assert mobius(SetPartition.whole(3), bottom) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_mobius_inversion(n):
    parts = enumerate_set_partitions(n)
    for A in parts:
        for C in parts:
            if not A.refines(C):
                continue
            total = sum(mobius(A, B) for B in parts if A.refines(B) and B.refines(C))
            assert total == (1 if A == C else 0)


def test_faa_di_bruno_examples():
    assert faa_di_bruno((2, 1)) == 3
    assert faa_di_bruno((1, 1, 1, 1)) == 1
    assert faa_di_bruno((2, 2)) == 3
    assert faa_di_bruno((1, 2, 1)) == faa_di_bruno((2, 1, 1))


@pytest.mark.parametrize("n,b", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_bell_numbers(n, b):
    assert bell(n) == b
    assert sum(faa_di_bruno(a) for a in partitions(n)) == b
    if n:
        for a in partitions(n):
            assert len(enumerate_set_partitions(n, a)) == faa_di_bruno(a)


def test_set_partition_forms():
    A = SetPartition.parse("{3,1|2,4}")
    assert A.blocks == ((1, 3), (2, 4))
    assert str(A) == "{1,3|2,4}"
    assert A.type() == (2, 2)
    with pytest.raises(UsageError):
        SetPartition(((1, 2), (2, 3)))


def test_partition_text():
    assert parse_partition("3,2,1") == (3, 2, 1)
    with pytest.raises(UsageError):
        parse_partition("1,2")
    assert str(MultiPartition.parse("(3,1|2|)")) == "(3,1|2|)"


def test_lambda_shape_examples():
    shape = LambdaShape(MultiPartition(((1,), (1,))), ((1, 1),))
    assert count_std_shape(shape) == 1
    assert len(enumerate_std_lambda(shape)) == 1
    with pytest.raises(UsageError):
        LambdaShape(MultiPartition(((2,), (1, 1))), ((1,), (1,)))


@pytest.mark.parametrize("n,total", [(1, 1), (2, 4), (3, 30), (4, 360), (5, 6240)])
def test_cardinality_identity(n, total):
    shapes = enumerate_lambda_shapes(n)
    assert sum(count_std_shape(s) ** 2 for s in shapes) == total == bell(n) * factorial(n)
    assert all(count_std_shape(s) == len(enumerate_std_lambda(s)) for s in shapes)
    for a in partitions(n):
        sub = enumerate_lambda_shapes(n, a)
        assert sum(count_std_shape(s) ** 2 for s in sub) == faa_di_bruno(a) * factorial(n)


def test_lambda_tableaux_are_standard_and_distinct():
    for shape in enumerate_lambda_shapes(4):
        tabs = enumerate_std_lambda(shape)
        assert len(set(tabs)) == len(tabs)
        assert all(t.is_standard() for t in tabs)
        assert lambda_t(shape) in tabs


def test_shape_order_example():
    # increasing components need (3,2,2) < (4,1,1,1) < (3,3,1); ours orders by size then
    # lexicographically, which puts (3,2,2) < (3,3,1) < (4,1,1,1), so use the order-free part:
    # a shape with the same λ and a more dominant μ sits above
    lam = MultiPartition(((1,), (1,), (1,)))
    hi = LambdaShape(lam, ((3,),))
    lo = LambdaShape(lam, ((2, 1),))
    assert shape_above(hi, lo) and not shape_above(lo, hi)


def test_shape_order_is_strict():
    shapes = enumerate_lambda_shapes(4)
    for a in shapes:
        assert not shape_above(a, a)
        for b in shapes:
            if shape_above(a, b):
                assert not shape_above(b, a)
                for c in shapes:
                    if shape_above(b, c):
                        assert shape_above(a, c)


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(enumerate_set_partitions(n))))
def test_coarsenings_are_above(A):
    for B in coarsenings(A):
        assert A.refines(B)
    assert len(coarsenings(A)) == bell(len(A))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_set_partitions(n)), st.permutations(list(range(1, n + 1))))))
def test_set_partition_action_preserves_type(pair):
    from yhe.symgroup import Perm

    A, w = pair
    w = Perm(w)
    assert A.act(w).type() == A.type()
    assert A.act(w).act(w.inverse()) == A
