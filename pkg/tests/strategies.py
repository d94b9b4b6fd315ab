"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from yhe.braidsties.algebra import EtElement
from yhe.combinatorics import enumerate_set_partitions
from yhe.scalars import Scalar
from yhe.symgroup import Perm, all_perms
from yhe.yokonuma.algebra import YElement

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def scalars(draw, r=None, max_terms=3):
    r = r if r is not None else draw(st.sampled_from([1, 2, 3, 4]))
    out = Scalar.zero(r)
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
        out = out + Scalar.monomial(r, c, draw(small_ints), draw(st.integers(0, r - 1)))
    return out


@st.composite
def perms(draw, n):
    return draw(st.sampled_from(all_perms(n)))


@st.composite
def y_elements(draw, r, n, max_terms=3):
    terms = {}
    ws = all_perms(n)
    for _ in range(draw(st.integers(0, max_terms))):
        k = tuple(draw(st.integers(0, r - 1)) for _ in range(n))
        w = draw(st.sampled_from(ws))
        c = Scalar.monomial(r, draw(st.integers(-2, 2)), draw(st.integers(-1, 1)), draw(st.integers(0, r - 1)))
        terms[(k, w.images)] = c
    return YElement(r, n, {k: v for k, v in terms.items() if v})


@st.composite
def et_elements(draw, n, max_terms=3):
    terms = {}
    parts = enumerate_set_partitions(n)
    ws = all_perms(n)
    for _ in range(draw(st.integers(0, max_terms))):
        A = draw(st.sampled_from(parts))
        w = draw(st.sampled_from(ws))
        c = Scalar.monomial(1, draw(st.integers(-2, 2)), draw(st.integers(-1, 1)))
        terms[(A.blocks, w.images)] = c
    return EtElement(n, {k: v for k, v in terms.items() if v})


def perm_of(n):
    return st.permutations(list(range(1, n + 1))).map(Perm)
