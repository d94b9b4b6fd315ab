"""Normal-form arithmetic in the braids-and-ties algebra E_n(q).

Basis keys are pairs ``(A, w)`` for E_A g_w, with ``A`` a canonical tuple of
blocks and ``w`` one-line images.  Coefficients are Scalars with r = 1.
"""

from __future__ import annotations

from functools import lru_cache

from .._linear import LinearCombination, add_into
from ..combinatorics import (
    SetPartition,
    act_blocks,
    canonical_blocks,
    coarsenings,
    enumerate_set_partitions,
    join_blocks,
    merge_pair,
    mobius,
)
from ..scalars import Scalar, UsageError
from ..symgroup import Perm, all_perms, reduced_word_images

R = 1  # coefficient field Q(q)


def _inv_images(w):
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return inv


def _singletons(n):
    return tuple((i,) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _qq():
    return Scalar.q(R) - Scalar.q(R, -1)


@lru_cache(maxsize=None)
def _gi_right(key, i):
    A, w = key
    inv = _inv_images(w)
    a, b = inv[i - 1], inv[i]
    ws = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
    one = Scalar.one(R)
    if a < b:
        return (((A, ws), one),)
    return (((A, ws), one), ((merge_pair(A, a, b), w), _qq()))


@lru_cache(maxsize=None)
def _E_right(key, B):
    A, w = key
    winv = Perm(w).inverse()
    return (join_blocks(A, act_blocks(B, winv)), w)


def _apply_g(terms, i):
    out = {}
    one = Scalar.one(R).terms
    for key, c in terms.items():
        for k2, s in _gi_right(key, i):
            add_into(out, k2, c if s.terms == one else c * s)
    return out


def _apply_E(terms, B):
    if all(len(b) == 1 for b in B):
        return terms
    out = {}
    for key, c in terms.items():
        add_into(out, _E_right(key, B), c)
    return out


class EtElement(LinearCombination):
    """An element of E_n(q) in the basis E_A g_w."""

    __slots__ = ("n",)

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = terms if terms is not None else {}

    @property
    def r(self):
        return R

    def _params(self):
        return (self.n,)

    def _new(self, terms):
        return EtElement(self.n, terms)

    def one(self):
        return et_one(self.n)

    def _rmul_basis(self, key):
        B, w = key
        terms = _apply_E(self.terms, B)
        for i in reduced_word_images(w):
            terms = _apply_g(terms, i)
        return terms

    def rmul_g(self, i):
        return EtElement(self.n, _apply_g(self.terms, i))

    def rmul_gw(self, w: Perm):
        terms = self.terms
        for i in reduced_word_images(w.images):
            terms = _apply_g(terms, i)
        return EtElement(self.n, terms)

    def star(self):
        return et_star(self)

    def __str__(self):
        from ..parsing import format_et

        return format_et(self)

    def __repr__(self):
        return f"EtElement({self.n}, '{self}')"


def _identity(n):
    return tuple(range(1, n + 1))


def et_one(n) -> EtElement:
    return EtElement(n, {(_singletons(n), _identity(n)): Scalar.one(R)})


def et_zero(n) -> EtElement:
    return EtElement(n, {})


def et_g(i, n) -> EtElement:
    return et_gw(Perm.s(i, n))


def et_gw(w: Perm) -> EtElement:
    return EtElement(w.n, {(_singletons(w.n), w.images): Scalar.one(R)})


def et_E(A: SetPartition) -> EtElement:
    return EtElement(A.n, {(A.blocks, _identity(A.n)): Scalar.one(R)})


def et_basis_element(A: SetPartition, w: Perm) -> EtElement:
    return EtElement(w.n, {(A.blocks, w.images): Scalar.one(R)})


def et_e(i, n) -> EtElement:
    if not 1 <= i < n:
        raise UsageError(f"e_{i} out of range for n={n}")
    return et_E(SetPartition.from_block((i, i + 1), n))


def et_e_pair(i, j, n) -> EtElement:
    return et_E(SetPartition.from_block((i, j), n))


def et_inverse_g(i, n) -> EtElement:
    return et_g(i, n) + et_e(i, n).scale(Scalar.q(R, -1) - Scalar.q(R))


def et_inverse_gw(w: Perm) -> EtElement:
    out = et_one(w.n)
    for i in reversed(w.reduced_word()):
        out = out * et_inverse_g(i, w.n)
    return out


def et_multiply(a: EtElement, b: EtElement) -> EtElement:
    return a.multiply(b)


def et_star(a: EtElement) -> EtElement:
    """(E_A g_w)^* = g_{w^-1} E_A = E_{Aw} g_{w^-1}."""
    out = {}
    for (A, w), c in a.terms.items():
        p = Perm(w)
        add_into(out, (act_blocks(A, p), p.inverse().images), c)
    return EtElement(a.n, out)


# ---------------------------------------------------------------------------
# Möbius idempotents


def et_bbE(A: SetPartition) -> EtElement:
    """𝔼_A = sum over coarsenings B of A of mu(A, B) E_B."""
    n = A.n
    terms = {}
    for B in coarsenings(A):
        m = mobius(A, B)
        if m:
            add_into(terms, (B.blocks, _identity(n)), Scalar.from_rational(R, m))
    return EtElement(n, terms)


def et_bbE_alpha(alpha, n=None) -> EtElement:
    alpha = tuple(sorted(alpha, reverse=True))
    n = sum(alpha) if n is None else n
    out = et_zero(n)
    for A in enumerate_set_partitions(n, alpha):
        out = out + et_bbE(A)
    return out


def to_moebius_coords(x: EtElement) -> dict:
    """Coordinates in the basis 𝔼_B g_w, using E_A = sum_{B ⊇ A} 𝔼_B."""
    out = {}
    for (A, w), c in x.terms.items():
        for B in coarsenings(SetPartition(A)):
            add_into(out, (B.blocks, w), c)
    return out


def from_moebius_coords(n, coords: dict) -> EtElement:
    terms = {}
    for (B, w), c in coords.items():
        SB = SetPartition(B)
        for C in coarsenings(SB):
            m = mobius(SB, C)
            if m:
                add_into(terms, (C.blocks, w), c * m)
    return EtElement(n, terms)


def moebius_block(coord):
    """𝔼_B g_w = g_w 𝔼_{Bw}: the block of the coordinate is (B, Bw)."""
    B, w = coord
    return (B, act_blocks(B, Perm(w)))


def et_decompose(x: EtElement) -> dict:
    """α -> x 𝔼_α, read off from the Möbius coordinates."""
    comps = {}
    for (B, w), c in to_moebius_coords(x).items():
        alpha = tuple(sorted((len(b) for b in B), reverse=True))
        comps.setdefault(alpha, {})[(B, w)] = c
    return {a: from_moebius_coords(x.n, cs) for a, cs in sorted(comps.items(), reverse=True)}


def et_basis_keys(n):
    for A in enumerate_set_partitions(n):
        for w in all_perms(n):
            yield (A.blocks, w.images)


def et_phi(x: EtElement, r: int):
    """The homomorphism into Y_{r,n}(q) with g_i -> g_i, e_i -> e_i."""
    from ..yokonuma.algebra import YElement, y_E, y_gw

    n = x.n
    out = YElement(r, n, {})
    cache = {}
    for (A, w), c in x.terms.items():
        if A not in cache:
            cache[A] = y_E(SetPartition(A), r)
        term = cache[A] * y_gw(Perm(w), r, n)
        coeff = _lift(c, r)
        out = out + term.scale(coeff)
    return out


def _lift(c: Scalar, r: int) -> Scalar:
    return Scalar(r, {e: Scalar.from_rational(r, v[0]).terms[0] for e, v in c.terms.items()})


def canonical(A) -> tuple:
    return canonical_blocks(A)
