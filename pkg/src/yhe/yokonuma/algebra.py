"""Normal-form arithmetic in the Yokonuma-Hecke algebra Y_{r,n}(q).

Basis keys are pairs ``(k, w)`` standing for t_1^{k_1} ... t_n^{k_n} g_w, with
``k`` a tuple of exponents mod r and ``w`` the one-line images of a permutation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from gmpy2 import mpq

from .._linear import LinearCombination, add_into
from ..combinatorics import SetPartition, canonical_blocks, t_lambda
from ..scalars import Scalar, UsageError
from ..symgroup import Perm, perm_length, reduced_word_images, young_subgroup


def _inv_images(w):
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return inv


@lru_cache(maxsize=None)
def _recip(r):
    return Scalar.from_rational(r, mpq(1, r))


@lru_cache(maxsize=None)
def _qq_over_r(r):
    return (Scalar.q(r) - Scalar.q(r, -1)) * _recip(r)


@lru_cache(maxsize=None)
def _gi_right(r, key, i):
    """Right multiplication of one basis key by g_i, as ((key, coeff), ...)."""
    k, w = key
    inv = _inv_images(w)
    a, b = inv[i - 1], inv[i]  # i w^-1, (i+1) w^-1
    ws = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
    one = Scalar.one(r)
    if a < b:
        return (((k, ws), one),)
    out = {(k, ws): one}
    c = _qq_over_r(r)
    for s in range(r):
        kk = list(k)
        kk[a - 1] = (kk[a - 1] + s) % r
        kk[b - 1] = (kk[b - 1] - s) % r
        add_into(out, (tuple(kk), w), c)
    return tuple(out.items())


def _apply_t(terms: dict, kvec, r) -> dict:
    """Right multiplication by t^kvec."""
    if not any(kvec):
        return terms
    out = {}
    for (k, w), c in terms.items():
        inv = _inv_images(w)
        kk = list(k)
        for j, e in enumerate(kvec, 1):
            if e:
                p = inv[j - 1] - 1
                kk[p] = (kk[p] + e) % r
        add_into(out, (tuple(kk), w), c)
    return out


def _apply_g(terms: dict, i, r) -> dict:
    out = {}
    one = Scalar.one(r).terms
    for key, c in terms.items():
        for k2, s in _gi_right(r, key, i):
            add_into(out, k2, c if s.terms == one else c * s)
    return out


class YElement(LinearCombination):
    """An element of Y_{r,n}(q) in the basis t^k g_w."""

    __slots__ = ("_r", "n")

    def __init__(self, r: int, n: int, terms=None):
        self._r = r
        self.n = n
        self.terms = terms if terms is not None else {}

    @property
    def r(self):
        return self._r

    def _params(self):
        return (self._r, self.n)

    def _new(self, terms):
        return YElement(self._r, self.n, terms)

    def one(self):
        return y_one(self._r, self.n)

    def _rmul_basis(self, key):
        k, w = key
        terms = _apply_t(self.terms, k, self._r)
        for i in reduced_word_images(w):
            terms = _apply_g(terms, i, self._r)
        return terms

    def rmul_g(self, i):
        return YElement(self._r, self.n, _apply_g(self.terms, i, self._r))

    def rmul_gw(self, w: Perm):
        terms = self.terms
        for i in reduced_word_images(w.images):
            terms = _apply_g(terms, i, self._r)
        return YElement(self._r, self.n, terms)

    def star(self):
        return y_star(self)

    def __str__(self):
        from ..parsing import format_y

        return format_y(self)

    def __repr__(self):
        return f"YElement({self._r}, {self.n}, '{self}')"


# ---------------------------------------------------------------------------
# constructors


def _identity(n):
    return tuple(range(1, n + 1))


def y_one(r, n) -> YElement:
    return YElement(r, n, {((0,) * n, _identity(n)): Scalar.one(r)})


def y_zero(r, n) -> YElement:
    return YElement(r, n, {})


def y_scalar(r, n, c) -> YElement:
    return y_one(r, n).scale(c)


def y_t(i, r, n, power=1) -> YElement:
    if not 1 <= i <= n:
        raise UsageError(f"t_{i} out of range for n={n}")
    k = [0] * n
    k[i - 1] = power % r
    return YElement(r, n, {(tuple(k), _identity(n)): Scalar.one(r)})


def y_g(i, r, n) -> YElement:
    return y_gw(Perm.s(i, n), r, n)


def y_gw(w: Perm, r, n) -> YElement:
    if w.n != n:
        raise UsageError("permutation degree mismatch")
    return YElement(r, n, {((0,) * n, w.images): Scalar.one(r)})


def y_basis_element(k, w: Perm, r) -> YElement:
    n = w.n
    return YElement(r, n, {(tuple(x % r for x in k), w.images): Scalar.one(r)})


def y_generator(kind: str, index: int, r: int, n: int) -> YElement:
    if kind in ("t", "t_i"):
        return y_t(index, r, n)
    if kind in ("g", "g_i"):
        return y_g(index, r, n)
    raise UsageError(f"unknown generator kind {kind!r}")


def y_multiply(a: YElement, b: YElement) -> YElement:
    return a.multiply(b)


def y_e(i, j, r, n) -> YElement:
    """e_{ij} = (1/r) sum_s t_i^s t_j^{-s}."""
    if i == j:
        return y_one(r, n)
    terms = {}
    c = _recip(r)
    for s in range(r):
        k = [0] * n
        k[i - 1] = (k[i - 1] + s) % r
        k[j - 1] = (k[j - 1] - s) % r
        add_into(terms, (tuple(k), _identity(n)), c)
    return YElement(r, n, terms)


def y_ei(i, r, n) -> YElement:
    return y_e(i, i + 1, r, n)


def y_inverse_g(i, r, n) -> YElement:
    """g_i^{-1} = g_i + (q^{-1} - q) e_i."""
    return y_g(i, r, n) + y_ei(i, r, n).scale(Scalar.q(r, -1) - Scalar.q(r))


def y_inverse_gw(w: Perm, r, n) -> YElement:
    out = y_one(r, n)
    for i in reversed(w.reduced_word()):
        out = out * y_inverse_g(i, r, n)
    return out


def y_E_block(block, r, n) -> YElement:
    """E_I = product of e_{ij} over i < j in I."""
    out = y_one(r, n)
    block = sorted(block)
    for a, b in itertools.combinations(block, 2):
        out = out * y_e(a, b, r, n)
    return out


def y_E(A: SetPartition, r) -> YElement:
    n = A.n
    out = y_one(r, n)
    for blk in A.blocks:
        if len(blk) > 1:
            out = out * y_E_block(blk, r, n)
    return out


def y_u(i, k, r, n) -> YElement:
    """u_{ik} = (1/r) sum_j z^{-jk} t_i^j, the projector onto the z^k eigenspace of t_i."""
    terms = {}
    c = _recip(r)
    for j in range(r):
        kk = [0] * n
        kk[i - 1] = j
        add_into(terms, (tuple(kk), _identity(n)), c * Scalar.z(r, -j * k))
    return YElement(r, n, terms)


def y_U(shape, r) -> YElement:
    comps = shape.components if hasattr(shape, "components") else shape
    n = sum(sum(c) for c in comps)
    if len(comps) != r:
        raise UsageError(f"shape has {len(comps)} components, expected r={r}")
    out = y_one(r, n)
    tab = t_lambda(comps)
    for j, comp in enumerate(tab.components, 1):
        if comp and comp[0]:
            out = out * y_u(comp[0][0], j, r, n)
    return out


def y_x(shape, r) -> YElement:
    """x_λ = sum over the Young subgroup of q^{l(w)} g_w."""
    comps = shape.components if hasattr(shape, "components") else shape
    n = sum(sum(c) for c in comps)
    terms = {}
    zero = (0,) * n
    for w in young_subgroup(comps):
        terms[(zero, w.images)] = Scalar.q(r, w.length())
    return YElement(r, n, terms)


def y_A_lambda(shape) -> SetPartition:
    comps = shape.components if hasattr(shape, "components") else shape
    return SetPartition(canonical_blocks(t_lambda(comps).component_sets()))


def y_star(a: YElement) -> YElement:
    """The anti-automorphism fixing every g_i and t_k."""
    out = {}
    r = a.r
    for (k, w), c in a.terms.items():
        winv = tuple(_inv_images(w))
        kk = [0] * a.n
        for j, e in enumerate(k, 1):
            kk[w[j - 1] - 1] = e
        # (t^k g_w)^* = g_{w^-1} t^k = t^{k'} g_{w^-1}
        add_into(out, (tuple(kk), winv), c)
    return YElement(r, a.n, out)


def y_tilde_g(i, r, n) -> YElement:
    """Juyumaya's alternative generator g̃_i = g_i + (q - 1) e_i g_i."""
    g = y_g(i, r, n)
    return g + (y_ei(i, r, n) * g).scale(Scalar.q(r) - 1)


# ---------------------------------------------------------------------------
# idempotent coordinates: f_p = prod_j u_{j, p_j}


def position_vectors(r, n):
    return list(itertools.product(range(1, r + 1), repeat=n))


def to_idempotent_coords(x: YElement) -> dict:
    """Coordinates of x in the basis f_p g_w, keyed by (p, w)."""
    r = x.r
    out = {}
    ps = position_vectors(r, x.n)
    for (k, w), c in x.terms.items():
        for p in ps:
            e = sum(a * b for a, b in zip(k, p))
            add_into(out, (p, w), c * Scalar.z(r, e))
    return out


def idempotent_block(coord):
    """f_p g_w = g_w f_{p'}; the block of the coordinate is (p, p')."""
    p, w = coord
    pp = [0] * len(p)
    for j, x in enumerate(w):
        pp[x - 1] = p[j]
    return (p, tuple(pp))


def y_f(p, r) -> YElement:
    n = len(p)
    out = y_one(r, n)
    for j, k in enumerate(p, 1):
        out = out * y_u(j, k, r, n)
    return out


def juyumaya_basis(r, n):
    from ..symgroup import all_perms

    for w in all_perms(n):
        for k in itertools.product(range(r), repeat=n):
            yield (k, w.images)


def length_of(key):
    return perm_length(key[1])
