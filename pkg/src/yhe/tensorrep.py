"""The tensor space module V^{⊗n} of Y_{r,n}(q) and the modified Ariki-Koike operators.

V has basis v_i^t (1 <= i <= n, 0 <= t < r).  A factor is encoded as
``(i - 1) * r + t`` and a tensor index as the base-(rn) number whose most
significant digit is the first factor.  Operators act on row vectors:
``v (A B) = (v A) B``, so ``A @ B`` means "apply A, then B".
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from functools import lru_cache

from gmpy2 import mpq

from ._linear import add_into
from .combinatorics import SetPartition, compositions, enumerate_set_partitions, multinomial
from .linalg import SparseEchelon
from .scalars import Cyclo, Scalar, UsageError
from .symgroup import Perm, reduced_word_images

ENUMERATION = "factor=(lower-1)*r+upper; index=sum factor_k*(r*n)^(n-k), first factor most significant"


class TensorIndex:
    """Conversion between flat indices and (lower, upper) vectors."""

    def __init__(self, r, n):
        self.r, self.n = r, n
        self.base = r * n
        self.dim = self.base ** n

    def encode(self, lower, upper) -> int:
        idx = 0
        for i, t in zip(lower, upper):
            if not (1 <= i <= self.n and 0 <= t < self.r):
                raise UsageError(f"bad tensor factor v_{i}^{t}")
            idx = idx * self.base + (i - 1) * self.r + t
        return idx

    def factors(self, idx) -> list:
        out = []
        for _ in range(self.n):
            idx, f = divmod(idx, self.base)
            out.append(f)
        return out[::-1]

    def decode(self, idx):
        fs = self.factors(idx)
        return tuple(f // self.r + 1 for f in fs), tuple(f % self.r for f in fs)

    def from_factors(self, fs) -> int:
        idx = 0
        for f in fs:
            idx = idx * self.base + f
        return idx


class OpMatrix:
    """A sparse square matrix over Scalar; ``rows[i]`` is the image of basis vector i."""

    __slots__ = ("r", "dim", "rows")

    def __init__(self, r, dim, rows=None):
        self.r, self.dim = r, dim
        self.rows = {i: row for i, row in (rows or {}).items() if row}

    @classmethod
    def identity(cls, r, dim):
        one = Scalar.one(r)
        return cls(r, dim, {i: {i: one} for i in range(dim)})

    @classmethod
    def zero(cls, r, dim):
        return cls(r, dim, {})

    def apply(self, vec: dict) -> dict:
        out = {}
        for i, c in vec.items():
            for j, v in self.rows.get(i, {}).items():
                add_into(out, j, c * v)
        return out

    def __matmul__(self, other: "OpMatrix") -> "OpMatrix":
        self._check(other)
        return OpMatrix(self.r, self.dim, {i: other.apply(row) for i, row in self.rows.items()})

    def __add__(self, other):
        self._check(other)
        rows = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            acc = rows.setdefault(i, {})
            for j, v in row.items():
                add_into(acc, j, v)
        return OpMatrix(self.r, self.dim, rows)

    def __neg__(self):
        return self.scale(Scalar.from_rational(self.r, -1))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OpMatrix":
        if not isinstance(c, Scalar):
            c = Scalar.constant(c) if isinstance(c, Cyclo) else Scalar.from_rational(self.r, c)
        if not c:
            return OpMatrix.zero(self.r, self.dim)
        return OpMatrix(self.r, self.dim, {i: {j: v * c for j, v in row.items()} for i, row in self.rows.items()})

    def __pow__(self, k):
        out = OpMatrix.identity(self.r, self.dim)
        for _ in range(k):
            out = out @ self
        return out

    def _check(self, other):
        if not isinstance(other, OpMatrix) or (other.r, other.dim) != (self.r, self.dim):
            raise UsageError("incompatible operators")

    def __eq__(self, other):
        return isinstance(other, OpMatrix) and (self.r, self.dim) == (other.r, other.dim) and self.rows == other.rows

    def __hash__(self):
        return hash((self.r, self.dim, len(self.rows)))

    def is_zero(self):
        return not self.rows

    def entry(self, i, j) -> Scalar:
        return self.rows.get(i, {}).get(j, Scalar.zero(self.r))

    def nnz(self):
        return sum(len(row) for row in self.rows.values())

    def flatten(self) -> dict:
        return {(i, j): v for i, row in self.rows.items() for j, v in row.items()}

    def triplets(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, str(row[j])

    def to_json(self, header=None) -> str:
        doc = {"dim": self.dim, "enumeration": ENUMERATION}
        doc.update(header or {})
        doc["entries"] = [[i, j, s] for i, j, s in self.triplets()]
        return json.dumps(doc)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col", "value"])
        w.writerows(self.triplets())
        return buf.getvalue()


# ---------------------------------------------------------------------------
# the operators T_i, G_i, E_i, H_i


def _from_rule(r, n, rule) -> OpMatrix:
    ti = TensorIndex(r, n)
    rows = {}
    for idx in range(ti.dim):
        row = {}
        for fs, c in rule(ti.factors(idx)):
            add_into(row, ti.from_factors(fs), c)
        rows[idx] = row
    return OpMatrix(r, ti.dim, rows)


def _check_pos(i, lo, hi, what):
    if not lo <= i <= hi:
        raise UsageError(f"{what}_{i} out of range")


@lru_cache(maxsize=None)
def op_T(i, r, n, power=1) -> OpMatrix:
    """v_i^t -> ξ^t v_i^t on factor i."""
    _check_pos(i, 1, n, "T")

    def rule(fs):
        return [(fs, Scalar.z(r, power * (fs[i - 1] % r)))]

    return _from_rule(r, n, rule)


def _swap(fs, a, b):
    out = list(fs)
    out[a], out[b] = out[b], out[a]
    return out


@lru_cache(maxsize=None)
def op_G(i, r, n) -> OpMatrix:
    _check_pos(i, 1, n - 1, "G")
    q, qq, one = Scalar.q(r), Scalar.q(r) - Scalar.q(r, -1), Scalar.one(r)

    def rule(fs):
        (a, t), (b, s) = divmod(fs[i - 1], r), divmod(fs[i], r)
        swapped = _swap(fs, i - 1, i)
        if t != s or a > b:
            return [(swapped, one)]
        if a == b:
            return [(fs, q)]
        return [(fs, qq), (swapped, one)]

    return _from_rule(r, n, rule)


@lru_cache(maxsize=None)
def op_E(i, r, n) -> OpMatrix:
    """The projection onto equal upper indices in factors i, i+1."""
    _check_pos(i, 1, n - 1, "E")
    one = Scalar.one(r)

    def rule(fs):
        return [(fs, one)] if fs[i - 1] % r == fs[i] % r else []

    return _from_rule(r, n, rule)


def total_order(a, t, r, n) -> int:
    """Position of v_a^t in v_1^1..v_n^1, v_1^2, .., v_n^r, where upper index 0 plays ξ^r."""
    c = t if t >= 1 else r
    return (c - 1) * n + a


@lru_cache(maxsize=None)
def op_H(i, r, n) -> OpMatrix:
    """Jimbo's operator on factors (i-1, i), for 2 <= i <= n."""
    _check_pos(i, 2, n, "H")
    q, qq, one = Scalar.q(r), Scalar.q(r) - Scalar.q(r, -1), Scalar.one(r)

    def rule(fs):
        x = total_order(*divmod(fs[i - 2], r), r, n)
        y = total_order(*divmod(fs[i - 1], r), r, n)
        swapped = _swap(fs, i - 2, i - 1)
        if x == y:
            return [(fs, q)]
        if x > y:
            return [(swapped, one)]
        return [(fs, qq), (swapped, one)]

    return _from_rule(r, n, rule)


# ---------------------------------------------------------------------------
# the representation of Y_{r,n}(q)


def _generator_op(kind, i, r, n):
    return op_T(i, r, n) if kind == "t" else op_G(i, r, n)


@lru_cache(maxsize=None)
def _rho_key(r, n, key) -> OpMatrix:
    k, w = key
    ti = TensorIndex(r, n)
    out = OpMatrix.identity(r, ti.dim)
    for j, e in enumerate(k, 1):
        if e:
            out = out @ op_T(j, r, n, e)
    for i in reduced_word_images(w):
        out = out @ op_G(i, r, n)
    return out


def rho(x) -> OpMatrix:
    """The operator of a YElement acting on V^{⊗n}."""
    r, n = x.r, x.n
    out = OpMatrix.zero(r, (r * n) ** n)
    for key, c in x.terms.items():
        out = out + _rho_key(r, n, key).scale(c)
    return out


def _budget(dim, budget):
    from .yokonuma.cellular import budget_check

    budget_check(dim, budget, "V^⊗n")


def faithfulness_rank(r, n, budget=10_000) -> int:
    """Rank of the flattened ρ(t^k g_w) over all Juyumaya basis elements."""
    from .yokonuma.algebra import juyumaya_basis

    _budget((r * n) ** n, budget)
    ech = SparseEchelon()
    for key in juyumaya_basis(r, n):
        ech.add(_rho_key(r, n, key).flatten())
    return ech.rank


# ---------------------------------------------------------------------------
# Vandermonde data and the polynomials F_c


def _det(mat):
    """Determinant over Q(zeta_r) by elimination."""
    m = [list(row) for row in mat]
    size = len(m)
    if size == 0:
        return None
    r = m[0][0].r
    det = Cyclo.rational(r, 1)
    for c in range(size):
        piv = next((i for i in range(c, size) if not m[i][c].is_zero()), None)
        if piv is None:
            return Cyclo.rational(r, 0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, size):
            f = m[i][c] * inv
            if not f.is_zero():
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def vandermonde(r):
    """A_{ij} = ξ^{j(i-1)}."""
    return [[Cyclo.z_power(r, j * (i - 1)) for j in range(1, r + 1)] for i in range(1, r + 1)]


def adjugate(mat):
    size = len(mat)
    r = mat[0][0].r
    if size == 1:
        return [[Cyclo.rational(r, 1)]]
    out = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(mat) if k != j]
            d = _det(minor)
            out[i][j] = d if (i + j) % 2 == 0 else -d
    return out


@lru_cache(maxsize=None)
def vandermonde_data(r):
    """(Δ, B) with Δ = det A and B the adjugate, so that B A = Δ I."""
    A = vandermonde(r)
    return _det(A), adjugate(A)


def mak_F_polys(r) -> list:
    """F_c(X) = sum_j h_{cj} X^{j-1}, returned as coefficient lists [h_c1, .., h_cr]."""
    _, B = vandermonde_data(r)
    return [list(row) for row in B]


def evaluate_F(c, X: OpMatrix, r) -> OpMatrix:
    coeffs = mak_F_polys(r)[c - 1]
    out = OpMatrix.zero(X.r, X.dim)
    power = OpMatrix.identity(X.r, X.dim)
    for h in coeffs:
        if not h.is_zero():
            out = out + power.scale(h)
        power = power @ X
    return out


def verify_adjugate(r):
    """Yield the entries of B A - Δ I."""
    delta, B = vandermonde_data(r)
    A = vandermonde(r)
    for i in range(r):
        for j in range(r):
            acc = Cyclo.rational(r, 0)
            for k in range(r):
                acc = acc + B[i][k] * A[k][j]
            expect = delta if i == j else Cyclo.rational(r, 0)
            yield f"adjugate r={r} ({i + 1},{j + 1})", acc == expect, ""


def _correction(i, r, n) -> OpMatrix:
    """Δ^{-2} sum_{c1<c2} F_{c1}(T_{i-1}) F_{c2}(T_i)."""
    delta, _ = vandermonde_data(r)
    dim = (r * n) ** n
    acc = OpMatrix.zero(r, dim)
    Ta, Tb = op_T(i - 1, r, n), op_T(i, r, n)
    Fa = [evaluate_F(c, Ta, r) for c in range(1, r + 1)]
    Fb = [evaluate_F(c, Tb, r) for c in range(1, r + 1)]
    for c1, c2 in itertools.combinations(range(r), 2):
        acc = acc + Fa[c1] @ Fb[c2]
    return acc.scale(Scalar.constant((delta * delta).inverse()))


def _weighted_correction(j, r, n) -> OpMatrix:
    """Δ^{-2} sum_{c1<c2} (ξ^{c2} - ξ^{c1})(q - q^{-1}) F_{c1}(ω_{j-1}) F_{c2}(ω_j)."""
    delta, _ = vandermonde_data(r)
    dim = (r * n) ** n
    acc = OpMatrix.zero(r, dim)
    Ta, Tb = op_T(j - 1, r, n), op_T(j, r, n)
    Fa = [evaluate_F(c, Ta, r) for c in range(1, r + 1)]
    Fb = [evaluate_F(c, Tb, r) for c in range(1, r + 1)]
    for c1, c2 in itertools.combinations(range(1, r + 1), 2):
        w = Cyclo.z_power(r, c2) - Cyclo.z_power(r, c1)
        acc = acc + (Fa[c1 - 1] @ Fb[c2 - 1]).scale(w)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    return acc.scale(qq * Scalar.constant((delta * delta).inverse()))


def verify_shoji_identity(r, n):
    """Yield (label, ok, witness) for the G/H identity and relations z1-z8."""
    dim = (r * n) ** n
    I = OpMatrix.identity(r, dim)
    q, qi = Scalar.q(r), Scalar.q(r, -1)
    qq = q - qi
    H = {j: op_H(j, r, n) for j in range(2, n + 1)}
    T = {j: op_T(j, r, n) for j in range(1, n + 1)}
    for i in range(2, n + 1):
        ok = op_G(i - 1, r, n) == H[i] - _correction(i, r, n).scale(qq)
        yield f"identity G{i - 1} = H{i} - correction", ok, ""
    for j in H:
        yield f"z1 H{j}", ((H[j] - I.scale(q)) @ (H[j] + I.scale(qi))).is_zero(), ""
    for a, b in itertools.combinations(H, 2):
        if b - a > 1:
            yield f"z2 H{a} H{b}", H[a] @ H[b] == H[b] @ H[a], ""
    for j in range(2, n):
        yield f"z3 braid H{j} H{j + 1}", H[j] @ H[j + 1] @ H[j] == H[j + 1] @ H[j] @ H[j + 1], ""
    for j in T:
        prod = I
        for c in range(1, r + 1):
            prod = prod @ (T[j] - I.scale(Scalar.z(r, c)))
        yield f"z4 T{j}", prod.is_zero(), ""
    for a, b in itertools.combinations(T, 2):
        yield f"z5 T{a} T{b}", T[a] @ T[b] == T[b] @ T[a], ""
    for j in H:
        corr = _weighted_correction(j, r, n)
        yield f"z6 H{j} T{j}", H[j] @ T[j] == T[j - 1] @ H[j] + corr, ""
        yield f"z7 H{j} T{j - 1}", H[j] @ T[j - 1] == T[j] @ H[j] - corr, ""
        for l in T:
            if l not in (j, j - 1):
                yield f"z8 H{j} T{l}", H[j] @ T[l] == T[l] @ H[j], ""


def verify_mak(r, n):
    """The adjugate identity, F_c(ξ^j) = Δ δ_cj, and the case analysis of H."""
    yield from verify_adjugate(r)
    delta, _ = vandermonde_data(r)
    polys = mak_F_polys(r)
    for c, j in itertools.product(range(1, r + 1), repeat=2):
        val = Cyclo.rational(r, 0)
        for e, h in enumerate(polys[c - 1]):
            val = val + h * Cyclo.z_power(r, j * e)
        expect = delta if c == j else Cyclo.rational(r, 0)
        yield f"F{c}(ξ^{j})", val == expect, ""
    if n >= 2:
        ti = TensorIndex(r, n)
        one = Scalar.one(r)
        for idx in range(ti.dim):
            fs = ti.factors(idx)
            x = total_order(*divmod(fs[0], r), r, n)
            y = total_order(*divmod(fs[1], r), r, n)
            if x > y:
                row = op_H(2, r, n).rows.get(idx, {})
                ok = row == {ti.from_factors(_swap(fs, 0, 1)): one}
                if not ok:
                    yield f"H swap on index {idx}", False, str(row)
                    return
        yield "H swaps v_i⊗v_j for i>j", True, ""


def verify_tensor_rep(r, n, pairs=200, seed=0):
    """Relations r1-r6 as operator identities, E_i as an average of T-products, and random multiplicativity."""
    import random

    from .yokonuma.algebra import juyumaya_basis, y_ei, y_g, y_one, y_t

    dim = (r * n) ** n
    I = OpMatrix.identity(r, dim)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    G = {i: op_G(i, r, n) for i in range(1, n)}
    T = {j: op_T(j, r, n) for j in range(1, n + 1)}
    E = {i: op_E(i, r, n) for i in range(1, n)}
    yield "rho(1) = I", rho(y_one(r, n)) == I, ""
    for i in G:
        avg = OpMatrix.zero(r, dim)
        for m in range(r):
            avg = avg + op_T(i, r, n, m) @ op_T(i + 1, r, n, -m % r)
        yield f"E{i} = average of T powers", avg.scale(mpq(1, r)) == E[i], ""
        yield f"rho(e{i}) = E{i}", rho(y_ei(i, r, n)) == E[i], ""
        yield f"E{i}^2 = E{i}", E[i] @ E[i] == E[i], ""
        yield f"G{i}^2 = 1 + (q-q^-1) E{i} G{i}", G[i] @ G[i] == I + (E[i] @ G[i]).scale(qq), ""
        yield f"rho(g{i}) = G{i}", rho(y_g(i, r, n)) == G[i], ""
    for i, j in itertools.combinations(G, 2):
        if j - i > 1:
            yield f"G{i} G{j} commute", G[i] @ G[j] == G[j] @ G[i], ""
        if j == i + 1:
            yield f"braid G{i} G{j}", G[i] @ G[j] @ G[i] == G[j] @ G[i] @ G[j], ""
    for j in T:
        yield f"T{j}^r = 1", T[j] ** r == I, ""
        yield f"rho(t{j}) = T{j}", rho(y_t(j, r, n)) == T[j], ""
    for a, b in itertools.combinations(T, 2):
        yield f"T{a} T{b} commute", T[a] @ T[b] == T[b] @ T[a], ""
    for i in G:
        for j in T:
            k = i + 1 if j == i else i if j == i + 1 else j
            yield f"G{i} T{j} = T{k} G{i}", G[i] @ T[j] == T[k] @ G[i], ""
    rng = random.Random(seed)
    keys = list(juyumaya_basis(r, n))
    bad = None
    for m in range(pairs):
        x = _random_y(rng, keys, r, n)
        y = _random_y(rng, keys, r, n)
        if rho(x * y) != rho(x) @ rho(y):
            bad = f"pair {m}: x={x}, y={y}"
            break
    yield f"rho multiplicative on {pairs} random pairs", bad is None, bad or ""


def _random_y(rng, keys, r, n):
    from .yokonuma.algebra import YElement

    terms = {}
    for key in rng.sample(keys, min(3, len(keys))):
        c = Scalar.monomial(r, rng.choice([1, -1, 2]), rng.randint(-1, 1), rng.randrange(r))
        add_into(terms, key, c)
    return YElement(r, n, terms)


# ---------------------------------------------------------------------------
# structure theorem and the embedding of E_n(q)


def structure_dim_identity(r, n):
    """(sum over compositions μ of n with r parts of p_μ^2 prod μ_i!, r^n n!)."""
    from math import factorial, prod

    total = 0
    for mu in compositions(n, r):
        total += multinomial(n, mu) ** 2 * prod(factorial(m) for m in mu)
    return total, r ** n * factorial(n)


def verify_phi_embedding(r, n, budget=10_000):
    """Rank of φ(E_A g_w) in the Juyumaya basis; returns (rank, expected)."""
    from math import factorial

    from .braidsties.algebra import et_basis_element, et_phi
    from .combinatorics import bell

    if r < n:
        raise UsageError("the embedding check needs r >= n")
    from .yokonuma.cellular import budget_check

    budget_check(r ** n * factorial(n), budget, f"Y_({r},{n})")
    ech = SparseEchelon()
    for A in enumerate_set_partitions(n):
        for w in _perms(n):
            ech.add(et_phi(et_basis_element(A, w), r).terms)
    return ech.rank, bell(n) * factorial(n)


def _perms(n):
    from .symgroup import all_perms

    return all_perms(n)


def V_A_basis(A: SetPartition, r):
    """Indices of v_n^{j_n} ⊗ .. ⊗ v_1^{j_1} with j_k = j_l exactly when k, l share a block.

    Here j_k is the upper index of the k-th tensor factor, which is where e_{kl} looks.
    """
    n = A.n
    ti = TensorIndex(r, n)
    blocks = A.blocks
    out = []
    for ups in itertools.permutations(range(r), len(blocks)):
        j = [0] * (n + 1)
        for b, u in zip(blocks, ups):
            for k in b:
                j[k] = u
        out.append(ti.encode(tuple(range(n, 0, -1)), tuple(j[1:])))
    return out


def verify_V_A(n):
    """v E_A = v and v E_B = 0 for B not inside A, on V_A with r = n."""
    from .braidsties.algebra import et_E, et_phi

    r = n
    parts = enumerate_set_partitions(n)
    ops = {B: rho(et_phi(et_E(B), r)) for B in parts}
    one = Scalar.one(r)
    for A in parts:
        basis = V_A_basis(A, r)
        for B in parts:
            if B == A:
                ok = all(ops[A].apply({v: one}) == {v: one} for v in basis)
                yield f"V_A fixed by E_A, A={A}", ok, ""
            elif not B.refines(A):
                ok = all(not ops[B].apply({v: one}) for v in basis)
                yield f"V_A killed by E_B, A={A}, B={B}", ok, ""


def rho_generator(kind, i, r, n) -> OpMatrix:
    """Named operator for the CLI: T, G, E or H."""
    table = {"T": op_T, "G": op_G, "E": op_E, "H": op_H}
    if kind not in table:
        raise UsageError(f"unknown operator {kind!r}")
    return table[kind](i, r, n)


def perm_op(w: Perm, r) -> OpMatrix:
    out = OpMatrix.identity(r, (r * w.n) ** w.n)
    for i in reduced_word_images(w.images):
        out = out @ op_G(i, r, w.n)
    return out
