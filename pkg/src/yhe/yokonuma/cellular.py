"""The cellular basis m_st of Y_{r,n}(q) and coefficient extraction."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..combinatorics import (
    GREATER,
    MultiPartition,
    MultiTableau,
    compare_multicompositions,
    compare_tableaux,
    enumerate_multipartitions,
    enumerate_std,
    one_column_tableaux,
    t_lambda,
)
from ..linalg import BlockSolver
from ..scalars import Scalar, UsageError
from ..symgroup import all_perms
from .algebra import (
    YElement,
    idempotent_block,
    position_vectors,
    to_idempotent_coords,
    y_A_lambda,
    y_E,
    y_U,
    y_x,
)

DEFAULT_BUDGET = 10_000


def _shape(x):
    return x if isinstance(x, MultiPartition) else MultiPartition(x)


def y_m_lambda(shape, r) -> YElement:
    """m_λ = U_λ E_{A_λ} x_λ."""
    shape = _shape(shape)
    return y_U(shape, r) * y_E(y_A_lambda(shape), r) * y_x(shape, r)


def y_m_st(s: MultiTableau, t: MultiTableau, r, m_lambda=None) -> YElement:
    """m_st = g_{d(s)}^* m_λ g_{d(t)}."""
    if s.shape != t.shape:
        raise UsageError("tableaux of different shapes")
    if not (s.is_row_standard() and t.is_row_standard()):
        raise UsageError("m_st needs row-standard tableaux")
    m = y_m_lambda(s.shape, r) if m_lambda is None else m_lambda
    right = m.rmul_gw(t.d())
    return right.star().rmul_gw(s.d()).star()


def budget_check(size, budget, what):
    if budget is not None and size > budget:
        raise BudgetExceeded(f"{what} has {size} elements, above the budget {budget}")


class BudgetExceeded(UsageError):
    pass


class YCellularBasis:
    """All m_st for standard s, t of common shape, with a block solver."""

    def __init__(self, r, n, budget=DEFAULT_BUDGET):
        from math import factorial

        budget_check(r ** n * factorial(n), budget, f"Y_({r},{n})")
        self.r, self.n = r, n
        self.entries = []  # (shape, s, t, element)
        self.std = {}
        for shape in enumerate_multipartitions(r, n):
            tabs = enumerate_std(shape)
            self.std[shape] = tabs
            m = y_m_lambda(shape, r)
            rights = {t: m.rmul_gw(t.d()).star() for t in tabs}
            for s in tabs:
                for t in tabs:
                    elem = rights[t].rmul_gw(s.d()).star()
                    self.entries.append((shape, s, t, elem))
        self.index = {(e[1], e[2]): i for i, e in enumerate(self.entries)}
        self._solver = None

    def __len__(self):
        return len(self.entries)

    @property
    def solver(self):
        if self._solver is None:
            vectors = [to_idempotent_coords(e[3]) for e in self.entries]
            coords = [(p, w.images) for p in position_vectors(self.r, self.n) for w in all_perms(self.n)]
            self._solver = BlockSolver(vectors, idempotent_block, coords)
        return self._solver

    def express(self, x: YElement) -> dict:
        """Coefficients {basis index: value} with x = sum value * m_st."""
        return self.solver.solve(to_idempotent_coords(x))

    def reassemble(self, coeffs: dict) -> YElement:
        out = YElement(self.r, self.n, {})
        for i, c in coeffs.items():
            out = out + self.entries[i][3].scale(c)
        return out

    def element(self, s, t):
        return self.entries[self.index[(s, t)]][3]

    def one_column(self):
        return one_column_tableaux(self.r, self.n)


def shape_above(a: MultiPartition, b: MultiPartition) -> bool:
    return compare_multicompositions(a, b) == GREATER


def y_cellular_basis(r, n, budget=DEFAULT_BUDGET):
    return YCellularBasis(r, n, budget).entries


@lru_cache(maxsize=None)
def cellular_basis_cached(r, n):
    return YCellularBasis(r, n, budget=None)


def y_express_in_cellular(x: YElement, basis: YCellularBasis | None = None) -> dict:
    basis = basis or cellular_basis_cached(x.r, x.n)
    return basis.express(x)


# ---------------------------------------------------------------------------
# Jucys-Murphy elements


def y_jm(k, r, n) -> YElement:
    """J_1 = 1, J_{i+1} = g_i J_i g_i."""
    from .algebra import y_g, y_one

    out = y_one(r, n)
    for i in range(1, k):
        g = y_g(i, r, n)
        out = g * out * g
    return out


def y_jm_prime(k, r, n) -> YElement:
    """J'_k = q^{-1} sum_{i<k} e_{ik} g_{(i,k)}."""
    from ..symgroup import Perm
    from .algebra import y_e, y_gw

    out = YElement(r, n, {})
    for i in range(1, k):
        out = out + y_e(i, k, r, n) * y_gw(Perm.transposition(i, k, n), r, n)
    return out.scale(Scalar.q(r, -1))


def content(t: MultiTableau, k, r) -> Scalar:
    return Scalar.q(r, 2 * t.residue(k))


def y_verify_jm_triangularity(r, n, basis: YCellularBasis | None = None):
    """Yield (label, ok, witness) for every shape, standard t and L in {J_k, t_k}."""
    from .algebra import y_t

    basis = basis or YCellularBasis(r, n, budget=None)
    jms = [y_jm(k, r, n) for k in range(1, n + 1)]
    ts = [y_t(k, r, n) for k in range(1, n + 1)]
    for shape, tabs in basis.std.items():
        tl = t_lambda(shape)
        for t in tabs:
            m = basis.element(tl, t)
            for kind, family in (("J", jms), ("t", ts)):
                for k, L in enumerate(family, 1):
                    coeffs = basis.express(m * L)
                    diag = content(t, k, r) if kind == "J" else Scalar.z(r, t.position(k))
                    label = f"{shape} {t} {kind}{k}"
                    problems = []
                    got = coeffs.get(basis.index[(tl, t)], Scalar.zero(r))
                    if got != diag:
                        problems.append(f"diagonal {got} != {diag}")
                    for i, c in coeffs.items():
                        sh, s2, t2, _ = basis.entries[i]
                        if (s2, t2) == (tl, t):
                            continue
                        if sh == shape:
                            if s2 != tl or compare_tableaux(t2, t) != GREATER:
                                problems.append(f"in-shape term on ({s2},{t2})")
                        elif not shape_above(sh, shape):
                            problems.append(f"term on lower or incomparable shape {sh}")
                    yield label, not problems, "; ".join(problems)


# ---------------------------------------------------------------------------
# idempotent presentation with f_s = m_ss over one-column tableaux


def delta_same_column(s: MultiTableau, i) -> bool:
    return s.position(i) == s.position(i + 1)


def swap_tableau(s: MultiTableau, i) -> MultiTableau:
    """s·s_i, or s itself when i, i+1 share a column."""
    if delta_same_column(s, i):
        return s
    from ..symgroup import Perm

    return s.act(Perm.s(i, s.n))


def y_verify_lusztig(r, n, basis: YCellularBasis | None = None):
    from .algebra import y_g, y_one

    basis = basis or YCellularBasis(r, n, budget=None)
    ones = basis.one_column()
    f = {s: basis.element(s, s) for s in ones}
    g = {i: y_g(i, r, n) for i in range(1, n)}
    one = y_one(r, n)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    for i, j in itertools.product(range(1, n), repeat=2):
        if abs(i - j) > 1:
            yield f"rl1 g{i}g{j}", g[i] * g[j] == g[j] * g[i], ""
    for i in range(1, n - 1):
        yield f"rl3 braid {i}", g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1], ""
    for s in ones:
        for i in range(1, n):
            yield f"rl4 f_{s} g{i}", f[s] * g[i] == g[i] * f[swap_tableau(s, i)], ""
    for i in range(1, n):
        acc = YElement(r, n, {})
        for s in ones:
            if delta_same_column(s, i):
                acc = acc + f[s]
        yield f"rl5 g{i}^2", g[i] * g[i] == one + (acc * g[i]).scale(qq), ""
    total = YElement(r, n, {})
    for s in ones:
        total = total + f[s]
    yield "rl6 sum f_s = 1", total == one, ""
    for s in ones:
        for s2 in ones:
            expect = f[s] if s == s2 else YElement(r, n, {})
            yield f"rl7 f_{s} f_{s2}", f[s] * f[s2] == expect, ""
