"""Verification suites: each yields (name, ok, witness) triples."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial

from .combinatorics import (
    bell,
    count_std_shape,
    enumerate_lambda_shapes,
    enumerate_multipartitions,
    enumerate_set_partitions,
    enumerate_std,
    enumerate_std_lambda,
    faa_di_bruno,
    partitions,
    shape_above,
)
from .linalg import SparseEchelon
from .scalars import Scalar, UsageError
from .symgroup import Perm, all_perms
from .yokonuma.cellular import DEFAULT_BUDGET


@dataclass(frozen=True)
class Config:
    r: int = 2
    n: int = 3
    alpha: tuple | None = None
    budget: int | None = DEFAULT_BUDGET
    seed: int = 0


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: str = ""


def check_cellular_law(basis, h_list, above, samples=None, rng=None):
    """m_st h ≡ Σ_v r_v m_sv modulo higher shapes, with r_v independent of s.

    The independence is tested by redoing the expansion for a second row s'.
    """
    triples = [(i, j) for i in range(len(basis.entries)) for j in range(len(h_list))]
    if samples is not None and samples < len(triples):
        triples = (rng or random.Random(0)).sample(triples, samples)
    for i, j in sorted(triples):
        shape, s, t, m = basis.entries[i]
        h_label, h = h_list[j]
        problems = []
        row = {}
        for k, c in basis.express(m * h).items():
            sh2, s2, t2, _ = basis.entries[k]
            if sh2 == shape:
                if s2 != s:
                    problems.append(f"term in row {s2}")
                else:
                    row[t2] = c
            elif not above(sh2, shape):
                problems.append(f"term on shape {sh2} not above {shape}")
        others = [s2 for s2 in basis.std[shape] if s2 != s]
        if others and not problems:
            s2 = others[(i + j) % len(others)]
            row2 = {}
            for k, c in basis.express(basis.element(s2, t) * h).items():
                sh3, s3, t3, _ = basis.entries[k]
                if sh3 == shape and s3 == s2:
                    row2[t3] = c
            if row2 != row:
                problems.append(f"coefficients differ between rows {s} and {s2}")
        yield f"law {shape} ({s},{t})*{h_label}", not problems, "; ".join(problems)


# ---------------------------------------------------------------------------
# Y_{r,n}


def suite_relations_y(cfg):
    from .yokonuma.algebra import (
        y_E,
        y_e,
        y_ei,
        y_g,
        y_gw,
        y_inverse_g,
        y_one,
        y_t,
    )

    r, n = cfg.r, cfg.n
    one = y_one(r, n)
    qq = Scalar.q(r) - Scalar.q(r, -1)
    t = {i: y_t(i, r, n) for i in range(1, n + 1)}
    g = {i: y_g(i, r, n) for i in range(1, n)}
    for i in t:
        yield f"r1 t{i}^{r} = 1", t[i] ** r == one, ""
    for i, j in itertools.combinations(t, 2):
        yield f"r2 t{i} t{j}", t[i] * t[j] == t[j] * t[i], ""
    for i in g:
        si = Perm.s(i, n)
        for j in t:
            yield f"r3 t{j} g{i}", t[j] * g[i] == g[i] * t[si(j)], ""
    for i, j in itertools.combinations(g, 2):
        if j - i > 1:
            yield f"r4 g{i} g{j}", g[i] * g[j] == g[j] * g[i], ""
        else:
            yield f"r5 braid g{i} g{j}", g[i] * g[j] * g[i] == g[j] * g[i] * g[j], ""
    for i in g:
        ei = y_ei(i, r, n)
        yield f"r6 g{i}^2", g[i] * g[i] == one + (ei * g[i]).scale(qq), ""
        inv = y_inverse_g(i, r, n)
        yield f"g{i} inverse", inv * g[i] == one and g[i] * inv == one, ""
    # e_ij by conjugating e_{j-1} with g_i .. g_{j-2}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        x = y_ei(j - 1, r, n)
        for k in range(j - 2, i - 1, -1):
            x = g[k] * x * y_inverse_g(k, r, n)
        yield f"e{i}{j} by conjugation", x == y_e(i, j, r, n), ""
    rng = random.Random(cfg.seed)
    parts = enumerate_set_partitions(n)
    perms = all_perms(n)
    for k in range(min(20, len(parts) * len(perms))):
        A, w = rng.choice(parts), rng.choice(perms)
        lhs = y_E(A, r) * y_gw(w, r, n)
        rhs = y_gw(w, r, n) * y_E(A.act(w), r)
        yield f"E_A g_w sample {k:02d}", lhs == rhs, f"A={A} w={w}"


def _y_basis(cfg):
    from .yokonuma.cellular import YCellularBasis

    return YCellularBasis(cfg.r, cfg.n, cfg.budget)


def suite_lusztig(cfg):
    from .yokonuma.cellular import y_verify_lusztig

    yield from y_verify_lusztig(cfg.r, cfg.n, _y_basis(cfg))


def suite_jm(cfg):
    from .yokonuma.algebra import y_one
    from .yokonuma.cellular import y_jm, y_jm_prime, y_verify_jm_triangularity

    r, n = cfg.r, cfg.n
    one = y_one(r, n)
    for k in range(1, n + 1):
        J, Jp = y_jm(k, r, n), y_jm_prime(k, r, n)
        yield f"J{k} = 1 + (q^2-1)J'{k}", J == one + Jp.scale(Scalar.q(r, 2) - 1), ""
    from .yokonuma.algebra import y_t

    family = [(f"J{k}", y_jm(k, r, n)) for k in range(1, n + 1)]
    family += [(f"t{k}", y_t(k, r, n)) for k in range(1, n + 1)]
    for (a, x), (b, y) in itertools.combinations(family, 2):
        yield f"{a} {b} commute", x * y == y * x, ""
    yield from y_verify_jm_triangularity(r, n, _y_basis(cfg))


def suite_cellular_y(cfg):
    from .combinatorics import one_column_tableaux
    from .yokonuma.algebra import y_g, y_one, y_t
    from .yokonuma.cellular import shape_above as y_above

    r, n = cfg.r, cfg.n
    basis = _y_basis(cfg)
    expected = r ** n * factorial(n)
    yield "count", len(basis) == expected, f"{len(basis)} vs {expected}"
    try:
        basis.solver
        yield "change of basis invertible", True, ""
    except UsageError as exc:
        yield "change of basis invertible", False, str(exc)
        return
    ones = set(one_column_tableaux(r, n))
    got = basis.express(y_one(r, n))
    want = {basis.index[(s, s)]: Scalar.one(r) for s in ones}
    yield "sum of m_ss over one-column s is 1", got == want, ""
    for i in range(1, n + 1):
        got = basis.express(y_t(i, r, n))
        want = {basis.index[(s, s)]: Scalar.z(r, s.position(i)) for s in ones}
        yield f"t{i} = sum xi^p m_ss", got == want, ""
    bad = [(s, t) for _, s, t, m in basis.entries if m.star() != basis.element(t, s)]
    yield "star m_st = m_ts", not bad, str(bad[:1])
    hs = [(f"g{i}", y_g(i, r, n)) for i in range(1, n)]
    hs += [(f"t{i}", y_t(i, r, n)) for i in range(1, n + 1)]
    yield from check_cellular_law(basis, hs, y_above, samples=100, rng=random.Random(cfg.seed))


# ---------------------------------------------------------------------------
# tensor representation


def suite_tensor_rep(cfg):
    from .tensorrep import verify_tensor_rep, verify_V_A

    yield from verify_tensor_rep(cfg.r, cfg.n, pairs=200, seed=cfg.seed)
    if cfg.n <= 3:
        yield from verify_V_A(cfg.n)


def suite_faithful(cfg):
    from .tensorrep import faithfulness_rank

    r, n = cfg.r, cfg.n
    rank = faithfulness_rank(r, n, cfg.budget)
    expected = r ** n * factorial(n)
    yield f"rank of rho on Y_({r},{n})", rank == expected, f"{rank} vs {expected}"


def suite_shoji(cfg):
    from .tensorrep import verify_adjugate, verify_shoji_identity

    yield from verify_adjugate(cfg.r)
    yield from verify_shoji_identity(cfg.r, cfg.n)


def suite_mak(cfg):
    from .tensorrep import verify_mak

    yield from verify_mak(cfg.r, cfg.n)


def suite_phi_embed(cfg):
    from .braidsties.algebra import et_phi
    from .tensorrep import verify_phi_embedding

    r, n = cfg.r, cfg.n
    rank, expected = verify_phi_embedding(r, n, cfg.budget)
    yield f"phi images independent in Y_({r},{n})", rank == expected, f"rank {rank} vs {expected}"
    rng = random.Random(cfg.seed)
    for k in range(20):
        x, y = _random_et(rng, n), _random_et(rng, n)
        yield f"phi multiplicative {k:02d}", et_phi(x * y, r) == et_phi(x, r) * et_phi(y, r), ""


# ---------------------------------------------------------------------------
# E_n


def _random_et(rng, n, terms=3):
    from .braidsties.algebra import EtElement, et_basis_element

    parts = enumerate_set_partitions(n)
    perms = all_perms(n)
    x = EtElement(n, {})
    for _ in range(terms):
        c = Scalar.monomial(1, rng.choice([1, -1, 2]), rng.randint(-1, 1))
        x = x + et_basis_element(rng.choice(parts), rng.choice(perms)).scale(c)
    return x


def suite_relations_et(cfg):
    from .braidsties.algebra import et_e, et_g, et_one

    n = cfg.n
    one = et_one(n)
    qq = Scalar.q(1) - Scalar.q(1, -1)
    g = {i: et_g(i, n) for i in range(1, n)}
    e = {i: et_e(i, n) for i in range(1, n)}
    for i, j in itertools.product(g, repeat=2):
        far = abs(i - j) > 1
        if far:
            yield f"E1 g{i} g{j}", g[i] * g[j] == g[j] * g[i], ""
            yield f"E7 g{i} e{j}", g[i] * e[j] == e[j] * g[i], ""
        if abs(i - j) == 1:
            yield f"E3 braid g{i} g{j}", g[i] * g[j] * g[i] == g[j] * g[i] * g[j], ""
            yield f"E4 e{i} g{j} g{i}", e[i] * g[j] * g[i] == g[j] * g[i] * e[j], ""
            a, b, c = e[i] * e[j] * g[j], e[i] * g[j] * e[i], g[j] * e[i] * e[j]
            yield f"E5 e{i} e{j} g{j}", a == b == c, ""
        yield f"E6 e{i} e{j}", e[i] * e[j] == e[j] * e[i], ""
    for i in g:
        yield f"E2 g{i} e{i}", g[i] * e[i] == e[i] * g[i], ""
        yield f"E8 e{i}^2", e[i] * e[i] == e[i], ""
        yield f"E9 g{i}^2", g[i] * g[i] == one + (e[i] * g[i]).scale(qq), ""


def suite_mobius(cfg):
    from .braidsties.algebra import et_bbE, et_bbE_alpha, et_E, et_g, et_e, et_gw, et_one

    n = cfg.n
    parts = enumerate_set_partitions(n)
    bbE = {A: et_bbE(A) for A in parts}
    zero = et_one(n) - et_one(n)
    for A, B in itertools.product(parts, repeat=2):
        want = bbE[A] if A == B else zero
        yield f"orthogonal {A} {B}", bbE[A] * bbE[B] == want, ""
        want = bbE[A] if B.refines(A) else zero
        yield f"bbE_A E_B {A} {B}", bbE[A] * et_E(B) == want, ""
    for A in parts:
        for w in all_perms(n):
            gw = et_gw(w)
            yield f"bbE_A g_w {A} {w}", bbE[A] * gw == gw * bbE[A.act(w)], ""
    alphas = partitions(n)
    total = zero
    gens = [et_g(i, n) for i in range(1, n)] + [et_e(i, n) for i in range(1, n)]
    rng = random.Random(cfg.seed)
    samples = [_random_et(rng, n) for _ in range(5)]
    for alpha in alphas:
        Ea = et_bbE_alpha(alpha, n)
        total = total + Ea
        ok = all(Ea * x == x * Ea for x in gens + samples)
        yield f"central bbE_{alpha}", ok, ""
    yield "sum of bbE_alpha is 1", total == et_one(n), ""


def suite_decompose(cfg):
    from .braidsties.algebra import et_bbE_alpha, et_bbE, et_decompose, et_gw

    n = cfg.n
    acc = 0
    for alpha in partitions(n):
        ech = SparseEchelon()
        for A in enumerate_set_partitions(n, alpha):
            E = et_bbE(A)
            for w in all_perms(n):
                ech.add((E * et_gw(w)).terms)
        want = faa_di_bruno(alpha) * factorial(n)
        acc += ech.rank
        yield f"dim component {alpha}", ech.rank == want, f"{ech.rank} vs {want}"
    yield "dimensions add up", acc == bell(n) * factorial(n), f"{acc}"
    rng = random.Random(cfg.seed)
    for k in range(10):
        x = _random_et(rng, n)
        comps = et_decompose(x)
        ok = sum(comps.values(), x - x) == x
        ok = ok and all(v == x * et_bbE_alpha(a, n) for a, v in comps.items())
        yield f"decompose sample {k:02d}", ok, ""


def _alphas(cfg):
    if cfg.alpha is not None:
        return [tuple(sorted(cfg.alpha, reverse=True))]
    return list(partitions(cfg.n))


def suite_cellular_et(cfg):
    from .braidsties.algebra import et_e, et_g
    from .braidsties.cellular import (
        EtCellularBasis,
        verify_bbB_relations,
        verify_circle_action,
        verify_important_commutation,
        verify_lemamulti,
    )

    n = cfg.n
    basis = EtCellularBasis(n, cfg.alpha, cfg.budget)
    if cfg.alpha is None:
        expected = bell(n) * factorial(n)
    else:
        expected = faa_di_bruno(cfg.alpha) * factorial(n)
    yield "count", len(basis) == expected, f"{len(basis)} vs {expected}"
    try:
        basis.solver
        yield "change of basis invertible", True, ""
    except UsageError as exc:
        yield "change of basis invertible", False, str(exc)
        return
    bad = [(s, t) for _, s, t, m in basis.entries if m.star() != basis.element(t, s)]
    yield "star m_st = m_ts", not bad, str(bad[:1])
    hs = [(f"g{i}", et_g(i, n)) for i in range(1, n)] + [(f"e{i}", et_e(i, n)) for i in range(1, n)]
    rng = random.Random(cfg.seed)
    yield from check_cellular_law(basis, hs, shape_above, samples=100, rng=rng)
    yield from verify_bbB_relations(n)
    yield from verify_circle_action(n)
    yield from verify_important_commutation(n)
    for alpha in _alphas(cfg):
        sub = EtCellularBasis(n, alpha, budget=None)
        samples = None if n <= 3 else 200
        yield from verify_lemamulti(n, alpha, samples=samples, seed=cfg.seed, basis=sub)


def suite_wreath(cfg):
    from .braidsties.cellular import verify_wreath

    for alpha in _alphas(cfg):
        yield from verify_wreath(cfg.n, alpha, seed=cfg.seed)


def suite_psi(cfg):
    from .braidsties.cellular import verify_psi

    for alpha in _alphas(cfg):
        yield from verify_psi(cfg.n, alpha, pairs=100, seed=cfg.seed)


def suite_counting(cfg):
    from .tensorrep import structure_dim_identity

    n = cfg.n
    closed = enumerated = 0
    per = {}
    for shape in enumerate_lambda_shapes(n):
        c = count_std_shape(shape)
        e = len(enumerate_std_lambda(shape))
        if c != e:
            yield f"|Std({shape})|", False, f"formula {c} vs enumeration {e}"
        closed += c * c
        enumerated += e * e
        a = shape.alpha()
        per[a] = per.get(a, 0) + e * e
    want = bell(n) * factorial(n)
    yield f"sum |Std(Λ)|^2 by formula = {closed}, b_{n}*{n}! = {want}", closed == want, ""
    yield f"sum |Std(Λ)|^2 by enumeration = {enumerated}, b_{n}*{n}! = {want}", enumerated == want, ""
    for a in partitions(n):
        want = faa_di_bruno(a) * factorial(n)
        got = per.get(a, 0)
        yield f"sum |Std(Λ)|^2 over type {a} = {got}, expected {want}", got == want, ""
    r = cfg.r
    got = sum(len(enumerate_std(lam)) ** 2 for lam in enumerate_multipartitions(r, n))
    want = r ** n * factorial(n)
    yield f"sum |Std(λ)|^2 for r={r}", got == want, f"{got} vs {want}"
    total, want = structure_dim_identity(r, n)
    yield f"structure dimension identity r={r}", total == want, f"{total} vs {want}"


SUITES = {
    "relations-y": suite_relations_y,
    "relations-et": suite_relations_et,
    "tensor-rep": suite_tensor_rep,
    "faithful": suite_faithful,
    "shoji": suite_shoji,
    "mak": suite_mak,
    "lusztig": suite_lusztig,
    "cellular-y": suite_cellular_y,
    "cellular-et": suite_cellular_et,
    "jm": suite_jm,
    "mobius": suite_mobius,
    "decompose": suite_decompose,
    "wreath": suite_wreath,
    "psi": suite_psi,
    "phi-embed": suite_phi_embed,
    "counting": suite_counting,
}


def run_suite(name: str, cfg: Config) -> list:
    """All checks of a suite, sorted by name."""
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    checks = [Check(label, bool(ok), "" if ok else str(w)) for label, ok, w in SUITES[name](cfg)]
    return sorted(checks, key=lambda c: c.name)
