"""The twelve acceptance criteria, each reported as one PASS/FAIL line."""

import time
from math import factorial

import pytest

from yhe.braidsties.cellular import EtCellularBasis
from yhe.combinatorics import bell, count_std_shape, enumerate_lambda_shapes, enumerate_std_lambda, partitions
from yhe.tensorrep import faithfulness_rank, structure_dim_identity, verify_phi_embedding
from yhe.verify import Config, run_suite


def _checks(suite, **kw):
    return run_suite(suite, Config(**kw))


def judge(acceptance, number, title, checks, seconds, limit=None, detail=""):
    bad = [c for c in checks if not c.ok]
    slow = limit is not None and seconds > limit
    ok = bool(checks) and not bad and not slow
    note = f"{len(checks)} checks, {seconds:.1f}s"
    if limit is not None:
        note += f" (limit {limit}s)"
    if detail:
        note += f"; {detail}"
    if bad:
        note += f"; first failure: {bad[0].name}: {bad[0].witness}"
    acceptance(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{note}]")
    assert ok, note


class Plain:
    """A bare check for quantities computed outside the suites."""

    def __init__(self, name, ok, witness=""):
        self.name, self.ok, self.witness = name, ok, witness


def test_criterion_01_relations(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(2, 2), (2, 3), (3, 3), (2, 4)]:
        checks += _checks("relations-y", r=r, n=n)
    for n in range(2, 6):
        checks += _checks("relations-et", n=n)
    judge(acceptance, 1, "relations r1-r6 and E1-E9", checks, time.perf_counter() - start, 30)


def test_criterion_02_faithfulness(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(1, 2), (2, 2), (3, 2), (2, 3)]:
        t0 = time.perf_counter()
        rank = faithfulness_rank(r, n)
        took = time.perf_counter() - t0
        want = r ** n * factorial(n)
        checks.append(Plain(f"rank ({r},{n})", rank == want and took < 120, f"{rank} vs {want} in {took:.1f}s"))
    judge(acceptance, 2, "faithfulness of the tensor representation", checks,
          time.perf_counter() - start, detail="ranks 2, 8, 18, 48")


def test_criterion_03_shoji(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(2, 2), (2, 3), (3, 2)]:
        checks += _checks("shoji", r=r, n=n) + _checks("mak", r=r, n=n)
    judge(acceptance, 3, "Shoji identity and modified Ariki-Koike relations", checks,
          time.perf_counter() - start, 60)


def test_criterion_04_cellular_y(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(2, 2), (2, 3), (3, 2)]:
        checks += _checks("cellular-y", r=r, n=n)
    judge(acceptance, 4, "cellular basis of Y", checks, time.perf_counter() - start, 120)


def test_criterion_05_lusztig(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(2, 2), (2, 3)]:
        checks += _checks("lusztig", r=r, n=n)
    judge(acceptance, 5, "idempotent presentation rl1-rl7", checks, time.perf_counter() - start)


def test_criterion_06_jm(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n in [(2, 3), (3, 2)]:
        checks += _checks("jm", r=r, n=n)
    judge(acceptance, 6, "Jucys-Murphy triangularity", checks, time.perf_counter() - start, 180)


def test_criterion_07_mobius(acceptance):
    start = time.perf_counter()
    checks = []
    for n in range(1, 5):
        checks += _checks("mobius", n=n) + _checks("decompose", n=n)
    dim = len(EtCellularBasis(3, (2, 1)))
    checks.append(Plain("dim E_3^(2,1)", dim == 18, str(dim)))
    judge(acceptance, 7, "Möbius idempotents and central decomposition", checks,
          time.perf_counter() - start, detail=f"dim E_3^(2,1) = {dim}")


def test_criterion_08_counting(acceptance):
    start = time.perf_counter()
    checks = []
    values = []
    for n in range(1, 6):
        shapes = enumerate_lambda_shapes(n)
        closed = sum(count_std_shape(s) ** 2 for s in shapes)
        enumerated = sum(len(enumerate_std_lambda(s)) ** 2 for s in shapes)
        want = bell(n) * factorial(n)
        checks.append(Plain(f"n={n}", closed == enumerated == want, f"{closed}, {enumerated}, {want}"))
        values.append(closed)
        checks += _checks("counting", n=n)
    # at n=5 both paths must give b_5 * 5! = 52 * 120 = 6240
    judge(acceptance, 8, "counting identities", checks, time.perf_counter() - start,
          detail="n=1..5 totals " + ", ".join(map(str, values)) + " (formula = enumeration)")
    assert values[-1] == 6240


def test_criterion_09_cellular_et(acceptance):
    start = time.perf_counter()
    checks = []
    sizes = []
    for n in (2, 3, 4):
        basis = EtCellularBasis(n)
        sizes.append(len(basis))
        checks.append(Plain(f"size n={n}", len(basis) == bell(n) * factorial(n), str(len(basis))))
        checks += _checks("cellular-et", n=n, seed=0)
    judge(acceptance, 9, "cellular basis of E_n", checks, time.perf_counter() - start, 300,
          detail="sizes " + ", ".join(map(str, sizes)))


def test_criterion_10_psi(acceptance):
    start = time.perf_counter()
    checks = []
    for n in (1, 2, 3):
        for alpha in partitions(n):
            checks += _checks("psi", n=n, alpha=alpha, seed=0)
    judge(acceptance, 10, "ψ_α isomorphisms", checks, time.perf_counter() - start)


def test_criterion_11_embedding(acceptance):
    start = time.perf_counter()
    checks = []
    for r, n, want in [(2, 2, 4), (3, 3, 30)]:
        rank, expected = verify_phi_embedding(r, n)
        checks.append(Plain(f"rank ({r},{n})", rank == expected == want, f"{rank} vs {want}"))
    judge(acceptance, 11, "embedding of E_n into Y_{r,n}", checks, time.perf_counter() - start,
          detail="ranks 4 and 30")


def test_criterion_12_structure_identity(acceptance):
    start = time.perf_counter()
    checks = []
    for r in (1, 2, 3):
        for n in (1, 2, 3, 4):
            total, want = structure_dim_identity(r, n)
            checks.append(Plain(f"({r},{n})", total == want, f"{total} vs {want}"))
    judge(acceptance, 12, "structure-theorem dimension identity", checks, time.perf_counter() - start, 1)


@pytest.mark.parametrize("suite,kw", [("faithful", dict(r=2, n=2)), ("phi-embed", dict(r=2, n=2))])
def test_suite_forms_of_rank_checks(suite, kw):
    checks = _checks(suite, **kw)
    assert checks and all(c.ok for c in checks)
