"""Partitions, multitableaux, dominance orders, set partitions and the shapes
indexing the cellular basis of the braids-and-ties algebra."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .scalars import UsageError
from .symgroup import Perm

LESS, GREATER, EQUAL, INCOMPARABLE = "less", "greater", "equal", "incomparable"


# ---------------------------------------------------------------------------
# partitions and compositions


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """Partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int, parts: int) -> list:
    """Weak compositions of n with exactly ``parts`` parts, descending lex."""
    if parts == 0:
        return [()] if n == 0 else []
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            out.append((first,) + rest)
    return out


def conjugate(lam):
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0])) if lam else ()


def hook_length_count(lam) -> int:
    """Number of standard tableaux of shape lam."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def partition_key(lam):
    """The fixed total order on partitions: size first, then lexicographic."""
    return (sum(lam), tuple(lam))


def dominates(a, b) -> bool:
    """a ⊵ b for compositions, comparing padded partial sums."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def _order(ge, le, eq):
    if eq:
        return EQUAL
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


def compare_compositions(a, b):
    a, b = tuple(a), tuple(b)
    return _order(dominates(a, b), dominates(b, a), _strip(a) == _strip(b))


def _strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad partition {text!r}") from None
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise UsageError(f"{text!r} is not a partition")
    return parts


# ---------------------------------------------------------------------------
# multipartitions


@dataclass(frozen=True)
class MultiPartition:
    """An r-tuple of compositions; a multipartition when every part is a partition."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))

    @property
    def r(self):
        return len(self.components)

    @property
    def size(self):
        return sum(sum(c) for c in self.components)

    def norm(self):
        """‖λ‖ = (|λ^(1)|, ..., |λ^(r)|)."""
        return tuple(sum(c) for c in self.components)

    def is_partition(self):
        return all(list(c) == sorted(c, reverse=True) and all(c) for c in self.components)

    def is_one_column(self):
        return all(all(p == 1 for p in c) for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return "(" + "|".join(",".join(map(str, c)) for c in self.components) + ")"

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*\((.*)\)\s*", text)
        if not m:
            raise UsageError(f"bad multipartition {text!r}")
        return cls(tuple(parse_partition(p) for p in m.group(1).split("|")))


def enumerate_multipartitions(r: int, n: int) -> list:
    out = []
    for sizes in compositions(n, r):
        for comps in itertools.product(*(partitions(s) for s in sizes)):
            out.append(MultiPartition(comps))
    return out


def compare_multicompositions(a: MultiPartition, b: MultiPartition):
    if len(a) != len(b):
        raise UsageError("multicompositions with different numbers of components")
    ge = all(dominates(x, y) for x, y in zip(a, b))
    le = all(dominates(y, x) for x, y in zip(a, b))
    eq = all(_strip(x) == _strip(y) for x, y in zip(a, b))
    return _order(ge, le, eq)


def structure_count(shape: MultiPartition) -> int:
    return prod(hook_length_count(c) for c in shape)


# ---------------------------------------------------------------------------
# multitableaux


@dataclass(frozen=True)
class MultiTableau:
    """Components, each a tuple of rows, each row a tuple of entries."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(tuple(tuple(row) for row in c) for c in self.components)
        )

    @property
    def shape(self) -> MultiPartition:
        return MultiPartition(tuple(tuple(len(row) for row in c) for c in self.components))

    @property
    def n(self):
        return sum(len(row) for c in self.components for row in c)

    def reading_word(self):
        return [x for c in self.components for row in c for x in row]

    def d(self) -> Perm:
        """The permutation with t = t^shape · d."""
        return Perm(self.reading_word())

    def act(self, w: Perm) -> "MultiTableau":
        return MultiTableau(tuple(tuple(tuple(w(x) for x in row) for row in c) for c in self.components))

    def node(self, j):
        """(row, column, component), all 1-based, of the entry j."""
        for k, c in enumerate(self.components, 1):
            for x, row in enumerate(c, 1):
                if j in row:
                    return x, row.index(j) + 1, k
        raise UsageError(f"{j} not in tableau")

    def position(self, j) -> int:
        return self.node(j)[2]

    def positions(self):
        out = [0] * self.n
        for k, c in enumerate(self.components, 1):
            for row in c:
                for x in row:
                    out[x - 1] = k
        return tuple(out)

    def residue(self, j) -> int:
        x, y, _ = self.node(j)
        return y - x

    def component_sets(self):
        return [frozenset(x for row in c for x in row) for c in self.components]

    def restrict_shape(self, m) -> MultiPartition:
        """Shape(t↓m) as a multicomposition."""
        return MultiPartition(
            tuple(tuple(sum(1 for x in row if x <= m) for row in c) for c in self.components)
        )

    def is_row_standard(self):
        return all(list(row) == sorted(row) for c in self.components for row in c)

    def is_standard(self):
        if not self.is_row_standard():
            return False
        for c in self.components:
            for upper, lower in zip(c, c[1:]):
                if len(lower) > len(upper) or any(a >= b for a, b in zip(upper, lower)):
                    return False
        return True

    def __str__(self):
        return "(" + "|".join("/".join(" ".join(map(str, row)) for row in c) for c in self.components) + ")"


def t_lambda(shape) -> MultiTableau:
    """The tableau filled 1..n along rows, component by component."""
    comps = []
    nxt = 1
    for c in shape:
        rows = []
        for length in c:
            rows.append(tuple(range(nxt, nxt + length)))
            nxt += length
        comps.append(tuple(rows))
    return MultiTableau(tuple(comps))


def tableau_from_d(shape, d: Perm) -> MultiTableau:
    return t_lambda(shape).act(d)


def _std_fillings(shape):
    """Standard fillings of the multipartition ``shape`` with 1..n."""
    shape = tuple(tuple(c) for c in shape)
    n = sum(sum(c) for c in shape)
    out = []
    rows = [[[] for _ in c] for c in shape]

    def rec(j):
        if j > n:
            out.append(MultiTableau(tuple(tuple(tuple(r) for r in c) for c in rows)))
            return
        for k, c in enumerate(shape):
            for x, length in enumerate(c):
                cur = rows[k][x]
                if len(cur) < length and (x == 0 or len(rows[k][x - 1]) > len(cur)):
                    cur.append(j)
                    rec(j + 1)
                    cur.pop()

    rec(1)
    return out


def enumerate_std(shape) -> list:
    if isinstance(shape, MultiPartition):
        shape = shape.components
    return _std_fillings(shape)


def enumerate_row_standard(shape) -> list:
    """All row-standard multitableaux: one per distinguished coset representative."""
    if isinstance(shape, MultiPartition):
        shape = shape.components
    rows = [length for c in shape for length in c]
    n = sum(rows)
    out = []

    def rec(remaining, acc):
        if len(acc) == len(rows):
            out.append(acc)
            return
        for chosen in itertools.combinations(sorted(remaining), rows[len(acc)]):
            rec(remaining - set(chosen), acc + [chosen])

    rec(set(range(1, n + 1)), [])
    result = []
    for flat in out:
        it = iter(flat)
        result.append(MultiTableau(tuple(tuple(next(it) for _ in c) for c in shape)))
    return result


def one_column_tableaux(r: int, n: int) -> list:
    """Std^1_{n,r}: standard tableaux of one-column shapes, one per position vector."""
    out = []
    for pos in itertools.product(range(1, r + 1), repeat=n):
        comps = [[] for _ in range(r)]
        for j, k in enumerate(pos, 1):
            comps[k - 1].append((j,))
        out.append(MultiTableau(tuple(tuple(c) for c in comps)))
    return out


def compare_tableaux(s: MultiTableau, t: MultiTableau):
    """The order s ⊵ t iff Shape(s↓m) ⊵ Shape(t↓m) for all m."""
    if s.n != t.n or len(s.components) != len(t.components):
        raise UsageError("tableaux of different sizes")
    if s == t:
        return EQUAL
    ge = le = True
    for m in range(1, s.n + 1):
        c = compare_multicompositions(s.restrict_shape(m), t.restrict_shape(m))
        if c in (LESS, INCOMPARABLE):
            ge = False
        if c in (GREATER, INCOMPARABLE):
            le = False
    return _order(ge, le, False)


# ---------------------------------------------------------------------------
# set partitions


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def canonical_blocks(blocks) -> tuple:
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def join_blocks(a: tuple, b) -> tuple:
    """Smallest common coarsening of two canonical block tuples."""
    items = [x for blk in a for x in blk]
    uf = _UnionFind(items)
    for blocks in (a, b):
        for blk in blocks:
            for x in blk[1:]:
                uf.union(blk[0], x)
    groups = {}
    for x in items:
        groups.setdefault(uf.find(x), []).append(x)
    return canonical_blocks(groups.values())


def merge_pair(a: tuple, i: int, j: int) -> tuple:
    """A ∨ {i, j}: merge the blocks containing i and j."""
    bi = bj = None
    for blk in a:
        if i in blk:
            bi = blk
        if j in blk:
            bj = blk
    if bi is bj:
        return a
    merged = tuple(sorted(bi + bj))
    return canonical_blocks([blk for blk in a if blk is not bi and blk is not bj] + [merged])


def act_blocks(a: tuple, w: Perm) -> tuple:
    return canonical_blocks([[w(x) for x in blk] for blk in a])


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple

    def __post_init__(self):
        blocks = canonical_blocks(self.blocks)
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise UsageError(f"{self.blocks} is not a set partition of 1..n")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def singletons(cls, n):
        return cls(tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def whole(cls, n):
        return cls((tuple(range(1, n + 1)),) if n else ())

    @classmethod
    def from_block(cls, block, n):
        block = set(block)
        return cls((tuple(sorted(block)),) + tuple((i,) for i in range(1, n + 1) if i not in block))

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*\{(.*)\}\s*", text)
        if not m:
            raise UsageError(f"bad set partition {text!r}")
        try:
            blocks = [tuple(int(x) for x in b.split(",")) for b in m.group(1).split("|") if b.strip()]
        except ValueError:
            raise UsageError(f"bad set partition {text!r}") from None
        return cls(tuple(blocks))

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    def type(self) -> tuple:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def __len__(self):
        return len(self.blocks)

    def refines(self, other: "SetPartition") -> bool:
        """self ⊆ other: every block of other is a union of blocks of self."""
        where = {x: i for i, b in enumerate(other.blocks) for x in b}
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def join(self, other: "SetPartition") -> "SetPartition":
        return SetPartition(join_blocks(self.blocks, other.blocks))

    def act(self, w: Perm) -> "SetPartition":
        return SetPartition(act_blocks(self.blocks, w))

    def block_of(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise UsageError(f"{x} not in set partition")

    def __str__(self):
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"

    def __lt__(self, other):
        return self.blocks < other.blocks


@lru_cache(maxsize=None)
def _set_partitions(n):
    if n == 0:
        return ((),)
    out = []
    for p in _set_partitions(n - 1):
        for i in range(len(p)):
            out.append(canonical_blocks(p[:i] + (p[i] + (n,),) + p[i + 1:]))
        out.append(canonical_blocks(p + ((n,),)))
    return tuple(sorted(out))


def enumerate_set_partitions(n, alpha=None) -> list:
    out = [SetPartition(b) for b in _set_partitions(n)]
    if alpha is not None:
        alpha = tuple(sorted(alpha, reverse=True))
        out = [A for A in out if A.type() == alpha]
    return out


def coarsenings(A: SetPartition) -> list:
    """All B with A ⊆ B."""
    k = len(A.blocks)
    out = []
    for p in _set_partitions(k):
        out.append(SetPartition(tuple(sum((A.blocks[i - 1] for i in grp), ()) for grp in p)))
    return out


def mobius(A: SetPartition, B: SetPartition) -> int:
    """Möbius function of the refinement lattice, closed form."""
    if not A.refines(B):
        return 0
    r, s = len(A), len(B)
    counts = {}
    for blk in B.blocks:
        inside = sum(1 for a in A.blocks if a[0] in blk)
        counts[inside] = counts.get(inside, 0) + 1
    val = 1
    for i in range(1, r):
        val *= factorial(i) ** counts.get(i + 1, 0)
    return (-1) ** (r - s) * val


def bell(n: int) -> int:
    return len(_set_partitions(n))


def faa_di_bruno(alpha) -> int:
    """b_n(α): the number of set partitions of type α."""
    alpha = tuple(sorted(alpha, reverse=True))
    n = sum(alpha)
    denom = 1
    for part, mult in _multiplicities(alpha):
        denom *= factorial(part) ** mult * factorial(mult)
    return factorial(n) // denom


def _multiplicities(seq):
    return [(k, len(list(g))) for k, g in itertools.groupby(seq)]


def multinomial(n, parts) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


# ---------------------------------------------------------------------------
# shapes Λ = (λ | μ)


@dataclass(frozen=True)
class LambdaShape:
    lam: MultiPartition
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(tuple(m) for m in self.mu))
        comps = self.lam.components
        if any(not c for c in comps):
            raise UsageError("components of λ must be nonempty")
        keys = [partition_key(c) for c in comps]
        if keys != sorted(keys):
            raise UsageError(f"{self.lam} is not increasing")
        if [sum(m) for m in self.mu] != self.multiplicities():
            raise UsageError("μ does not match the multiplicities of λ")

    def multiplicities(self):
        return [m for _, m in _multiplicities(self.lam.components)]

    def groups(self):
        """Index ranges (0-based) of runs of equal components."""
        out = []
        i = 0
        for m in self.multiplicities():
            out.append(tuple(range(i, i + m)))
            i += m
        return out

    @property
    def n(self):
        return self.lam.size

    def alpha(self) -> tuple:
        """type(λ): the component sizes as a partition."""
        return tuple(sorted(self.lam.norm(), reverse=True))

    def blocks(self) -> tuple:
        """Consecutive blocks of A_Λ, one per component."""
        return canonical_blocks(t_lambda(self.lam).component_sets())

    def set_partition(self) -> SetPartition:
        return SetPartition(self.blocks())

    def __str__(self):
        return f"{self.lam} ∣ " + "(" + "|".join(",".join(map(str, m)) for m in self.mu) + ")"


def _increasing_sequences(n, min_key=None):
    if n == 0:
        yield ()
        return
    for size in range(1, n + 1):
        for lam in reversed(partitions(size)):
            key = partition_key(lam)
            if min_key is not None and key < min_key:
                continue
            for rest in _increasing_sequences(n - size, key):
                yield (lam,) + rest


def enumerate_lambda_shapes(n: int, alpha=None) -> list:
    out = []
    for seq in _increasing_sequences(n):
        lam = MultiPartition(seq)
        mults = [m for _, m in _multiplicities(seq)]
        for mu in itertools.product(*(partitions(m) for m in mults)):
            shape = LambdaShape(lam, mu)
            if alpha is None or shape.alpha() == tuple(sorted(alpha, reverse=True)):
                out.append(shape)
    return out


@dataclass(frozen=True)
class LambdaTableau:
    t: MultiTableau
    u: tuple  # tableaux of single partitions, stored as tuples of rows

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(tuple(tuple(row) for row in x) for x in self.u))

    def u_tableaux(self):
        return [MultiTableau((x,)) for x in self.u]

    def shape(self) -> LambdaShape:
        return LambdaShape(self.t.shape, tuple(tuple(len(row) for row in x) for x in self.u))

    def is_row_standard(self):
        return self.t.is_row_standard() and all(u.is_row_standard() for u in self.u_tableaux())

    def is_increasing(self):
        comps = self.t.components
        mins = [min(x for row in c for x in row) for c in comps]
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if self.t.shape[i] == self.t.shape[j] and not mins[i] < mins[j]:
                    return False
        return True

    def is_standard(self):
        return (
            self.t.is_standard()
            and all(u.is_standard() for u in self.u_tableaux())
            and self.is_increasing()
        )

    def __str__(self):
        return f"{self.t} ∣ " + " ".join(str(u) for u in self.u_tableaux())


def _relabel(tab: MultiTableau, labels) -> tuple:
    """Replace entry i of a tableau on 1..k by labels[i-1]; returns the component."""
    (comp,) = tab.components
    return tuple(tuple(labels[x - 1] for x in row) for row in comp)


def enumerate_std_lambda(shape: LambdaShape) -> list:
    comps = shape.lam.components
    n = shape.n
    sizes = [sum(c) for c in comps]
    per_comp = [enumerate_std(MultiPartition((c,))) for c in comps]
    u_choices = list(itertools.product(*(enumerate_std(MultiPartition((m,))) for m in shape.mu)))
    out = []

    def rec(i, remaining, chosen):
        if i == len(comps):
            yield list(chosen)
            return
        for subset in itertools.combinations(sorted(remaining), sizes[i]):
            if i > 0 and comps[i - 1] == comps[i] and not chosen[-1][0] < subset[0]:
                continue
            chosen.append(subset)
            yield from rec(i + 1, remaining - set(subset), chosen)
            chosen.pop()

    for subsets in rec(0, set(range(1, n + 1)), []):
        for fills in itertools.product(*per_comp):
            t = MultiTableau(tuple(_relabel(f, s) for f, s in zip(fills, subsets)))
            for us in u_choices:
                out.append(LambdaTableau(t, tuple(u.components[0] for u in us)))
    return out


def count_std_shape(shape: LambdaShape) -> int:
    """|Std(Λ)| by the closed formula."""
    comps = shape.lam.components
    num = multinomial(shape.n, [sum(c) for c in comps])
    num *= prod(hook_length_count(c) for c in comps)
    num *= prod(hook_length_count(m) for m in shape.mu)
    den = prod(factorial(m) for m in shape.multiplicities())
    assert num % den == 0
    return num // den


def lambda_t(shape: LambdaShape) -> LambdaTableau:
    """𝔱^Λ = (𝔱^λ | 𝔱^μ)."""
    return LambdaTableau(
        t_lambda(shape.lam), tuple(t_lambda((m,)).components[0] for m in shape.mu)
    )


# ---------------------------------------------------------------------------
# dominance on shapes Λ and Λ-tableaux


def _strictly_above_1(a_items, b_items, compare):
    """∃σ permuting components with (a_σ) ▷ b componentwise."""
    m = len(a_items)
    if m != len(b_items):
        return False
    for sigma in itertools.permutations(range(m)):
        perm = [a_items[s] for s in sigma]
        verdicts = [compare(x, y) for x, y in zip(perm, b_items)]
        if all(v in (GREATER, EQUAL) for v in verdicts) and any(v == GREATER for v in verdicts):
            return True
    return False


def _cmp_part(x, y):
    if sum(x) != sum(y):
        return INCOMPARABLE
    return compare_compositions(x, y)


def _mu_above(mu, nu):
    verdicts = [_cmp_part(a, b) for a, b in zip(mu, nu)]
    return all(v in (GREATER, EQUAL) for v in verdicts) and any(v == GREATER for v in verdicts)


def shape_above(a: LambdaShape, b: LambdaShape) -> bool:
    """Λ ▷ Λ̄."""
    if a.lam.norm() != b.lam.norm():
        return False
    if _strictly_above_1(a.lam.components, b.lam.components, _cmp_part):
        return True
    return a.lam == b.lam and _mu_above(a.mu, b.mu)


def compare_shapes(a: LambdaShape, b: LambdaShape):
    if a == b:
        return EQUAL
    return _order(shape_above(a, b), shape_above(b, a), False)


def _tableau_components_above(s: MultiTableau, t: MultiTableau) -> bool:
    def cmp(x, y):
        x, y = MultiTableau((x,)), MultiTableau((y,))
        return compare_tableaux(x, y)

    return _strictly_above_1(s.components, t.components, cmp)


def lambda_tableau_above(a: LambdaTableau, b: LambdaTableau) -> bool:
    sa, sb = a.shape(), b.shape()
    if not (sa == sb or shape_above(sa, sb)):
        return False
    if sa.lam.norm() != sb.lam.norm():
        return False
    if len(a.t.components) == len(b.t.components) and _tableau_components_above(a.t, b.t):
        return True
    if a.t == b.t and len(a.u) == len(b.u):
        verdicts = [
            compare_tableaux(MultiTableau((x,)), MultiTableau((y,)))
            if sum(map(len, x)) == sum(map(len, y))
            else INCOMPARABLE
            for x, y in zip(a.u, b.u)
        ]
        return all(v in (GREATER, EQUAL) for v in verdicts) and any(v == GREATER for v in verdicts)
    return False


def dominance(a, b):
    """Compare two objects of the same kind; returns less/greater/equal/incomparable."""
    if type(a) is not type(b):
        raise UsageError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, tuple):
        return compare_compositions(a, b)
    if isinstance(a, MultiPartition):
        return compare_multicompositions(a, b)
    if isinstance(a, MultiTableau):
        if not (a.is_row_standard() and b.is_row_standard()):
            raise UsageError("dominance is defined on row-standard tableaux")
        return compare_tableaux(a, b)
    if isinstance(a, LambdaShape):
        return compare_shapes(a, b)
    if isinstance(a, LambdaTableau):
        if a == b:
            return EQUAL
        return _order(lambda_tableau_above(a, b), lambda_tableau_above(b, a), False)
    raise UsageError(f"no dominance order on {type(a).__name__}")
