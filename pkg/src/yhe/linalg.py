"""Exact linear algebra over Q(zeta_r)(q).

Rank uses sparse elimination that pivots on monomial entries when it can
(those are units of the Laurent ring, so no fractions appear) and falls back
to fraction-free row combinations otherwise.  Square solves go through
Gauss-Jordan over :class:`RatFunc`.
"""

from __future__ import annotations

from .scalars import RatFunc, Scalar, UsageError


def _pick_pivot(row: dict):
    best = None
    for col, v in row.items():
        score = (0 if v.is_unit() else 1, len(v.terms), col)
        if best is None or score < best[0]:
            best = (score, col)
    return best[1]


def _combine(row, a: Scalar, prow, b: Scalar):
    """Return a*row - b*prow as a sparse dict."""
    out = {}
    if a != 1:
        for k, v in row.items():
            out[k] = v * a
    else:
        out = dict(row)
    for k, v in prow.items():
        s = out.get(k)
        d = v * b
        s = -d if s is None else s - d
        if s.terms:
            out[k] = s
        else:
            out.pop(k, None)
    return out


class SparseEchelon:
    """Incremental row echelon form; ``add`` returns True when the row is new."""

    def __init__(self):
        self.pivots = []  # (col, row)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v.terms}
        for col, prow in self.pivots:
            a = row.get(col)
            if a is None:
                continue
            p = prow[col]
            if p.is_unit():
                row = _combine(row, Scalar.one(p.r), prow, a * p.inverse())
            else:
                row = _combine(row, p, prow, a)
            if not row:
                break
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        self.pivots.append((_pick_pivot(row), row))
        return True

    @property
    def rank(self):
        return len(self.pivots)


def sparse_rank(rows) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def _rf(x):
    return x if isinstance(x, RatFunc) else RatFunc(x)


def _rf_score(x: RatFunc):
    if x.den.is_unit():
        return (0 if x.num.is_unit() else 1, len(x.num.terms))
    return (2, len(x.num.terms) + len(x.den.terms))


def invert_matrix(mat):
    """Inverse of a square matrix of Scalars/RatFuncs; raises on singular input."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise UsageError("matrix is not square")
    r = None
    for row in mat:
        for x in row:
            r = x.r
            break
        break
    zero = RatFunc(Scalar.zero(r))
    one = RatFunc(Scalar.one(r))
    aug = [[_rf(x) for x in row] + [one if i == j else zero for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        cands = [i for i in range(c, n) if aug[i][c]]
        if not cands:
            raise ZeroDivisionError("singular matrix")
        piv = min(cands, key=lambda i: _rf_score(aug[i][c]))
        aug[c], aug[piv] = aug[piv], aug[c]
        pinv = aug[c][c].inverse()
        aug[c] = [x * pinv if x else x for x in aug[c]]
        for i in range(n):
            f = aug[i][c]
            if i != c and f:
                rowc = aug[c]
                aug[i] = [x - f * y if y else x for x, y in zip(aug[i], rowc)]
    return [row[n:] for row in aug]


def simplify(x):
    """A RatFunc that is a Laurent polynomial becomes a Scalar."""
    if isinstance(x, RatFunc) and x.is_polynomial():
        return x.to_scalar()
    return x


class BlockSolver:
    """Coordinates with respect to a basis whose vectors each live in one block.

    ``vectors`` are dicts coordinate -> Scalar, ``block_of`` maps a coordinate
    to its block, and ``coords`` lists every coordinate of the ambient space.
    """

    def __init__(self, vectors, block_of, coords):
        self.block_of = block_of
        blocks = {}
        for c in coords:
            blocks.setdefault(block_of(c), {"coords": [], "basis": []})["coords"].append(c)
        for idx, vec in enumerate(vectors):
            ids = {block_of(c) for c in vec}
            if len(ids) != 1:
                raise UsageError(f"basis vector {idx} is spread over blocks {ids}")
            blocks[ids.pop()]["basis"].append(idx)
        self.blocks = blocks
        for bid, data in blocks.items():
            cs, bs = data["coords"], data["basis"]
            if len(cs) != len(bs):
                raise UsageError(f"block {bid}: {len(bs)} vectors for {len(cs)} coordinates")
            mat = [[vectors[b].get(c, Scalar.zero(_r(vectors))) for c in cs] for b in bs]
            data["inverse"] = [[simplify(x) for x in row] for row in invert_matrix(mat)]
            data["index"] = {c: i for i, c in enumerate(cs)}

    def solve(self, vec: dict) -> dict:
        """Coefficients c with sum c_i vectors_i = vec."""
        grouped = {}
        for c, v in vec.items():
            if not v:
                continue
            grouped.setdefault(self.block_of(c), []).append((c, v))
        out = {}
        for bid, items in grouped.items():
            data = self.blocks.get(bid)
            if data is None:
                raise UsageError(f"coordinate block {bid} not spanned")
            inv = data["inverse"]
            idx = data["index"]
            for j, b in enumerate(data["basis"]):
                acc = None
                for c, v in items:
                    e = inv[idx[c]][j]
                    if e:
                        term = e * v if isinstance(e, RatFunc) else v * e
                        acc = term if acc is None else acc + term
                if acc is not None and acc:
                    out[b] = simplify(acc)
        return out


def _r(vectors):
    for v in vectors:
        for x in v.values():
            return x.r
    raise UsageError("empty basis")
