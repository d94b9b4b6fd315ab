"""The symmetric group acting on {1..n} from the right.

``i w`` denotes the image of ``i``; products compose left to right, so
``i (u v) = (i u) v``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .scalars import UsageError


class Perm:
    """A permutation in one-line notation: ``images[i-1] = i w``."""

    __slots__ = ("images", "_inv", "_hash")

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise UsageError(f"{list(images)} is not a permutation")
        self.images = images
        self._inv = None
        self._hash = hash(images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def s(cls, i, n):
        if not 1 <= i < n:
            raise UsageError(f"s_{i} is not a generator of S_{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def from_word(cls, word, n):
        w = cls.identity(n)
        for i in word:
            w = w * cls.s(i, n)
        return w

    @classmethod
    def transposition(cls, a, b, n):
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(img)

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*", text)
        if not m:
            raise UsageError(f"bad permutation {text!r}")
        return cls([int(x) for x in m.group(1).split(",")] if m.group(1) else [])

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.n != self.n:
            raise UsageError("permutations of different degrees")
        o = other.images
        return Perm(o[x - 1] for x in self.images)

    def inverse(self) -> "Perm":
        if self._inv is None:
            inv = [0] * self.n
            for i, x in enumerate(self.images, 1):
                inv[x - 1] = i
            self._inv = Perm(inv)
        return self._inv

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.images < other.images

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images, 1))

    def length(self):
        return perm_length(self.images)

    def right_descent(self, i):
        """True iff l(w s_i) < l(w)."""
        return right_descent(self.images, i)

    def reduced_word(self):
        return list(reduced_word_images(self.images))

    def cycles(self):
        seen = set()
        out = []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_str(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"Perm({list(self.images)})"


def perm_length(images) -> int:
    n = len(images)
    return sum(1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b])


def right_descent(images, i) -> bool:
    # positions of the values i and i+1
    return images.index(i) > images.index(i + 1)


@lru_cache(maxsize=None)
def reduced_word_images(images: tuple) -> tuple:
    """Deterministic reduced word: peel the smallest right descent each step."""
    img = list(images)
    word = []
    while True:
        pos = {v: p for p, v in enumerate(img)}
        for i in range(1, len(img)):
            if pos[i] > pos[i + 1]:
                break
        else:
            break
        # w = w' s_i with w' = w s_i: swap the values i and i+1
        img[pos[i]], img[pos[i + 1]] = i + 1, i
        word.append(i)
    return tuple(reversed(word))


def reduced_word(w: Perm) -> list:
    return list(reduced_word_images(w.images))


def all_perms(n):
    return [Perm(p) for p in itertools.permutations(range(1, n + 1))]


def longest_element(n):
    return Perm(range(n, 0, -1))


def row_ranges(shape):
    """Consecutive entry ranges of the rows of t^shape, for a multicomposition."""
    out = []
    nxt = 1
    for comp in shape:
        for length in comp:
            out.append(tuple(range(nxt, nxt + length)))
            nxt += length
    return out


def young_subgroup(shape):
    """All elements of the row stabilizer of t^shape."""
    rows = row_ranges(shape)
    n = sum(len(r) for r in rows)
    out = []
    for choice in itertools.product(*(itertools.permutations(r) for r in rows)):
        img = list(range(1, n + 1))
        for row, perm in zip(rows, choice):
            for a, b in zip(row, perm):
                img[a - 1] = b
        out.append(Perm(img))
    return out


def coset_decompose(w: Perm, shape):
    """Write ``w = y d`` with y in the Young subgroup of ``shape`` and d distinguished."""
    rows = row_ranges(shape)
    if sum(len(r) for r in rows) != w.n:
        raise UsageError("shape size does not match permutation degree")
    d_img = []
    for row in rows:
        d_img.extend(sorted(w(j) for j in row))
    d = Perm(d_img)
    y = w * d.inverse()
    return y, d


def is_distinguished(d: Perm, shape) -> bool:
    return all(
        d(a) < d(b) for row in row_ranges(shape) for a, b in zip(row, row[1:])
    )
