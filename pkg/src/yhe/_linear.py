"""Finitely supported linear combinations over a hashable basis."""

from __future__ import annotations

from .scalars import Scalar, UsageError


def add_into(acc: dict, key, coeff: Scalar):
    if key in acc:
        s = acc[key] + coeff
        if s.terms:
            acc[key] = s
        else:
            del acc[key]
    elif coeff.terms:
        acc[key] = coeff


class LinearCombination:
    """Base for algebra elements; subclasses define the basis and products."""

    __slots__ = ("terms",)

    def _params(self):
        raise NotImplementedError

    def _new(self, terms):
        raise NotImplementedError

    @property
    def r(self):
        raise NotImplementedError

    def _check(self, other):
        if type(other) is not type(self) or other._params() != self._params():
            raise UsageError(f"incompatible elements: {self._params()} vs {getattr(other, '_params', lambda: other)()}")

    def _scalar(self, c) -> Scalar:
        if isinstance(c, Scalar):
            if c.r != self.r:
                raise UsageError("scalar has the wrong r")
            return c
        return Scalar.from_rational(self.r, c)

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return self + self.one() * other
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            add_into(acc, k, c)
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._scalar(c)
        if not c.terms:
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LinearCombination):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return type(self) is type(other) and self._params() == other._params() and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self.one() * other
        return NotImplemented

    def __hash__(self):
        return hash((self._params(), frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key) -> Scalar:
        return self.terms.get(key, Scalar.zero(self.r))

    def one(self):
        raise NotImplementedError

    def multiply(self, other):
        """Product: right-multiply self by each basis term of other."""
        self._check(other)
        acc = {}
        for key, c in other.terms.items():
            part = self._rmul_basis(key)
            for k, v in part.items():
                add_into(acc, k, v * c)
        return self._new(acc)

    def _rmul_basis(self, key) -> dict:
        raise NotImplementedError
