"""Exact coefficients: Laurent polynomials in q over the cyclotomic field Q(z).

A :class:`Scalar` stores ``{q_exponent: coefficient vector}`` where each vector
has length phi(r) and holds the coordinates in the basis 1, z, ..., z^(phi-1)
of Q[z]/Phi_r(z).  :class:`Cyclo` is the constant (q-free) view of the same
vectors.  :class:`RatFunc` is a normalized quotient of two Scalars, used only
inside linear solves.
"""

from __future__ import annotations

import re
from functools import lru_cache
from numbers import Rational

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


class UsageError(ValueError):
    """Raised for malformed input or mismatched parameters."""


# ---------------------------------------------------------------------------
# cyclotomic field data


def _poly_divmod_int(a, b):
    a = list(a)
    out = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        c = a[-1] // b[-1]
        out[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        while a and a[-1] == 0:
            a.pop()
    return out, a


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_r, lowest degree first."""
    if r < 1:
        raise UsageError("r must be positive")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_poly(d))
            assert not any(rem)
    return tuple(poly)


class _Field:
    """Multiplication tables for Q[z]/Phi_r."""

    def __init__(self, r):
        self.r = r
        phi_poly = cyclotomic_poly(r)
        self.phi = phi = len(phi_poly) - 1
        # powers[k] = coordinates of z^k, 0 <= k < r
        powers = []
        cur = [ONE] + [ZERO] * (phi - 1)
        for _ in range(r):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [ZERO] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * phi_poly[i]
        self.powers = tuple(powers)
        self.one = powers[0]
        self.zero = tuple([ZERO] * phi)

    def mul(self, a, b):
        if self.phi == 1:
            return (a[0] * b[0],)
        out = [ZERO] * self.phi
        pw = self.powers
        r = self.r
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, v in enumerate(pw[(i + j) % r]):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def inv(self, a):
        if self.phi == 1:
            if not a[0]:
                raise ZeroDivisionError("inverse of zero")
            return (ONE / a[0],)
        # solve a * x = 1 through the multiplication matrix of a
        phi = self.phi
        cols = []
        for j in range(phi):
            basis = [ZERO] * phi
            basis[j] = ONE
            cols.append(self.mul(a, tuple(basis)))
        rows = [[cols[j][i] for j in range(phi)] + [ONE if i == 0 else ZERO] for i in range(phi)]
        for c in range(phi):
            piv = next((i for i in range(c, phi) if rows[i][c]), None)
            if piv is None:
                raise ZeroDivisionError("inverse of zero")
            rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            rows[c] = [v / p for v in rows[c]]
            for i in range(phi):
                if i != c and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return tuple(rows[i][phi] for i in range(phi))


@lru_cache(maxsize=None)
def field(r: int) -> _Field:
    return _Field(r)


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vscale(c, a):
    return tuple(c * x for x in a)


def _to_mpq(c):
    if isinstance(c, int):
        return mpq(c)
    if isinstance(c, Rational) or type(c).__name__ == "mpq":
        return mpq(c)
    raise TypeError(f"cannot coerce {c!r} to a rational")


# ---------------------------------------------------------------------------


class Cyclo:
    """An element of Q(zeta_r)."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r, coeffs):
        F = field(r)
        coeffs = tuple(_to_mpq(c) for c in coeffs)
        if len(coeffs) != F.phi:
            raise UsageError(f"expected {F.phi} coefficients for r={r}")
        self.r = r
        self.coeffs = coeffs

    @classmethod
    def z_power(cls, r, k):
        return cls(r, field(r).powers[k % r])

    @classmethod
    def rational(cls, r, c):
        F = field(r)
        return cls(r, _vscale(_to_mpq(c), F.one))

    def __add__(self, other):
        return Cyclo(self.r, _vadd(self.coeffs, _coerce_cyclo(self.r, other).coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        return Cyclo(self.r, _vsub(self.coeffs, _coerce_cyclo(self.r, other).coeffs))

    def __rsub__(self, other):
        return _coerce_cyclo(self.r, other) - self

    def __neg__(self):
        return Cyclo(self.r, _vscale(-ONE, self.coeffs))

    def __mul__(self, other):
        other = _coerce_cyclo(self.r, other)
        return Cyclo(self.r, field(self.r).mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        return Cyclo(self.r, field(self.r).inv(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Cyclo.rational(self.r, other)
        return isinstance(other, Cyclo) and self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __repr__(self):
        return f"Cyclo({self.r}, {str(Scalar.constant(self))})"


def _coerce_cyclo(r, x):
    if isinstance(x, Cyclo):
        if x.r != r:
            raise UsageError("mismatched r")
        return x
    return Cyclo.rational(r, x)


# ---------------------------------------------------------------------------


class Scalar:
    """Laurent polynomial in q with coefficients in Q(zeta_r); immutable."""

    __slots__ = ("r", "terms", "_hash")

    def __init__(self, r: int, terms=None, _trusted=False):
        self.r = r
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        F = field(r)
        clean = {}
        for e, v in (terms or {}).items():
            if isinstance(v, Cyclo):
                v = v.coeffs
            v = tuple(_to_mpq(c) for c in v)
            if len(v) != F.phi:
                raise UsageError("coefficient vector has wrong length")
            if any(v):
                clean[int(e)] = v
        self.terms = clean

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, r):
        return cls(r, {}, _trusted=True)

    @classmethod
    def one(cls, r):
        return cls(r, {0: field(r).one}, _trusted=True)

    @classmethod
    def from_rational(cls, r, c):
        c = _to_mpq(c)
        if not c:
            return cls.zero(r)
        return cls(r, {0: _vscale(c, field(r).one)}, _trusted=True)

    @classmethod
    def q(cls, r, k=1):
        return cls(r, {k: field(r).one}, _trusted=True)

    @classmethod
    def z(cls, r, k=1):
        return cls(r, {0: field(r).powers[k % r]}, _trusted=True)

    @classmethod
    def monomial(cls, r, c, qexp=0, zexp=0):
        v = _vscale(_to_mpq(c), field(r).powers[zexp % r])
        return cls(r, {qexp: v} if any(v) else {}, _trusted=True)

    @classmethod
    def constant(cls, c: Cyclo):
        return cls(c.r, {0: c.coeffs} if any(c.coeffs) else {}, _trusted=True)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.r != self.r:
                raise UsageError(f"mismatched r: {self.r} vs {other.r}")
            return other
        if isinstance(other, Cyclo):
            if other.r != self.r:
                raise UsageError("mismatched r")
            return Scalar.constant(other)
        if isinstance(other, (int, Rational)) or type(other).__name__ == "mpq":
            return Scalar.from_rational(self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, v in other.terms.items():
            if e in out:
                s = _vadd(out[e], v)
                if any(s):
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = v
        return Scalar(self.r, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.r, {e: _vscale(-ONE, v) for e, v in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Scalar.zero(self.r)
        F = field(self.r)
        out = {}
        if F.phi == 1:
            for e1, v1 in a.items():
                x = v1[0]
                for e2, v2 in b.items():
                    e = e1 + e2
                    out[e] = out.get(e, ZERO) + x * v2[0]
            return Scalar(self.r, {e: (c,) for e, c in out.items() if c}, _trusted=True)
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                p = F.mul(v1, v2)
                e = e1 + e2
                out[e] = _vadd(out[e], p) if e in out else p
        return Scalar(self.r, {e: v for e, v in out.items() if any(v)}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.one(self.r)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_unit():
            return self * other.inverse()
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    # predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_unit(self):
        """True when self is c*q^k with c a nonzero element of Q(zeta)."""
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def inverse(self):
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        if len(self.terms) != 1:
            raise UsageError(f"{self} is not a unit of the Laurent ring; use RatFunc")
        (e, v), = self.terms.items()
        return Scalar(self.r, {-e: field(self.r).inv(v)}, _trusted=True)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    # structure ------------------------------------------------------------
    def min_degree(self):
        return min(self.terms)

    def max_degree(self):
        return max(self.terms)

    def coefficient(self, k) -> Cyclo:
        return Cyclo(self.r, self.terms.get(k, field(self.r).zero))

    def shift(self, k):
        return Scalar(self.r, {e + k: v for e, v in self.terms.items()}, _trusted=True)

    def bar(self):
        """q -> q^-1, z -> z^-1."""
        out = Scalar.zero(self.r)
        for e, v in self.terms.items():
            for j, c in enumerate(v):
                if c:
                    out = out + Scalar.monomial(self.r, c, -e, -j)
        return out

    def at_q_one(self) -> Cyclo:
        acc = field(self.r).zero
        for v in self.terms.values():
            acc = _vadd(acc, v)
        return Cyclo(self.r, acc)

    # text -----------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self.r}, '{format_scalar(self)}')"


def scalar_invert(a: Scalar):
    """Inverse of ``a``: a Scalar when ``a`` is a unit, otherwise a RatFunc."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero")
    if a.is_unit():
        return a.inverse()
    return RatFunc(Scalar.one(a.r), a)


def quantum_integer(r, m):
    """[m]_q = (q^{2m} - 1)/(q^2 - 1) for m >= 0."""
    out = Scalar.zero(r)
    for k in range(m):
        out = out + Scalar.q(r, 2 * k)
    return out


# ---------------------------------------------------------------------------
# text grammar


def format_scalar(a: Scalar) -> str:
    if not a.terms:
        return "0"
    pieces = []
    for e in sorted(a.terms, reverse=True):
        for j, c in enumerate(a.terms[e]):
            if not c:
                continue
            factors = []
            if j:
                factors.append("z" if j == 1 else f"z^{j}")
            if e:
                factors.append("q" if e == 1 else f"q^{e}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            pieces.append((c < 0, "*".join(factors)))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TERM_FACTOR = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([zq])(?:\s*\^\s*(-?\d+))?)\s*")


def parse_scalar(text: str, r: int) -> Scalar:
    """Parse ``1/2*z^2*q^-3 + 2``-style text."""
    s = text.strip()
    if not s:
        raise UsageError("empty scalar")
    total = Scalar.zero(r)
    # split into signed terms; a sign right after '^' belongs to the exponent
    terms = []
    buf = ""
    depth_sign = None
    for ch in s:
        if ch in "+-" and (not buf.strip() or not buf.rstrip().endswith("^")):
            if buf.strip():
                terms.append((depth_sign or 1, buf))
                buf = ""
                depth_sign = None
            depth_sign = (depth_sign or 1) * (-1 if ch == "-" else 1)
        else:
            buf += ch
    if not buf.strip():
        raise UsageError(f"dangling sign in {text!r}")
    terms.append((depth_sign or 1, buf))
    for sgn, body in terms:
        coeff = mpq(sgn)
        qexp = 0
        zexp = 0
        for factor in body.split("*"):
            m = _TERM_FACTOR.fullmatch(factor)
            if not m:
                raise UsageError(f"bad scalar factor {factor.strip()!r} in {text!r}")
            if m.group(1):
                coeff *= mpq(m.group(1))
            else:
                k = int(m.group(3)) if m.group(3) else 1
                if m.group(2) == "q":
                    qexp += k
                else:
                    zexp += k
        total = total + Scalar.monomial(r, coeff, qexp, zexp)
    return total


# ---------------------------------------------------------------------------
# Laurent polynomial division and gcd, used by RatFunc


def _as_poly(a: Scalar):
    lo = a.min_degree()
    hi = a.max_degree()
    F = field(a.r)
    return lo, [a.terms.get(e, F.zero) for e in range(lo, hi + 1)]


def _poly_divmod(a, b, F):
    """Divide coefficient-vector polynomials (lowest degree first)."""
    a = list(a)
    lead_inv = F.inv(b[-1])
    quot = [F.zero] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        if any(a[-1]):
            c = F.mul(a[-1], lead_inv)
            shift = len(a) - len(b)
            quot[shift] = c
            for i, bi in enumerate(b):
                if any(bi):
                    a[i + shift] = _vsub(a[i + shift], F.mul(c, bi))
        a.pop()
    while a and not any(a[-1]):
        a.pop()
    return quot, a


def _poly_gcd(a, b, F):
    while b:
        _, rem = _poly_divmod(a, b, F)
        a, b = b, rem
    inv = F.inv(a[-1])
    return [F.mul(inv, c) for c in a]


def _from_poly(r, lo, coeffs):
    return Scalar(r, {lo + i: c for i, c in enumerate(coeffs) if any(c)}, _trusted=True)


def laurent_divmod(a: Scalar, b: Scalar):
    """Return (quotient, remainder) treating both as polynomials after shifting."""
    F = field(a.r)
    if b.is_zero():
        raise ZeroDivisionError
    if a.is_zero():
        return Scalar.zero(a.r), Scalar.zero(a.r)
    la, pa = _as_poly(a)
    lb, pb = _as_poly(b)
    quot, rem = _poly_divmod(pa, pb, F)
    return _from_poly(a.r, la - lb, quot), _from_poly(a.r, la, rem)


def laurent_gcd(a: Scalar, b: Scalar) -> Scalar:
    """Monic gcd with nonzero constant term (units are monomials)."""
    F = field(a.r)
    _, pa = _as_poly(a)
    _, pb = _as_poly(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    return _from_poly(a.r, 0, _poly_gcd(pa, pb, F))


class RatFunc:
    """Normalized quotient num/den of Scalars.

    The denominator is a monic polynomial in q with nonzero constant term,
    coprime to the numerator.  When it is 1 the value is a Laurent polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Scalar | None = None, _normal=False):
        if den is None:
            self.num = num
            self.den = Scalar.one(num.r)
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if _normal:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = num, Scalar.one(num.r)
            return
        if den.is_unit():
            self.num, self.den = num * den.inverse(), Scalar.one(num.r)
            return
        g = laurent_gcd(num, den)
        if len(g.terms) > 1:
            num = laurent_divmod(num, g)[0]
            den = laurent_divmod(den, g)[0]
        # den -> monic with constant term: move q^lo and leading coefficient to num
        lo = den.min_degree()
        lead = den.terms[den.max_degree()]
        unit = Scalar(den.r, {lo: lead}, _trusted=True)
        uinv = unit.inverse()
        self.num = num * uinv
        self.den = den * uinv

    @property
    def r(self):
        return self.num.r

    def is_polynomial(self):
        return self.den.is_unit()

    def to_scalar(self) -> Scalar:
        if not self.den.is_unit():
            raise UsageError(f"{self} is not a Laurent polynomial")
        return self.num * self.den.inverse()

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def _c(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Scalar):
            return RatFunc(other)
        return RatFunc(Scalar.from_rational(self.r, other))

    def __add__(self, other):
        o = self._c(other)
        if self.den.is_unit() and o.den.is_unit():
            return RatFunc(self.num + o.num)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normal=True)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        o = self._c(other)
        if self.den.is_unit() and o.den.is_unit():
            return RatFunc(self.num * o.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._c(other).inverse()

    def __rtruediv__(self, other):
        return self._c(other) / self

    def __eq__(self, other):
        o = self._c(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == Scalar.one(self.r):
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__
