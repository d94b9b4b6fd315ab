"""Text grammar and JSON export for algebra elements.

Y_{r,n}:  ``t1^2*g[2,1,3] + (q - q^-1)*g1*g2``; also ``e1``, ``e[1,3]``, ``g1^-1``.
E_n:      ``E{1,3|2}*g[2,1,3] + q^2*e1``.
Scalars may appear anywhere as rationals, ``q``, ``z`` and parenthesized sums.
"""

from __future__ import annotations

import json
import re


from .combinatorics import SetPartition
from .scalars import Scalar, UsageError, format_scalar, parse_scalar
from .symgroup import Perm, perm_length

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<perm>g\s*\[[^\]]*\])
  | (?P<epair>e\s*\[[^\]]*\])
  | (?P<setp>E\s*\{[^}]*\})
  | (?P<gen>[tge]\d+)
  | (?P<sym>[qz])
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


class ParseError(UsageError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"parse error at position {pos}: unexpected {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent; values are Scalars or algebra elements."""

    def __init__(self, text, ctx):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.text = text

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise ParseError(f"parse error at position {tok[2]}: expected {value!r}, found {tok[1] or 'end'!r}")
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"parse error at position {tok[2]}: unexpected {tok[1]!r}")
        return self.ctx.promote(val)

    def expr(self):
        sign = 1
        while self.peek()[1] in "+-" and self.peek()[0] == "op":
            if self.take()[1] == "-":
                sign = -sign
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = self.ctx.add(val, rhs if op == "+" else -rhs)
        return val

    def term(self):
        val = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                val = self.ctx.mul(val, rhs)
            else:
                if not isinstance(rhs, Scalar):
                    raise ParseError("division by an algebra element")
                val = self.ctx.mul(val, rhs.inverse() if rhs.is_unit() else _bad_div(rhs))
        return val

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            t = self.take()
            if t[0] != "num":
                raise ParseError(f"parse error at position {t[2]}: exponent must be an integer")
            k = int(t[1]) * (-1 if neg else 1)
            base = self.ctx.power(base, k, t[2])
        return base

    def atom(self):
        kind, val, pos = self.take()
        ctx = self.ctx
        if kind == "num":
            return Scalar.from_rational(ctx.r, int(val))
        if kind == "sym":
            return Scalar.q(ctx.r) if val == "q" else Scalar.z(ctx.r)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "gen":
            return ctx.generator(val[0], int(val[1:]), pos)
        if kind == "perm":
            return ctx.perm(Perm.parse(val[1:].strip()), pos)
        if kind == "epair":
            nums = re.findall(r"\d+", val)
            if len(nums) != 2:
                raise ParseError(f"parse error at position {pos}: e[i,j] needs two indices")
            return ctx.epair(int(nums[0]), int(nums[1]), pos)
        if kind == "setp":
            return ctx.setpart(SetPartition.parse(val[1:].strip()), pos)
        raise ParseError(f"parse error at position {pos}: unexpected {val or 'end'!r}")


def _bad_div(x):
    raise ParseError(f"cannot divide by the non-unit {x}")


class _Ctx:
    def __init__(self, r, n):
        self.r, self.n = r, n

    def promote(self, v):
        return self.one().scale(v) if isinstance(v, Scalar) else v

    def add(self, a, b):
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a + b
        return self.promote(a) + self.promote(b)

    def mul(self, a, b):
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a * b
        if isinstance(a, Scalar):
            return b.scale(a)
        if isinstance(b, Scalar):
            return a.scale(b)
        return a * b

    def power(self, base, k, pos):
        if isinstance(base, Scalar):
            if k < 0 and not base.is_unit():
                raise ParseError(f"parse error at position {pos}: negative power of a non-unit")
            return base ** k
        if k < 0:
            inv = self.inverse(base)
            if inv is None:
                raise ParseError(f"parse error at position {pos}: negative powers only for g_i")
            base, k = inv, -k
        out = self.one()
        for _ in range(k):
            out = out * base
        return out

    def _idx(self, i, top, pos, name):
        if not 1 <= i <= top:
            raise ParseError(f"parse error at position {pos}: {name}{i} out of range for n={self.n}")


class YContext(_Ctx):
    def one(self):
        from .yokonuma.algebra import y_one

        return y_one(self.r, self.n)

    def generator(self, letter, i, pos):
        from .yokonuma.algebra import y_ei, y_g, y_t

        if letter == "t":
            self._idx(i, self.n, pos, "t")
            return y_t(i, self.r, self.n)
        self._idx(i, self.n - 1, pos, letter)
        return y_g(i, self.r, self.n) if letter == "g" else y_ei(i, self.r, self.n)

    def perm(self, w, pos):
        from .yokonuma.algebra import y_gw

        if w.n != self.n:
            raise ParseError(f"parse error at position {pos}: permutation of degree {w.n}, expected {self.n}")
        return y_gw(w, self.r, self.n)

    def epair(self, i, j, pos):
        from .yokonuma.algebra import y_e

        self._idx(i, self.n, pos, "e")
        self._idx(j, self.n, pos, "e")
        return y_e(i, j, self.r, self.n)

    def setpart(self, A, pos):
        from .yokonuma.algebra import y_E

        if A.n != self.n:
            raise ParseError(f"parse error at position {pos}: set partition of {A.n}, expected {self.n}")
        return y_E(A, self.r)

    def inverse(self, x):
        from .yokonuma.algebra import y_inverse_gw

        if len(x.terms) == 1:
            ((k, w), c), = x.terms.items()
            if not any(k) and c == 1:
                return y_inverse_gw(Perm(w), self.r, self.n)
        return None


class EtContext(_Ctx):
    def __init__(self, n):
        super().__init__(1, n)

    def one(self):
        from .braidsties.algebra import et_one

        return et_one(self.n)

    def generator(self, letter, i, pos):
        from .braidsties.algebra import et_e, et_g

        if letter == "t":
            raise ParseError(f"parse error at position {pos}: no t generators in E_n")
        self._idx(i, self.n - 1, pos, letter)
        return et_g(i, self.n) if letter == "g" else et_e(i, self.n)

    def perm(self, w, pos):
        from .braidsties.algebra import et_gw

        if w.n != self.n:
            raise ParseError(f"parse error at position {pos}: permutation of degree {w.n}, expected {self.n}")
        return et_gw(w)

    def epair(self, i, j, pos):
        from .braidsties.algebra import et_e_pair

        self._idx(i, self.n, pos, "e")
        self._idx(j, self.n, pos, "e")
        return et_e_pair(i, j, self.n)

    def setpart(self, A, pos):
        from .braidsties.algebra import et_E

        if A.n != self.n:
            raise ParseError(f"parse error at position {pos}: set partition of {A.n}, expected {self.n}")
        return et_E(A)

    def inverse(self, x):
        from .braidsties.algebra import et_inverse_gw

        if len(x.terms) == 1:
            ((A, w), c), = x.terms.items()
            if all(len(b) == 1 for b in A) and c == 1:
                return et_inverse_gw(Perm(w))
        return None


def parse_y(text: str, r: int, n: int):
    return _Parser(text, YContext(r, n)).parse()


def parse_et(text: str, n: int):
    return _Parser(text, EtContext(n)).parse()


def parse_element(text: str, alg: str, r: int, n: int):
    if alg == "y":
        return parse_y(text, r, n)
    if alg == "et":
        return parse_et(text, n)
    raise UsageError(f"unknown algebra {alg!r}")


# ---------------------------------------------------------------------------
# printing


def _join_terms(items):
    """items: list of (coeff Scalar, monomial string or '')."""
    if not items:
        return "0"
    pieces = []
    for c, mono in items:
        neg = False
        if len(c.terms) == 1:
            (e, v), = c.terms.items()
            nz = [x for x in v if x]
            if len(nz) == 1 and nz[0] < 0:
                neg, c = True, -c
        cs = format_scalar(c)
        if not mono:
            body = cs if (len(c.terms) <= 1 and sum(1 for x in next(iter(c.terms.values())) if x) <= 1) else f"({cs})"
        elif c == 1:
            body = mono
        elif len(c.terms) == 1 and sum(1 for x in next(iter(c.terms.values())) if x) == 1:
            body = f"{cs}*{mono}"
        else:
            body = f"({cs})*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _perm_str(w):
    return "g[" + ",".join(map(str, w)) + "]"


def y_sort_key(key):
    k, w = key
    return (perm_length(w), w, k)


def format_y(x) -> str:
    items = []
    for key in sorted(x.terms, key=y_sort_key):
        k, w = key
        factors = [f"t{j}" if e == 1 else f"t{j}^{e}" for j, e in enumerate(k, 1) if e]
        if list(w) != list(range(1, len(w) + 1)):
            factors.append(_perm_str(w))
        items.append((x.terms[key], "*".join(factors)))
    return _join_terms(items)


def et_sort_key(key):
    A, w = key
    return (perm_length(w), w, -len(A), A)


def format_et(x) -> str:
    items = []
    for key in sorted(x.terms, key=et_sort_key):
        A, w = key
        factors = []
        if any(len(b) > 1 for b in A):
            factors.append(str(SetPartition(A)).replace("{", "E{", 1))
        if list(w) != list(range(1, len(w) + 1)):
            factors.append(_perm_str(w))
        items.append((x.terms[key], "*".join(factors)))
    return _join_terms(items)


def format_element(x) -> str:
    from .yokonuma.algebra import YElement

    return format_y(x) if isinstance(x, YElement) else format_et(x)


def element_to_json(x) -> dict:
    from .yokonuma.algebra import YElement

    if isinstance(x, YElement):
        terms = [
            {"coeff": format_scalar(x.terms[key]), "t": list(key[0]), "w": list(key[1])}
            for key in sorted(x.terms, key=y_sort_key)
        ]
        return {"r": x.r, "n": x.n, "terms": terms}
    terms = [
        {"coeff": format_scalar(x.terms[key]), "A": [list(b) for b in key[0]], "w": list(key[1])}
        for key in sorted(x.terms, key=et_sort_key)
    ]
    return {"n": x.n, "terms": terms}


def element_from_json(data: dict):
    from .braidsties.algebra import EtElement
    from .combinatorics import canonical_blocks
    from .yokonuma.algebra import YElement

    n = data["n"]
    if "r" in data:
        r = data["r"]
        terms = {}
        for t in data["terms"]:
            terms[(tuple(t["t"]), tuple(t["w"]))] = parse_scalar(t["coeff"], r)
        return YElement(r, n, {k: v for k, v in terms.items() if v})
    terms = {}
    for t in data["terms"]:
        terms[(canonical_blocks(t["A"]), tuple(t["w"]))] = parse_scalar(t["coeff"], 1)
    return EtElement(n, {k: v for k, v in terms.items() if v})


def dumps(x) -> str:
    return json.dumps(element_to_json(x), sort_keys=True)
