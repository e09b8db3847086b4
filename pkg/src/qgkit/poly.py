"""Multivariate polynomials over an exact field, plus a small text parser.

A polynomial is a dict ``{exponent tuple: coefficient}`` wrapped in
:class:`Polynomial`; zero coefficients are never stored.  Coefficients are
canonical field elements (ints mod p, or Fractions).
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import GF101


def grevlex_key(exp: tuple[int, ...]):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def lex_key(exp: tuple[int, ...]):
    return exp


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


class PolynomialRing:
    """k[x_1..x_n] with a fixed monomial order (grevlex by default)."""

    def __init__(self, variables: Iterable[str], field=GF101, order: str = "grevlex"):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.field = field
        self.order = order
        self.key = ORDERS[order]
        self.nvars = len(self.variables)

    def __repr__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}]"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.elt(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.elt(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.variables.index(name))

    def monomial(self, exp) -> "Polynomial":
        return Polynomial(self, {tuple(exp): self.field.elt(1)})

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent vectors of total degree d, in decreasing monomial order."""
        out = []
        for combo in itertools.combinations_with_replacement(range(self.nvars), d):
            e = [0] * self.nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=self.key, reverse=True)
        return out

    def monomial_str(self, exp) -> str:
        parts = []
        for v, e in zip(self.variables, exp):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.elt(out.get(e, 0) + c)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.elt(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = F.elt(out.get(e, 0) + c1 * c2)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure ------------------------------------------------------------
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def leading_exp(self):
        return max(self.terms, key=self.ring.key)

    def leading_coeff(self):
        return self.terms[self.leading_exp()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.leading_coeff())
        return Polynomial(self.ring, {e: F.elt(c * inv) for e, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        out = []
        for e, c in self.sorted_terms():
            c = F.signed(c)
            mono = self.ring.monomial_str(e)
            neg = c < 0
            mag = -c if neg else c
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


class ParseError(ValueError):
    """Polynomial text could not be parsed; carries a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.message = message


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    # grammar: expr := term (('+'|'-') term)*
    #          term := factor (('*' | '/') factor | factor)*   ('/' only by integers)
    #          factor := ('-'|'+') factor | atom ('^' int)?
    #          atom := int | var | '(' expr ')'

    def __init__(self, ring: PolynomialRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(0).strip() == "":
                break
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            val = m.group(1) or m.group(2) or m.group(3)
            self.tokens.append((kind, val, m.start(m.lastindex) + 1))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text) + 1)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial", 1)
        p = self._expr()
        kind, val, col = self._peek()
        if kind is not None:
            raise ParseError(f"unexpected {val!r}", col)
        return p

    def _expr(self):
        p = self._term()
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                q = self._term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def _term(self):
        p = self._factor()
        while True:
            kind, val, col = self._peek()
            if kind == "op" and val == "*":
                self._next()
                p = p * self._factor()
            elif kind == "op" and val == "/":
                self._next()
                k2, v2, c2 = self._next()
                if k2 != "int":
                    raise ParseError("division only by an integer", c2)
                d = int(v2)
                if d == 0 or self.ring.field.elt(d) == 0:
                    raise ParseError("division by zero in this field", c2)
                p = p * self.ring.field.inv(self.ring.field.elt(d))
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                p = p * self._factor()
            else:
                return p

    def _factor(self):
        kind, val, col = self._peek()
        if kind == "op" and val in "+-":
            self._next()
            f = self._factor()
            return -f if val == "-" else f
        base = self._atom()
        kind, val, col = self._peek()
        if kind == "op" and val == "^":
            self._next()
            k2, v2, c2 = self._next()
            if k2 != "int":
                raise ParseError("exponent must be a nonnegative integer", c2)
            base = base ** int(v2)
        return base

    def _atom(self):
        kind, val, col = self._next()
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.variables:
                raise ParseError(f"unknown variable {val!r}", col)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self._expr()
            k2, v2, c2 = self._next()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("expected ')'", c2)
            return p
        if kind is None:
            raise ParseError("unexpected end of input", col)
        raise ParseError(f"unexpected {val!r}", col)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]
