"""Multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to ``Fraction``
coefficients.  Term order is a property of the ring, so two rings that share
variable names but differ in order are different rings.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[int, ...]

ORDERS = ("lex", "grevlex")


class RingMismatch(ValueError):
    pass


def _lex_key(m: Monomial):
    return m


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


class PolyRing:
    """Polynomial ring Q[v1, ..., vn] with a fixed monomial order."""

    __slots__ = ("variables", "order", "key", "_hash")

    def __init__(self, variables: Iterable[str], order: str = "grevlex"):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.variables = variables
        self.order = order
        self.key = _lex_key if order == "lex" else _grevlex_key
        self._hash = hash((variables, order))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.order == other.order)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({list(self.variables)!r}, {self.order!r})"

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        return MultiPoly(self, {(0,) * self.nvars: Fraction(c)})

    def var(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        exp = [0] * self.nvars
        exp[i] = 1
        return MultiPoly(self, {tuple(exp): Fraction(1)})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exp: Monomial, coeff=1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exp): Fraction(coeff)})

    def parse(self, text: str) -> "MultiPoly":
        return parse_poly(self, text)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.variables, order)


def _coerce(ring: PolyRing, other) -> "MultiPoly":
    if isinstance(other, MultiPoly):
        if other.ring != ring:
            raise RingMismatch(f"{other.ring!r} vs {ring!r}")
        return other
    if isinstance(other, (int, Fraction)):
        return ring.const(other)
    return NotImplemented


class MultiPoly:
    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms: Dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in terms.items() if c != 0}
        self._sorted = None
        self._hash = None

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        """Terms in descending monomial order."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(),
                                  key=lambda mc: self.ring.key(mc[0]),
                                  reverse=True)
        return self._sorted

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def lm(self) -> Monomial:
        return self.sorted_terms()[0][0]

    def lc(self) -> Fraction:
        return self.sorted_terms()[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        c = self.lc()
        return MultiPoly(self.ring, {m: v / c for m, v in self.terms.items()})

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Fraction) -> "MultiPoly":
        return MultiPoly(self.ring, {tuple(a + b for a, b in zip(m, mono)): v * c
                                     for m, v in self.terms.items()})

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises if a remainder is left."""
        other = _coerce(self.ring, other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        from .groebner import divide
        quots, rem = divide(self, [other])
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quots[0]

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute variables by constants or polynomials of the same ring."""
        ring = self.ring
        images = []
        for v in ring.variables:
            if v in values:
                images.append(_coerce(ring, values[v]))
            else:
                images.append(ring.var(v))
        out = ring.zero()
        for m, c in self.terms.items():
            term = ring.const(c)
            for img, e in zip(images, m):
                if e:
                    term = term * img ** e
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        p = self.subs(values)
        if not p.is_constant():
            raise ValueError("not all variables were assigned")
        return p.terms.get((0,) * p.ring.nvars, Fraction(0))

    def to_ring(self, ring: PolyRing) -> "MultiPoly":
        """Move into another ring by variable name.

        Variables missing from the target must not occur in the polynomial.
        """
        pos = {v: i for i, v in enumerate(ring.variables)}
        out = {}
        for m, c in self.terms.items():
            exp = [0] * ring.nvars
            for v, e in zip(self.ring.variables, m):
                if e:
                    if v not in pos:
                        raise RingMismatch(f"variable {v} not in {ring!r}")
                    exp[pos[v]] = e
            out[tuple(exp)] = c
        return MultiPoly(ring, out)

    # -- comparison / printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        factors = []
        for v, e in zip(p.ring.variables, m):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else _format_coeff(mag) + "*" + "*".join(factors)
        else:
            body = _format_coeff(mag)
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-])|(\()|(\)))")


class ParseError(ValueError):
    pass


def parse_poly(ring: PolyRing, text: str) -> MultiPoly:
    """Parse sums of products like ``"3/2*a^2*x - b*y + 1"``.

    Parentheses and integer powers of parenthesised groups are accepted as a
    convenience; the printed form never uses them.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:]!r}")
        pos = m.end()
        num, name, caret, star, sign, lp, rp = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num)))
        elif name is not None:
            if name not in ring.variables:
                raise ParseError(f"unknown variable {name!r}")
            tokens.append(("var", name))
        elif caret:
            tokens.append(("^", None))
        elif star:
            tokens.append(("*", None))
        elif sign:
            tokens.append((sign, None))
        elif lp:
            tokens.append(("(", None))
        else:
            tokens.append((")", None))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not tokens:
        raise ParseError("empty polynomial")

    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(kind=None):
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of input")
        tok = tokens[i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[0]!r}")
        i += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        acc = term().scale(sign)
        while peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
            acc = acc + term().scale(sign)
        return acc

    def term():
        acc = power()
        while peek() == "*":
            take()
            acc = acc * power()
        return acc

    def power():
        base = atom()
        if peek() == "^":
            take()
            exp = take("num")[1]
            if exp.denominator != 1:
                raise ParseError("fractional exponent")
            base = base ** int(exp)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return ring.const(val)
        if kind == "var":
            return ring.var(val)
        if kind == "(":
            inner = expr()
            take(")")
            return inner
        raise ParseError(f"unexpected token {kind!r}")

    result = expr()
    if i != len(tokens):
        raise ParseError(f"trailing tokens starting at token {i}")
    return result
