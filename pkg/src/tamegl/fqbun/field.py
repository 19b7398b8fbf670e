"""Prime fields, linear algebra over them, and Laurent polynomials in t."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

SUPPORTED_Q = (2, 3, 5)


class UnsupportedField(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class FqConfig:
    q: int

    def __post_init__(self):
        if self.q not in SUPPORTED_Q:
            raise UnsupportedField(f"q must be one of {SUPPORTED_Q}, got {self.q}")
        assert _is_prime(self.q)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def inv(self, a: int) -> int:
        a %= self.q
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.q)

    def generator(self) -> int:
        """Smallest generator of the unit group."""
        for g in self.units():
            if len({pow(g, k, self.q) for k in range(1, self.q)}) == self.q - 1:
                return g
        raise AssertionError("unreachable")


def nullspace(rows: Sequence[Sequence[int]], ncols: int, q: int) -> List[List[int]]:
    """Basis of {v : rows . v = 0} over F_q, one vector per free column."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % q), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [v * inv % q for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % q:
                f = m[i][c]
                m[i] = [(vi - f * vr) % q for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % q
        basis.append(v)
    return basis


class LPoly:
    """Laurent polynomial in t over F_q."""

    __slots__ = ("q", "c")

    def __init__(self, q: int, coeffs: Mapping[int, int] = ()):
        self.q = q
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self.c: Dict[int, int] = {}
        for e, v in items:
            v %= q
            if v:
                self.c[e] = v

    @classmethod
    def const(cls, q: int, v: int) -> "LPoly":
        return cls(q, {0: v})

    @classmethod
    def mono(cls, q: int, e: int, v: int = 1) -> "LPoly":
        return cls(q, {e: v})

    def is_zero(self) -> bool:
        return not self.c

    def maxdeg(self) -> int:
        return max(self.c) if self.c else -(10 ** 9)

    def mindeg(self) -> int:
        return min(self.c) if self.c else 10 ** 9

    def __getitem__(self, e: int) -> int:
        return self.c.get(e, 0)

    def __add__(self, o: "LPoly") -> "LPoly":
        out = dict(self.c)
        for e, v in o.c.items():
            out[e] = out.get(e, 0) + v
        return LPoly(self.q, out)

    def __neg__(self):
        return LPoly(self.q, {e: -v for e, v in self.c.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o) -> "LPoly":
        if isinstance(o, int):
            return LPoly(self.q, {e: v * o for e, v in self.c.items()})
        out: Dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in o.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LPoly(self.q, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LPoly":
        return LPoly(self.q, {e + k: v for e, v in self.c.items()})

    def __call__(self, x: int) -> int:
        """Value at a nonzero point (or at 0 when there are no negative powers)."""
        if x % self.q == 0:
            if self.c and self.mindeg() < 0:
                raise ZeroDivisionError("pole at t = 0")
            return self[0]
        xinv = pow(x, -1, self.q)
        return sum(v * (pow(x, e, self.q) if e >= 0 else pow(xinv, -e, self.q))
                   for e, v in self.c.items()) % self.q

    def unit_monomial(self) -> Tuple[int, int] | None:
        """(c, k) if this is c*t^k, else None."""
        if len(self.c) != 1:
            return None
        (k, v), = self.c.items()
        return v, k

    def div_linear(self, x: int) -> "LPoly":
        """Exact division by (t - x); raises if (t - x) does not divide."""
        if self.is_zero():
            return self
        if x % self.q == 0:
            return self.shift(-1)
        lo = min(self.mindeg(), 0)
        # synthetic division of t^-lo * self by (t - x)
        hi = self.maxdeg()
        coeffs = [self[e] for e in range(hi, lo - 1, -1)]
        out = []
        acc = 0
        for v in coeffs:
            acc = (acc * x + v) % self.q
            out.append(acc)
        if out[-1]:
            raise ArithmeticError(f"t - {x} does not divide")
        quot = out[:-1]
        return LPoly(self.q, {hi - 1 - i: v for i, v in enumerate(quot)})

    def __eq__(self, o):
        return isinstance(o, LPoly) and self.q == o.q and self.c == o.c

    def __hash__(self):
        return hash((self.q, tuple(sorted(self.c.items()))))

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            mono = "" if e == 0 else "t" if e == 1 else f"t^{e}"
            if not mono:
                parts.append(str(v))
            else:
                parts.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LPoly[F_{self.q}]({self})"


Mat2 = Tuple[Tuple[LPoly, LPoly], Tuple[LPoly, LPoly]]


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return tuple(tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2))
                 for i in range(2))


def mat_det(A: Mat2) -> LPoly:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat_adj(A: Mat2) -> Mat2:
    return ((A[1][1], -A[0][1]), (-A[1][0], A[0][0]))


def mat_scale(A: Mat2, c: LPoly) -> Mat2:
    return tuple(tuple(e * c for e in row) for row in A)


def mat_map(A: Mat2, f) -> Mat2:
    return tuple(tuple(f(e) for e in row) for row in A)


def mat_const(q: int, rows: Sequence[Sequence[int]]) -> Mat2:
    return tuple(tuple(LPoly.const(q, v) for v in row) for row in rows)


def mat_eval(A: Mat2, x: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    return tuple(tuple(e(x) for e in row) for row in A)


def mat_coeff(A: Mat2, e: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    return tuple(tuple(entry[e] for entry in row) for row in A)


def mat_degrees(A: Mat2) -> Tuple[int, int]:
    entries = [e for row in A for e in row if not e.is_zero()]
    return (min(e.mindeg() for e in entries), max(e.maxdeg() for e in entries))


def small_inv(M, q: int):
    (a, b), (c, d) = M
    det = (a * d - b * c) % q
    if not det:
        raise ZeroDivisionError("singular matrix")
    i = pow(det, -1, q)
    return ((d * i % q, -b * i % q), (-c * i % q, a * i % q))


def small_apply(M, v, q: int) -> Tuple[int, int]:
    return ((M[0][0] * v[0] + M[0][1] * v[1]) % q, (M[1][0] * v[0] + M[1][1] * v[1]) % q)


def iter_vectors(q: int, n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for head in range(q):
        for tail in iter_vectors(q, n - 1):
            yield (head,) + tail
