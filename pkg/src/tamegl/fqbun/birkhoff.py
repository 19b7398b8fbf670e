"""Rank-two bundles on P^1 over F_q and their splitting type.

A bundle is glued from the trivial bundle on A^1 = Spec F_q[t] and the
trivial bundle on P^1 - {0} = Spec F_q[1/t].  Internally a bundle is a
matrix T whose columns are the frame over P^1 - {0} written in the frame over
A^1; global sections of E(n) are then polynomial vectors f with T^-1 f having
no power of t above n.  The public ``TransitionMatrix`` g follows the
factorisation convention g = u_minus * diag(t^a, t^b) * u_plus and corresponds
to T = g^-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .field import LPoly, Mat2, mat_adj, mat_degrees, mat_det, mat_mul, mat_scale, nullspace


class NotABundle(ValueError):
    pass


class WindowExceeded(ArithmeticError):
    pass


DEFAULT_WINDOW = 10


def _check_window(A: Mat2, window: int, what: str):
    lo, hi = mat_degrees(A)
    if lo < -window or hi > window:
        raise WindowExceeded(f"{what} has t-degrees [{lo}, {hi}] outside [-{window}, {window}]")


def unit_det(A: Mat2) -> Tuple[int, int]:
    um = mat_det(A).unit_monomial()
    if um is None:
        raise NotABundle(f"determinant {mat_det(A)} is not a unit monomial")
    return um


def inverse(A: Mat2) -> Mat2:
    c, k = unit_det(A)
    q = A[0][0].q
    return mat_scale(mat_adj(A), LPoly.mono(q, -k, pow(c, -1, q)))


@dataclass(frozen=True)
class TransitionMatrix:
    """g with g = u_minus * diag(t^a, t^b) * u_plus; entries within [-window, window]."""

    entries: Mat2
    window: int = DEFAULT_WINDOW

    def __post_init__(self):
        unit_det(self.entries)
        _check_window(self.entries, self.window, "transition matrix")

    @property
    def q(self) -> int:
        return self.entries[0][0].q

    @classmethod
    def from_ints(cls, q: int, rows, window: int = DEFAULT_WINDOW) -> "TransitionMatrix":
        """rows of dicts exponent -> coefficient."""
        return cls(tuple(tuple(LPoly(q, e) for e in row) for row in rows), window)

    def gluing(self) -> Mat2:
        return inverse(self.entries)


def sections(T: Mat2, n: int) -> List[Tuple[LPoly, LPoly]]:
    """Basis of H^0(E(n)) as polynomial vectors in the A^1 frame."""
    q = T[0][0].q
    lo_T, hi_T = mat_degrees(T)
    N = hi_T + n
    if N < 0:
        return []
    Tinv = inverse(T)
    lo_i, hi_i = mat_degrees(Tinv)
    nunk = 2 * (N + 1)
    rows = []
    # coefficient of t^e in row r of T^-1 f must vanish for e > n
    for r in range(2):
        for e in range(n + 1, hi_i + N + 1):
            row = [0] * nunk
            for comp in range(2):
                entry = Tinv[r][comp]
                for j in range(N + 1):
                    row[comp * (N + 1) + j] = entry[e - j]
            if any(row):
                rows.append(row)
    basis = nullspace(rows, nunk, q)
    return [(LPoly(q, {j: v[j] for j in range(N + 1)}),
             LPoly(q, {j: v[N + 1 + j] for j in range(N + 1)})) for v in basis]


@dataclass(frozen=True)
class Birkhoff:
    """T = P * diag(t^a, t^b) * Q^-1 with P over F_q[t], Q over F_q[1/t], a >= b."""

    a: int
    b: int
    P: Mat2
    Q: Mat2

    @property
    def gap(self) -> int:
        return self.a - self.b


def _combine(basis: Sequence[Tuple[LPoly, LPoly]], coeffs: Sequence[int], q: int):
    f0, f1 = LPoly(q), LPoly(q)
    for c, (g0, g1) in zip(coeffs, basis):
        if c:
            f0, f1 = f0 + g0 * c, f1 + g1 * c
    return f0, f1


def birkhoff(T: Mat2, window: int = DEFAULT_WINDOW) -> Birkhoff:
    q = T[0][0].q
    _check_window(T, window, "gluing matrix")
    c, k = unit_det(T)
    hi = mat_degrees(T)[1]
    a = None
    for n in range(hi, (k - 1) // 2 - 1, -1):
        secs = sections(T, -n)
        if secs:
            a = n
            e1 = secs[0]
            break
    if a is None:
        raise AssertionError("no destabilising section found")
    b = k - a
    V = sections(T, -b)
    # pick e2 in V with det[e1, e2] a nonzero constant
    dets = [e1[0] * f[1] - e1[1] * f[0] for f in V]
    top = max((d.maxdeg() for d in dets if not d.is_zero()), default=0)
    rows = [[d[e] for d in dets] for e in range(1, top + 1)]
    e2 = None
    for v in nullspace(rows, len(V), q):
        if sum(ci * d[0] for ci, d in zip(v, dets)) % q:
            e2 = _combine(V, v, q)
            break
    if e2 is None:
        raise AssertionError("no complementary section found")
    P = ((e1[0], e2[0]), (e1[1], e2[1]))
    D = ((LPoly.mono(q, a), LPoly(q)), (LPoly(q), LPoly.mono(q, b)))
    Q = mat_mul(mat_mul(inverse(T), P), D)
    _check_window(Q, window, "Birkhoff factor")
    if mat_degrees(Q)[1] > 0:
        raise AssertionError("Birkhoff factor has positive powers")
    return Birkhoff(a, b, P, Q)


def splitting_type(g: TransitionMatrix) -> int:
    """Gap |a - b| of the bundle presented by g."""
    return birkhoff(g.gluing(), g.window).gap


def splitting_pair(g: TransitionMatrix) -> Tuple[int, int]:
    bk = birkhoff(g.gluing(), g.window)
    return bk.a, bk.b
