"""Lower Hecke modifications and the Atkin-Lehner involutions.

Modifications are carried out on a gluing matrix T (see ``birkhoff``) with
line vectors in the fibre frames: the A^1 frame at finite points and the
columns of T at inf.  The result is brought back to O(d) + O by a Birkhoff
factorisation.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .birkhoff import DEFAULT_WINDOW, birkhoff
from .field import (FqConfig, LPoly, Mat2, mat_adj, mat_coeff, mat_eval, mat_mul,
                    small_apply, small_inv)
from .moduli import S, OrbitLabel, ParabolicPoint, classify, line_code, line_vector

Vec = Tuple[int, int]


class NotUnramified(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicBundle:
    """Gluing matrix plus one line vector per marked point, in the fibre frames."""

    T: Mat2
    lines: Tuple[Vec, Vec, Vec]

    @property
    def q(self) -> int:
        return self.T[0][0].q

    @classmethod
    def from_point(cls, p: ParabolicPoint) -> "ParabolicBundle":
        q = p.q
        T = ((LPoly.mono(q, p.d), LPoly(q)), (LPoly(q), LPoly.const(q, 1)))
        return cls(T, tuple(p.vector(s) for s in S))

    def line(self, s: str) -> Vec:
        return self.lines[S.index(s)]


def normalize(E: ParabolicBundle, window: int = DEFAULT_WINDOW) -> ParabolicPoint:
    """Rewrite in the frame of O(a) + O(b) and twist to O(a - b) + O."""
    q = E.q
    bk = birkhoff(E.T, window)
    out = []
    for s in S:
        v = E.line(s)
        if s == "∞":
            M = small_inv(mat_coeff(bk.Q, 0), q)
        else:
            M = small_inv(mat_eval(bk.P, int(s)), q)
        out.append(line_code(small_apply(M, v, q), q))
    return ParabolicPoint(bk.gap, tuple(out), q)


def _complement(u: Vec, q: int) -> Vec:
    return (0, 1) if u[0] % q else (1, 0)


def _const(q: int, v: int) -> LPoly:
    return LPoly.const(q, v)


def lower_modification(E: ParabolicBundle, x, u: Vec) -> Tuple[ParabolicBundle, Vec]:
    """Kernel of E -> E_x / u.  Returns the new bundle and the line E(-x)_x in E'_x.

    ``x`` is a point of P^1(F_q) given as an int (finite) or "∞".  The lines at
    marked points other than x are carried along; the line slot at x, if x is
    marked, is set to the image of E(-x).
    """
    q = E.q
    T = E.T
    w = _complement(u, q)
    det_uw = (u[0] * w[1] - u[1] * w[0]) % q
    image_line: Vec = (0, 1)
    marked = {"0": 0, "1": 1}
    new_lines: List[Vec] = list(E.lines)

    if x == "∞":
        # the A^1 frame is untouched; inf frame becomes T [u | s w]
        Hinf = ((_const(q, u[0]), LPoly.mono(q, -1, w[0])),
                (_const(q, u[1]), LPoly.mono(q, -1, w[1])))
        T2 = mat_mul(T, Hinf)
        new_lines[2] = image_line
        return ParabolicBundle(T2, tuple(new_lines)), image_line

    x = int(x) % q
    # A^1 frame H = [u | (t - x) w]
    tx = LPoly(q, {1: 1, 0: -x})
    H = ((_const(q, u[0]), tx * w[0]), (_const(q, u[1]), tx * w[1]))
    adjH = mat_adj(H)
    inv_det = pow(det_uw, -1, q)
    if x == 0:
        # P^1 - {0} does not see the modification
        T2 = mat_map_div(mat_mul(adjH, T), q, 0, inv_det)
        Hinf_at_inf = None
    else:
        Tx = mat_eval(T, x)
        u_inf = small_apply(small_inv(Tx, q), u, q)
        w_inf = _complement(u_inf, q)
        xinv = pow(x, -1, q)
        sx = LPoly(q, {-1: 1, 0: -xinv})
        Hinf = ((_const(q, u_inf[0]), sx * w_inf[0]), (_const(q, u_inf[1]), sx * w_inf[1]))
        T2 = mat_map_div(mat_mul(mat_mul(adjH, T), Hinf), q, x, inv_det)
        Hinf_at_inf = ((u_inf[0], -xinv * w_inf[0] % q), (u_inf[1], -xinv * w_inf[1] % q))

    for i, s in enumerate(S):
        if s == "∞":
            if Hinf_at_inf is not None:
                new_lines[i] = small_apply(small_inv(Hinf_at_inf, q), E.lines[i], q)
        elif marked[s] == x:
            new_lines[i] = image_line
        else:
            Hy = mat_eval(H, marked[s])
            new_lines[i] = small_apply(small_inv(Hy, q), E.lines[i], q)
    return ParabolicBundle(T2, tuple(new_lines)), image_line


def mat_map_div(A: Mat2, q: int, x: int, scale: int) -> Mat2:
    return tuple(tuple(e.div_linear(x) * scale for e in row) for row in A)


def unramified_points(q: int) -> List[int]:
    return [x for x in range(2, q)]


def hecke_fiber_counts(b: OrbitLabel | ParabolicPoint, x: int, q: int,
                       window: int = DEFAULT_WINDOW) -> Dict[OrbitLabel, int]:
    """Labels of all lower modifications at x of a point (or a label's representative)."""
    FqConfig(q)
    if x % q in (0, 1):
        raise NotUnramified(f"x = {x} is a marked point")
    from .moduli import representative
    p = b if isinstance(b, ParabolicPoint) else representative(b, q)
    E = ParabolicBundle.from_point(p)
    counts: Counter = Counter()
    for code in range(q + 1):
        E2, _ = lower_modification(E, x, line_vector(code, q))
        counts[classify(normalize(E2, window))] += 1
    return dict(sorted(counts.items()))


def atkin_lehner(p: ParabolicPoint, r: str, q: Optional[int] = None,
                 window: int = DEFAULT_WINDOW) -> ParabolicPoint:
    """Modify at the marked point r along its line; the new line is the image of E(-r)."""
    q = p.q if q is None else q
    if r not in S:
        raise ValueError(f"r must be one of {S}")
    E = ParabolicBundle.from_point(p)
    x = "∞" if r == "∞" else int(r)
    E2, _ = lower_modification(E, x, E.line(r))
    return normalize(E2, window)
