"""Buchberger's algorithm and the ideal operations built on it.

The pair bookkeeping follows the Gebauer-Moeller update.  Everything returns
reduced, monic bases sorted by leading monomial (descending), so two equal
ideals always print identically.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import Monomial, MultiPoly, PolyRing, RingMismatch


class ZeroDivisor(ValueError):
    pass


class UnitIdeal(ValueError):
    pass


# -- monomial helpers ---------------------------------------------------------

def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _disjoint(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _check_ring(ring: PolyRing, polys: Iterable[MultiPoly]):
    for p in polys:
        if p.ring != ring:
            raise RingMismatch(f"{p.ring!r} vs {ring!r}")


# -- division -----------------------------------------------------------------

def divide(p: MultiPoly, basis: Sequence[MultiPoly]) -> Tuple[List[MultiPoly], MultiPoly]:
    """Multivariate division: ``p = sum(q_i * g_i) + r`` with r fully reduced."""
    ring = p.ring
    _check_ring(ring, basis)
    basis = [g for g in basis]
    leads = [(g.lm(), g.lc(), g.sorted_terms()[1:]) if not g.is_zero() else None
             for g in basis]
    key = ring.key
    work: Dict[Monomial, Fraction] = dict(p.terms)
    quots: List[Dict[Monomial, Fraction]] = [{} for _ in basis]
    rem: Dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for i, lead in enumerate(leads):
            if lead is None or not _divides(lead[0], m):
                continue
            lm, lc, tail = lead
            shift = _sub(m, lm)
            coef = c / lc
            quots[i][shift] = quots[i].get(shift, 0) + coef
            for tm, tc in tail:
                mm = tuple(a + b for a, b in zip(tm, shift))
                v = work.get(mm, 0) - coef * tc
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
            break
        else:
            rem[m] = c
    return [MultiPoly(ring, q) for q in quots], MultiPoly(ring, rem)


def reduce(p: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Normal form of p with respect to basis (which must be non-empty)."""
    if not basis:
        raise ValueError("reduce needs a non-empty basis")
    return divide(p, basis)[1]


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


# -- Buchberger ---------------------------------------------------------------

def _spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    l = _lcm(f.lm(), g.lm())
    return (f.mul_term(_sub(l, f.lm()), 1 / f.lc())
            - g.mul_term(_sub(l, g.lm()), 1 / g.lc()))


def _update(G: List[int], B: List[Tuple[int, int]], h: int, polys: List[MultiPoly]):
    lm = [p.lm() for p in polys]
    hm = lm[h]
    C = [(h, g) for g in G]
    D: List[Tuple[int, int]] = []
    while C:
        pair = C.pop(0)
        g1 = pair[1]
        l1 = _lcm(hm, lm[g1])
        if _disjoint(hm, lm[g1]):
            D.append(pair)
            continue
        dominated = any(_divides(_lcm(hm, lm[g2]), l1) for _, g2 in C + D)
        if not dominated:
            D.append(pair)
    E = [(a, b) for a, b in D if not _disjoint(lm[a], lm[b])]
    B_new = []
    for g1, g2 in B:
        l12 = _lcm(lm[g1], lm[g2])
        if (_divides(hm, l12) and _lcm(lm[g1], hm) != l12 and _lcm(hm, lm[g2]) != l12):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not _divides(hm, lm[g])]
    G_new.append(h)
    return G_new, B_new


def _interreduce(ring: PolyRing, basis: List[MultiPoly]) -> List[MultiPoly]:
    basis = [g.monic() for g in basis if not g.is_zero()]
    # drop elements whose leading monomial is divisible by another's
    minimal: List[MultiPoly] = []
    for g in sorted(basis, key=lambda f: ring.key(f.lm())):
        if not any(_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce(g, others) if others else g
        reduced.append(r.monic())
    reduced.sort(key=lambda f: ring.key(f.lm()), reverse=True)
    return reduced


def buchberger(generators: Sequence[MultiPoly], ring: Optional[PolyRing] = None) -> List[MultiPoly]:
    """Reduced Groebner basis of the ideal generated by ``generators``."""
    gens = [g for g in generators if not g.is_zero()]
    if ring is None:
        if not generators:
            raise ValueError("ring required for an empty generator list")
        ring = generators[0].ring
    _check_ring(ring, gens)
    if not gens:
        return []
    polys: List[MultiPoly] = []
    G: List[int] = []
    B: List[Tuple[int, int]] = []
    for g in sorted({g.monic() for g in gens}, key=lambda f: (ring.key(f.lm()), str(f))):
        polys.append(g)
        G, B = _update(G, B, len(polys) - 1, polys)
    key = ring.key
    while B:
        # normal selection strategy: smallest lcm first
        B.sort(key=lambda pr: key(_lcm(polys[pr[0]].lm(), polys[pr[1]].lm())))
        i, j = B.pop(0)
        h = reduce(_spoly(polys[i], polys[j]), [polys[k] for k in G])
        if h.is_zero():
            continue
        polys.append(h.monic())
        if polys[-1].is_constant():
            return [ring.one()]
        G, B = _update(G, B, len(polys) - 1, polys)
    return _interreduce(ring, [polys[k] for k in G])


# -- ideals -------------------------------------------------------------------

def _fresh_name(ring: PolyRing, stem: str = "_u") -> str:
    name = stem
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{stem}{k}"
    return name


class Ideal:
    """An ideal given by generators; the reduced basis is computed lazily."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: PolyRing, generators: Iterable[MultiPoly] = ()):
        gens = tuple(generators)
        _check_ring(ring, gens)
        self.ring = ring
        self.generators = gens
        self._gb: Optional[Tuple[MultiPoly, ...]] = None

    @classmethod
    def parse(cls, ring: PolyRing, *texts: str) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def gb(self) -> Tuple[MultiPoly, ...]:
        if self._gb is None:
            self._gb = tuple(buchberger(list(self.generators), self.ring))
        return self._gb

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gb()

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        gb = self.gb()
        return reduce(p, list(gb)) if gb else p

    def contains(self, p: MultiPoly) -> bool:
        return self.normal_form(p).is_zero()

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if isinstance(other, MultiPoly):
            return Ideal(self.ring, self.generators + (other,))
        if other.ring != self.ring:
            raise RingMismatch("ideal sum across rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_eq(self, other)

    def __hash__(self):
        return hash((self.ring, self.gb()))

    def __str__(self):
        gb = self.gb()
        return "(" + ", ".join(str(g) for g in gb) + ")" if gb else "(0)"

    def __repr__(self):
        return f"Ideal{self}"

    def to_ring(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])


def ideal_member(p: MultiPoly, I: Ideal) -> bool:
    if p.ring != I.ring:
        raise RingMismatch("membership across rings")
    return I.contains(p)


def ideal_eq(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatch("comparing ideals of different rings")
    return I.gb() == J.gb()


def _eliminate(gens: Sequence[MultiPoly], ring: PolyRing, aux: str) -> List[MultiPoly]:
    """Generators of (gens) ∩ ring, gens living in ring + [aux] with lex."""
    big = gens[0].ring
    gb = buchberger(list(gens), big)
    idx = big.variables.index(aux)
    return [g.to_ring(ring) for g in gb if all(m[idx] == 0 for m in g.terms)]


def _elim_ring(ring: PolyRing) -> Tuple[PolyRing, str]:
    aux = _fresh_name(ring)
    return PolyRing((aux,) + ring.variables, "lex"), aux


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t*I + (1-t)*J and elimination of t."""
    if I.ring != J.ring:
        raise RingMismatch("intersecting ideals of different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    big, aux = _elim_ring(ring)
    t = big.var(aux)
    gens = [t * g.to_ring(big) for g in I.gb()] + [(1 - t) * g.to_ring(big) for g in J.gb()]
    return Ideal(ring, _eliminate(gens, ring, aux))


def ideal_quotient(I: Ideal, f: MultiPoly) -> Ideal:
    """Colon ideal (I : f)."""
    if f.ring != I.ring:
        raise RingMismatch("quotient across rings")
    if f.is_zero():
        raise ZeroDivisor("colon by the zero polynomial")
    inter = ideal_intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [g.exact_div(f) for g in inter.gb()])


def ideal_saturate(I: Ideal, f: MultiPoly) -> Ideal:
    """(I : f^∞) via the Rabinowitsch variable."""
    if f.ring != I.ring:
        raise RingMismatch("saturation across rings")
    if f.is_zero():
        raise ZeroDivisor("saturation by the zero polynomial")
    ring = I.ring
    big, aux = _elim_ring(ring)
    u = big.var(aux)
    gens = [g.to_ring(big) for g in I.generators] + [1 - u * f.to_ring(big)]
    return Ideal(ring, _eliminate(gens, ring, aux))


def radical_member(p: MultiPoly, I: Ideal) -> bool:
    """True iff some power of p lies in I."""
    if p.ring != I.ring:
        raise RingMismatch("radical membership across rings")
    if p.is_zero():
        return True
    ring = I.ring
    aux = _fresh_name(ring)
    big = PolyRing(ring.variables + (aux,), "grevlex")
    u = big.var(aux)
    J = Ideal(big, [g.to_ring(big) for g in I.generators] + [1 - u * p.to_ring(big)])
    return J.is_unit()


def leading_monomials(I: Ideal) -> List[Monomial]:
    return [g.lm() for g in I.gb()]


def krull_dim(I: Ideal) -> int:
    """Dimension of ring/I: largest variable set free of leading monomials."""
    if I.is_unit():
        raise UnitIdeal("the unit ideal has no dimension")
    n = I.ring.nvars
    lms = leading_monomials(I)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return 0


def hilbert_function(I: Ideal, degree: int) -> int:
    """dim_Q of the degree-d part of ring/I, for homogeneous I in grevlex."""
    if I.ring.order != "grevlex":
        raise ValueError("hilbert_function needs a degree-compatible order")
    lms = leading_monomials(I)
    n = I.ring.nvars
    count = 0
    for m in _monomials_of_degree(n, degree):
        if not any(_divides(l, m) for l in lms):
            count += 1
    return count


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def is_homogeneous(p: MultiPoly) -> bool:
    return len({sum(m) for m in p.terms}) <= 1
