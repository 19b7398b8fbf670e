"""SL(2) characters, Clebsch-Gordan, and line bundle cohomology on P^1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

from .algkernel import LaurentPoly
from .report import CheckReport


class NegativeWeight(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    laurent: LaurentPoly

    def __post_init__(self):
        if self.laurent.bar() != self.laurent:
            raise ValueError("character must be symmetric under z -> 1/z")

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.laurent * other.laurent)

    def __add__(self, other: "Character") -> "Character":
        return Character(self.laurent + other.laurent)

    def dim(self) -> int:
        return self.laurent.at_one()

    def __str__(self):
        return str(self.laurent)


@dataclass(frozen=True)
class VirtualRep:
    """Finite Z-combination of irreducibles V_n, keyed by highest weight n."""

    mults: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mults: Mapping[int, int] | Iterable[Tuple[int, int]] = ()) -> "VirtualRep":
        items = mults.items() if isinstance(mults, Mapping) else mults
        acc: Dict[int, int] = {}
        for n, m in items:
            if n < 0:
                raise NegativeWeight(n)
            acc[n] = acc.get(n, 0) + m
        return cls(tuple(sorted((n, m) for n, m in acc.items() if m)))

    @classmethod
    def irreducible(cls, n: int) -> "VirtualRep":
        return cls.of({n: 1})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.mults)

    def __getitem__(self, n: int) -> int:
        return self.as_dict().get(n, 0)

    def is_zero(self) -> bool:
        return not self.mults

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        return VirtualRep.of(list(self.mults) + list(other.mults))

    def __neg__(self):
        return VirtualRep(tuple((n, -m) for n, m in self.mults))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "VirtualRep") -> "VirtualRep":
        out: Dict[int, int] = {}
        for a, ma in self.mults:
            for b, mb in other.mults:
                for n, m in tensor_decompose(a, b).mults:
                    out[n] = out.get(n, 0) + ma * mb * m
        return VirtualRep.of(out)

    def dim(self) -> int:
        return sum((n + 1) * m for n, m in self.mults)

    def character(self) -> Character:
        acc = LaurentPoly()
        for n, m in self.mults:
            acc = acc + irr_char(n).laurent * m
        return Character(acc)

    @classmethod
    def from_character(cls, ch: Character) -> "VirtualRep":
        # peel off highest weights
        rest = ch.laurent
        out: Dict[int, int] = {}
        while not rest.is_zero():
            top = rest.degree()
            if top < 0:
                raise ValueError("not a Weyl-symmetric character")
            m = rest[top]
            out[top] = m
            rest = rest - irr_char(top).laurent * m
        return cls.of(out)

    def __str__(self):
        if not self.mults:
            return "0"
        return " + ".join(f"V_{n}" if m == 1 else f"{m}*V_{n}" for n, m in self.mults)


ZERO = VirtualRep()


@dataclass(frozen=True)
class CohPair:
    h0: VirtualRep = ZERO
    h1: VirtualRep = ZERO

    def euler(self) -> int:
        return self.h0.dim() - self.h1.dim()


def irr_char(n: int) -> Character:
    if n < 0:
        raise NegativeWeight(f"highest weight must be >= 0, got {n}")
    return Character(LaurentPoly({k: 1 for k in range(-n, n + 1, 2)}))


def tensor_decompose(a: int, b: int) -> VirtualRep:
    if a < 0 or b < 0:
        raise NegativeWeight(f"highest weights must be >= 0, got {a}, {b}")
    return VirtualRep.of({n: 1 for n in range(abs(a - b), a + b + 1, 2)})


def invariant_dim(v: VirtualRep) -> int:
    return v[0]


def coh_P1(n: int) -> CohPair:
    """Cohomology of O(n) on P^1 as SL(2)-representations."""
    if n >= 0:
        return CohPair(VirtualRep.irreducible(n), ZERO)
    if n == -1:
        return CohPair()
    return CohPair(ZERO, VirtualRep.irreducible(-n - 2))


def cech_weights(n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """Torus characters of H^0 and H^1 of O(n) from the two-chart Cech complex.

    Sections over the charts are spanned by X^i Y^j with i + j = n, where
    X^i Y^j is regular on {Y != 0} when i >= 0, on {X != 0} when j >= 0.  H^0
    is spanned by monomials regular on both, H^1 by those regular on neither.
    The torus acts on X^i Y^j with weight i - j.
    """
    lo, hi = min(n, 0) - 1, max(n, 0) + 1
    h0: Dict[int, int] = {}
    h1: Dict[int, int] = {}
    for i in range(lo, hi + 1):
        j = n - i
        if i >= 0 and j >= 0:
            h0[i - j] = h0.get(i - j, 0) + 1
        elif i < 0 and j < 0:
            h1[i - j] = h1.get(i - j, 0) + 1
    return LaurentPoly(h0), LaurentPoly(h1)


def sections_diagonal(n: int, cutoff: int, rank_growth: bool = True) -> int:
    """Invariant sections of O_Delta(n) over the total space of two copies of O(-2).

    Fibre-degree i contributes the sections of O(n + 2i) with multiplicity
    i + 1 (``rank_growth``), or 1 for the single line bundle case.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    total = 0
    for i in range(cutoff + 1):
        m = i + 1 if rank_growth else 1
        total += m * invariant_dim(coh_P1(n + 2 * i).h0)
    return total


def sections_theta(n: int, cutoff: int) -> int:
    """Invariant sections of O_Theta(n) over the total space of one O(-2)."""
    return sections_diagonal(n, cutoff, rank_growth=False)


HOM_CUTOFF = 64


def hom_structure_table(n_max: int) -> List[Tuple[int, int]]:
    """dim Hom(O, O_Delta(n + 1)) for -1 <= n <= n_max."""
    if n_max < -1:
        raise ValueError("n_max must be >= -1")
    return [(n, sections_diagonal(n + 1, HOM_CUTOFF)) for n in range(-1, n_max + 1)]


def sections_P1cubed(a: int, b: int, c: int) -> int:
    if min(a, b, c) < 0:
        return 0
    v = VirtualRep.irreducible(a) * VirtualRep.irreducible(b) * VirtualRep.irreducible(c)
    return invariant_dim(v)


def _coh_characters(n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    c = coh_P1(n)
    return c.h0.character().laurent, c.h1.character().laurent


def run_all(nrange: int = 10, n_max: int = 20, cutoff: int = 10) -> CheckReport:
    rep = CheckReport("sl2rep")
    bad = [n for n in range(-nrange, nrange + 1) if _coh_characters(n) != cech_weights(n)]
    rep.add("bwb_vs_cech", not bad, [], bad, details=f"|n| <= {nrange}",
            anchor="cohomology of O(n)")
    bad = [n for n in range(-nrange, nrange + 1) if coh_P1(n).euler() != n + 1]
    rep.add("euler_characteristic", not bad, [], bad, anchor="cohomology of O(n)")
    bad = [(a, b) for a in range(8) for b in range(8)
           if (VirtualRep.irreducible(a) * VirtualRep.irreducible(b)).character()
           != irr_char(a) * irr_char(b)]
    rep.add("clebsch_gordan_characters", not bad, [], bad, anchor="character ring")
    table = hom_structure_table(n_max)
    want = [(n, 1 if n == -1 else 0) for n in range(-1, n_max + 1)]
    rep.add("hom_table", table == want, want, table, anchor="Hom from O to O_Delta")
    # truncation-aligned additivity D_c(n) = D_{c-1}(n+2) + Theta_c(n)
    bad = [n for n in range(-nrange, nrange + 1)
           if sections_diagonal(n, cutoff) !=
           sections_diagonal(n + 2, cutoff - 1) + sections_theta(n, cutoff)]
    rep.add("diagonal_theta_additivity", not bad, [], bad, details=f"cutoff {cutoff}",
            anchor="newform generation")
    got = sections_P1cubed(-1, -1, -1)
    rep.add("P1cubed(-1,-1,-1)_invariants", got == 0, 0, got, anchor="open point")
    return rep
