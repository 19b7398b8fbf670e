"""Parabolic PGL(2)-bundles on (P^1, {0, 1, inf}) over F_q.

A point is O(d) + O with a line in the fibre at each marked point.  Lines are
stored as elements of P^1(F_q) encoded by an integer: v in 0..q-1 stands for
[v : 1] and q stands for [1 : 0], which for d >= 1 is the fibre of O(d).
Fibres at 0 and 1 use the standard frame; the fibre at inf uses the frame
(t^d e_1, e_2).
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .field import FqConfig

S = ("0", "1", "∞")
SUBSETS: Tuple[FrozenSet[str], ...] = tuple(
    frozenset(p for p, keep in zip(S, mask) if keep)
    for mask in product((0, 1), repeat=3))
GENERIC = "*"


class InvalidLabel(ValueError):
    pass


def _fmt_subset(R: FrozenSet[str]) -> str:
    if not R:
        return "∅"
    if len(R) == 3:
        return "S"
    return ",".join(p for p in S if p in R)


def _subset_key(R: FrozenSet[str]):
    return (len(R), [S.index(p) for p in S if p in R])


@dataclass(frozen=True)
class OrbitLabel:
    """c_d(R), or c_1(*) for the generic configuration on O(1) + O.

    For d = 0, R is the set of marked points whose lines coincide (empty when
    all three differ); for d >= 1 it is the set of lines lying in O(d).
    """

    d: int
    config: FrozenSet[str] | str

    def __post_init__(self):
        if self.d < 0:
            raise InvalidLabel("gap must be >= 0")
        if self.config == GENERIC:
            if self.d != 1:
                raise InvalidLabel("the generic label only exists for d = 1")
            return
        if not isinstance(self.config, frozenset) or not self.config <= set(S):
            raise InvalidLabel(f"bad configuration {self.config!r}")
        if self.d == 0 and len(self.config) == 1:
            raise InvalidLabel("d = 0 coincidence patterns have 0, 2 or 3 points")

    @classmethod
    def of(cls, d: int, config: Iterable[str] | str) -> "OrbitLabel":
        return cls(d, GENERIC if config == GENERIC else frozenset(config))

    @property
    def generic(self) -> bool:
        return self.config == GENERIC

    @property
    def R(self) -> FrozenSet[str]:
        if self.generic:
            return frozenset()
        return self.config

    def sort_key(self):
        if self.generic:
            return (self.d, -1, [])
        return (self.d,) + _subset_key(self.config)

    def __lt__(self, other: "OrbitLabel"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"c_{self.d}({GENERIC if self.generic else _fmt_subset(self.config)})"

    @classmethod
    def parse(cls, text: str) -> "OrbitLabel":
        text = text.strip()
        if not (text.startswith("c_") and text.endswith(")") and "(" in text):
            raise InvalidLabel(text)
        d_s, body = text[2:-1].split("(", 1)
        d = int(d_s)
        if body == GENERIC:
            return cls(d, GENERIC)
        if body == "∅":
            return cls(d, frozenset())
        if body == "S":
            return cls(d, frozenset(S))
        return cls(d, frozenset(body.split(",")))


def labels(d: int) -> List[OrbitLabel]:
    if d == 0:
        out = [OrbitLabel(0, R) for R in SUBSETS if len(R) != 1]
    elif d == 1:
        out = [OrbitLabel(1, GENERIC)] + [OrbitLabel(1, R) for R in SUBSETS]
    else:
        out = [OrbitLabel(d, R) for R in SUBSETS]
    return sorted(out)


@dataclass(frozen=True)
class ParabolicPoint:
    d: int
    lines: Tuple[int, int, int]
    q: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("gap must be >= 0")
        if len(self.lines) != 3 or not all(0 <= l <= self.q for l in self.lines):
            raise ValueError(f"lines must be points of P^1(F_{self.q})")

    def line(self, s: str) -> int:
        return self.lines[S.index(s)]

    def vector(self, s: str) -> Tuple[int, int]:
        return line_vector(self.line(s), self.q)


def line_vector(code: int, q: int) -> Tuple[int, int]:
    return (1, 0) if code == q else (code, 1)


def line_code(v: Tuple[int, int], q: int) -> int:
    """Projective point of a nonzero vector."""
    a, b = v[0] % q, v[1] % q
    if b:
        return a * pow(b, -1, q) % q
    if not a:
        raise ValueError("zero vector is not a line")
    return q


def all_points(d: int, q: int) -> Iterator[ParabolicPoint]:
    for lines in product(range(q + 1), repeat=3):
        yield ParabolicPoint(d, lines, q)


def classify(p: ParabolicPoint, q: Optional[int] = None) -> OrbitLabel:
    q = p.q if q is None else q
    l0, l1, linf = p.lines
    if p.d == 0:
        if l0 == l1 == linf:
            return OrbitLabel(0, frozenset(S))
        for pair, (u, v) in ((("0", "1"), (l0, l1)), (("0", "∞"), (l0, linf)),
                             (("1", "∞"), (l1, linf))):
            if u == v:
                return OrbitLabel(0, frozenset(pair))
        return OrbitLabel(0, frozenset())
    R = frozenset(s for s, l in zip(S, p.lines) if l == q)
    if p.d == 1 and not R:
        # a section (v_0 + v_inf t, 1) of O(1) + O through all three lines
        return OrbitLabel(1, frozenset()) if (l0 + linf - l1) % q == 0 else OrbitLabel(1, GENERIC)
    return OrbitLabel(p.d, R)


def aut_bundle_order(d: int, q: int) -> int:
    """|Aut(O(d) + O)(F_q)| as a PGL(2)-bundle."""
    if d == 0:
        return q * (q * q - 1)
    return q ** (d + 1) * (q - 1)


def aut_order(label: OrbitLabel, q: int) -> int:
    """Order of the automorphism group of a point with the given label."""
    FqConfig(q)
    d, R = label.d, label.R
    if d == 0:
        return {0: 1, 2: q - 1, 3: q * (q - 1)}[len(R)]
    if d == 1:
        if label.generic:
            return 1
        return {0: q - 1, 1: q - 1, 2: q * (q - 1), 3: q * q * (q - 1)}[len(R)]
    return q ** (d - 2 + len(R)) * (q - 1)


def representative(label: OrbitLabel, q: int) -> ParabolicPoint:
    """A fixed point with the given label."""
    d, R = label.d, label.R
    if d == 0:
        if not R:
            return ParabolicPoint(0, (0, 1, q), q)
        # the coinciding lines are [0:1], any remaining one is [1:0]
        return ParabolicPoint(0, tuple(0 if s in R else q for s in S), q)
    if label.generic:
        return ParabolicPoint(1, (0, 1, 0), q)
    return ParabolicPoint(d, tuple(q if s in R else 0 for s in S), q)


# -- automorphism groups, used as an oracle independent of classify ----------

@dataclass(frozen=True)
class AutElement:
    """[[alpha, sigma(t)], [0, 1]] with deg sigma <= d, or a PGL2 matrix when d = 0."""

    d: int
    q: int
    alpha: int = 1
    sigma: Tuple[int, ...] = ()
    matrix: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None

    def fibre_matrix(self, s: str):
        q = self.q
        if self.d == 0:
            return self.matrix
        if s == "0":
            val = self.sigma[0]
        elif s == "1":
            val = sum(self.sigma) % q
        else:
            val = self.sigma[self.d]
        return ((self.alpha, val), (0, 1))

    def act(self, p: ParabolicPoint) -> ParabolicPoint:
        q = self.q
        out = []
        for s in S:
            M = self.fibre_matrix(s)
            v = p.vector(s)
            out.append(line_code(((M[0][0] * v[0] + M[0][1] * v[1]) % q,
                                  (M[1][0] * v[0] + M[1][1] * v[1]) % q), q))
        return ParabolicPoint(p.d, tuple(out), q)


def aut_generators(d: int, q: int) -> List[AutElement]:
    g = FqConfig(q).generator()
    if d == 0:
        mats = [((1, 1), (0, 1)), ((g, 0), (0, 1)), ((0, 1), (1, 0))]
        return [AutElement(0, q, matrix=m) for m in mats]
    gens = [AutElement(d, q, alpha=g, sigma=(0,) * (d + 1))]
    for k in range(d + 1):
        sigma = tuple(1 if i == k else 0 for i in range(d + 1))
        gens.append(AutElement(d, q, alpha=1, sigma=sigma))
    return gens


def aut_elements(d: int, q: int) -> Iterator[AutElement]:
    """Every element of Aut(O(d) + O)(F_q), projectively."""
    if d == 0:
        seen = set()
        for a, b, c, e in product(range(q), repeat=4):
            if (a * e - b * c) % q == 0:
                continue
            # normalise the first nonzero entry to 1
            first = next(v for v in (a, b, c, e) if v)
            inv = pow(first, -1, q)
            m = ((a * inv % q, b * inv % q), (c * inv % q, e * inv % q))
            if m not in seen:
                seen.add(m)
                yield AutElement(0, q, matrix=m)
        return
    for alpha in range(1, q):
        for sigma in product(range(q), repeat=d + 1):
            yield AutElement(d, q, alpha=alpha, sigma=sigma)


def orbits_by_action(d: int, q: int) -> List[FrozenSet[Tuple[int, int, int]]]:
    """Orbits of Aut on line triples, found by closing under generators."""
    gens = aut_generators(d, q)
    seen: Dict[Tuple[int, int, int], int] = {}
    orbits: List[FrozenSet[Tuple[int, int, int]]] = []
    for start in product(range(q + 1), repeat=3):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            p = ParabolicPoint(d, cur, q)
            for g in gens:
                nxt = g.act(p).lines
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        for pt in orbit:
            seen[pt] = len(orbits)
        orbits.append(frozenset(orbit))
    return orbits


def stabilizer_order(p: ParabolicPoint) -> int:
    return sum(1 for g in aut_elements(p.d, p.q) if g.act(p) == p)


# -- census ------------------------------------------------------------------

@dataclass(frozen=True)
class Census:
    d: int
    q: int
    sizes: Tuple[Tuple[OrbitLabel, int], ...]

    def as_dict(self) -> Dict[OrbitLabel, int]:
        return dict(self.sizes)

    def total(self) -> int:
        return sum(n for _, n in self.sizes)

    def orbit_stabilizer_ok(self) -> bool:
        target = aut_bundle_order(self.d, self.q)
        return all(n * aut_order(lab, self.q) == target for lab, n in self.sizes)

    def to_json(self) -> Dict[str, int]:
        return {str(lab): n for lab, n in self.sizes}


def orbit_census(d: int, q: int) -> Census:
    FqConfig(q)
    counts = Counter(classify(p) for p in all_points(d, q))
    return Census(d, q, tuple((lab, counts[lab]) for lab in labels(d) if counts[lab]))


def groupoid_mass(d: int, q: int) -> Fraction:
    FqConfig(q)
    return sum((Fraction(1, aut_order(lab, q)) for lab in labels(d)), Fraction(0))


# -- closure order within a fixed gap ----------------------------------------

def specializations(label: OrbitLabel) -> List[OrbitLabel]:
    """Labels y with an arrow label -> y, meaning y lies in the closure of label."""
    d = label.d
    if label.generic:
        return [OrbitLabel(1, frozenset())] + [OrbitLabel(1, frozenset({s})) for s in S]
    R = label.R
    if d == 0:
        if not R:
            return [OrbitLabel(0, frozenset(p)) for p in (("0", "1"), ("0", "∞"), ("1", "∞"))]
        if len(R) == 2:
            return [OrbitLabel(0, frozenset(S))]
        return []
    if d == 1 and not R:
        # lines on a section of O(1) + O degenerate by two lines entering O(1)
        return [OrbitLabel(1, frozenset(S) - {s}) for s in S]
    return [OrbitLabel(d, R | {s}) for s in S if s not in R]


def closure(start: Iterable[OrbitLabel], within: Optional[Iterable[OrbitLabel]] = None
            ) -> FrozenSet[OrbitLabel]:
    """Downward closure under specialisation, optionally inside an open set."""
    allowed = None if within is None else set(within)
    seen = set()
    stack = [lab for lab in start if allowed is None or lab in allowed]
    while stack:
        lab = stack.pop()
        if lab in seen:
            continue
        seen.add(lab)
        for nxt in specializations(lab):
            if allowed is None or nxt in allowed:
                stack.append(nxt)
    return frozenset(seen)


def orbit_dimension(label: OrbitLabel) -> int:
    """dim Aut(O(d) + O) - dim Stab, read off the orbit size exponent."""
    d, R = label.d, label.R
    full = 3 if d == 0 else d + 2
    if d == 0:
        stab = {0: 0, 2: 1, 3: 2}[len(R)]
    elif d == 1:
        stab = 0 if label.generic else {0: 1, 1: 1, 2: 2, 3: 3}[len(R)]
    else:
        stab = d - 1 + len(R)
    return full - stab
