"""Grothendieck-group shadows of the affine Hecke categories for SL(2) and PGL(2).

Both affine Weyl groups are the infinite dihedral group, written as pairs
(n, eps) acting on Z by k -> n + eps*k.  SL(2) only sees even translations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .report import CheckReport


class GroupKind(enum.Enum):
    SL2 = "SL2"
    PGL2 = "PGL2"


class InvalidClass(ValueError):
    pass


class KindMismatch(ValueError):
    pass


class NotTranslation(ValueError):
    pass


class NotSelfDual(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DihedralElement:
    n: int
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return DihedralElement(self.n + self.eps * other.n, self.eps * other.eps)

    def inverse(self) -> "DihedralElement":
        return DihedralElement(-self.eps * self.n, self.eps)

    def is_translation(self) -> bool:
        return self.eps == 1

    def allowed(self, kind: GroupKind) -> bool:
        return kind is GroupKind.PGL2 or self.n % 2 == 0

    def __str__(self):
        return f"({self.n},{'+' if self.eps == 1 else '-'})"


E = DihedralElement(0, 1)
R0 = DihedralElement(0, -1)
R1 = DihedralElement(2, -1)
R_HALF = DihedralElement(1, -1)


class GroupAlgebraElement:
    """Finite Z-combination of dihedral elements of a fixed kind."""

    __slots__ = ("kind", "terms")

    def __init__(self, kind: GroupKind, terms: Mapping[DihedralElement, int] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[DihedralElement, int] = {}
        for g, c in items:
            if not g.allowed(kind):
                raise InvalidClass(f"{g} is not in the affine Weyl group of {kind.value}")
            acc[g] = acc.get(g, 0) + c
        self.kind = kind
        self.terms = {g: c for g, c in sorted(acc.items(), key=lambda gc: (gc[0].n, gc[0].eps)) if c}

    @classmethod
    def basis(cls, kind: GroupKind, g: DihedralElement, c: int = 1) -> "GroupAlgebraElement":
        return cls(kind, {g: c})

    def _check(self, other: "GroupAlgebraElement"):
        if self.kind is not other.kind:
            raise KindMismatch(f"{self.kind.value} vs {other.kind.value}")

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.kind, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GroupAlgebraElement(self.kind, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElement(self.kind, {g: c * other for g, c in self.terms.items()})
        return ga_mul(self, other)

    def __rmul__(self, other: int):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only group elements have negative powers")
            (g, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("not a unit")
            return GroupAlgebraElement(self.kind, {g.inverse(): c}) ** (-k)
        out = identity(self.kind)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.kind is other.kind and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[DihedralElement]:
        return list(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for g, c in self.terms.items():
            body = f"{g}" if abs(c) == 1 else f"{abs(c)}{g}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"<{self.kind.value}: {self}>"


def identity(kind: GroupKind) -> GroupAlgebraElement:
    return GroupAlgebraElement.basis(kind, E)


def ga_mul(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    u._check(v)
    acc: Dict[DihedralElement, int] = {}
    for g, a in u.terms.items():
        for h, b in v.terms.items():
            gh = g * h
            acc[gh] = acc.get(gh, 0) + a * b
    return GroupAlgebraElement(u.kind, acc)


def translation(k: int) -> DihedralElement:
    """The Wakimoto translation J(k) = (r_0 r_{1/2})^k, which is (-k, +)."""
    # r_0 r_{1/2} = (0,-)(1,-) = (-1,+) in this group law
    return DihedralElement(-k, 1)


def k0_class(name: str, kind: GroupKind, k: int | None = None) -> GroupAlgebraElement:
    """Classes of the standard objects; ``J`` takes the translation amount ``k``."""
    if name == "J" or name.startswith("J("):
        if name.startswith("J("):
            k = int(name[2:-1])
        if k is None:
            raise InvalidClass("J needs a translation amount")
        if kind is GroupKind.SL2 and k % 2:
            raise InvalidClass("SL2 has only even Wakimoto translations")
        return GroupAlgebraElement.basis(kind, translation(k))
    if name == "delta":
        return identity(kind)
    if name in ("T0_star", "T0_shriek"):
        return GroupAlgebraElement.basis(kind, R0)
    if name == "T1_star":
        if kind is not GroupKind.SL2:
            raise InvalidClass("T1_star is an SL2 class")
        return GroupAlgebraElement.basis(kind, R1)
    if name == "T_half":
        if kind is not GroupKind.PGL2:
            raise InvalidClass("T_half is a PGL2 class")
        return GroupAlgebraElement.basis(kind, R_HALF)
    if name == "Avg":
        return GroupAlgebraElement(kind, {R0: 1, E: -1})
    raise InvalidClass(f"unknown class {name!r}")


def J(k: int, kind: GroupKind = GroupKind.PGL2) -> GroupAlgebraElement:
    return k0_class("J", kind, k)


def _translation_steps(kind: GroupKind) -> Tuple[str, int]:
    return ("T1_star", 2) if kind is GroupKind.SL2 else ("T_half", 1)


def waki_monoid_check(kmax: int) -> CheckReport:
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    rep = CheckReport("hecke.wakimoto_monoid")
    r0 = {kind: k0_class("T0_star", kind) for kind in GroupKind}
    for kind in GroupKind:
        step = 2 if kind is GroupKind.SL2 else 1
        rng = [k for k in range(-kmax, kmax + 1) if k % step == 0]
        bad_mul = [(a, b) for a in rng for b in rng if J(a, kind) * J(b, kind) != J(a + b, kind)]
        rep.add(f"{kind.value}.J(a)J(b)=J(a+b)", not bad_mul, [], bad_mul[:5],
                anchor="Wakimoto monoid")
        bad_inv = [a for a in rng if J(a, kind) * J(-a, kind) != identity(kind)]
        rep.add(f"{kind.value}.J(a)J(-a)=delta", not bad_inv, [], bad_inv[:5],
                anchor="Wakimoto monoid")
        bad_conj = [k for k in rng if r0[kind] * J(k, kind) * r0[kind] != J(-k, kind)]
        rep.add(f"{kind.value}.r0J(k)r0=J(-k)", not bad_conj, [], bad_conj[:5])
    return rep


def verify_relations(kmax: int = 20) -> CheckReport:
    rep = CheckReport("hecke.relations")
    for kind in GroupKind:
        T0 = k0_class("T0_star", kind)
        Ts = k0_class("T0_shriek", kind)
        d = k0_class("delta", kind)
        avg = k0_class("Avg", kind)
        rep.add(f"{kind.value}.T0*=Avg+delta", T0 == avg + d, str(avg + d), str(T0),
                anchor="averaging triangles")
        rep.add(f"{kind.value}.T0!=T0*", T0 == Ts, str(T0), str(Ts), anchor="averaging triangles")
        rep.add(f"{kind.value}.T0*T0!=delta", T0 * Ts == d, str(d), str(T0 * Ts))
        rep.add(f"{kind.value}.Avg^2=-2Avg", avg * avg == avg * -2, str(avg * -2), str(avg * avg))
        name, step = _translation_steps(kind)
        T1 = k0_class(name, kind)
        base = T0 * T1
        bad = [k for k in range(-kmax, kmax + 1)
               if J(step * k, kind) != base ** k]
        label = "J(2k)" if step == 2 else "J(k)"
        rep.add(f"{kind.value}.{label}=(T0*{name})^k", not bad, [], bad[:5],
                details=f"|k| <= {kmax}", anchor="Wakimoto generators")
        conj = J(step, kind) * T1 * J(step, kind) ** -1
        refl = all(g.eps == -1 for g in conj.terms) and len(conj.terms) == 1
        rep.add(f"{kind.value}.conjugate_of_{name}_is_reflection", refl, True, str(conj))
    th = k0_class("T_half", GroupKind.PGL2)
    rep.add("PGL2.T_half^2=delta", th * th == identity(GroupKind.PGL2), "(0,+)", str(th * th),
            anchor="Atkin-Lehner")
    return rep


@dataclass(frozen=True)
class EisVector:
    """Finitely supported vector in the free Z-module on e_lambda."""

    coeffs: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]]) -> "EisVector":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[int, int] = {}
        for lam, c in items:
            acc[lam] = acc.get(lam, 0) + c
        return cls(tuple(sorted((l, c) for l, c in acc.items() if c)))

    @classmethod
    def e(cls, lam: int) -> "EisVector":
        return cls.of({lam: 1})

    def __add__(self, other: "EisVector") -> "EisVector":
        return EisVector.of(list(self.coeffs) + list(other.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"e_{l}" if c == 1 else f"{c}*e_{l}" for l, c in self.coeffs)


def eis_action(g: GroupAlgebraElement, v: EisVector) -> EisVector:
    """J(mu) e_lambda = e_(lambda + mu)."""
    acc: Dict[int, int] = {}
    for h, c in g.terms.items():
        if not h.is_translation():
            raise NotTranslation(f"{h} is a reflection; only translations act on Eis classes")
        mu = -h.n
        for lam, a in v.coeffs:
            acc[lam + mu] = acc.get(lam + mu, 0) + c * a
    return EisVector.of(acc)


@dataclass(frozen=True)
class AsphericalModule:
    """Z[W] / Z[W](r_0 - e): free on the translations, wh the class of e."""

    kind: GroupKind

    @staticmethod
    def _coset_rep(g: DihedralElement) -> DihedralElement:
        # g r_0 = (n, -eps); pick the translation in {g, g r_0}
        return g if g.is_translation() else g * R0

    def act(self, u: GroupAlgebraElement, vec: Mapping[int, int]) -> Dict[int, int]:
        """Left action on vectors keyed by the translation amount k of J(k) wh."""
        if u.kind is not self.kind:
            raise KindMismatch("module kind mismatch")
        acc: Dict[int, int] = {}
        for g, c in u.terms.items():
            for k, a in vec.items():
                rep = self._coset_rep(g * translation(k))
                kk = -rep.n
                acc[kk] = acc.get(kk, 0) + c * a
        return {k: c for k, c in sorted(acc.items()) if c}

    @property
    def wh(self) -> Dict[int, int]:
        return {0: 1}

    def basis_vector(self, k: int) -> Dict[int, int]:
        return self.act(J(k, self.kind), self.wh)


def aspherical_module(kind: GroupKind) -> AsphericalModule:
    return AsphericalModule(kind)


def verify_aspherical(kind: GroupKind, kmax: int = 50) -> CheckReport:
    rep = CheckReport(f"hecke.aspherical[{kind.value}]")
    M = aspherical_module(kind)
    avg = k0_class("Avg", kind)
    rep.add("Avg.wh=0", M.act(avg, M.wh) == {}, {}, M.act(avg, M.wh),
            anchor="Whittaker asphericity")
    T0 = k0_class("T0_star", kind)
    rep.add("T0*.wh=wh", M.act(T0, M.wh) == M.wh, M.wh, M.act(T0, M.wh))
    step = 2 if kind is GroupKind.SL2 else 1
    ks = [k for k in range(-kmax, kmax + 1) if k % step == 0]
    vecs = [M.basis_vector(k) for k in ks]
    # each basis vector is a single e_k, all distinct: independent
    independent = all(len(v) == 1 and list(v.values()) == [1] for v in vecs) and \
        len({next(iter(v)) for v in vecs}) == len(vecs)
    rep.add("J(k).wh_independent", independent, True, independent, details=f"|k| <= {kmax}")
    # Avg kills r_0-symmetrised vectors (1 + r_0) J(k) wh
    sym_bad = [k for k in ks
               if M.act(avg, M.act(identity(kind) + T0, M.basis_vector(k))) != {}]
    rep.add("Avg_kills_symmetrised", not sym_bad, [], sym_bad[:5])
    return rep


def central_class(weights: Sequence[Tuple[int, int]],
                  kind: GroupKind = GroupKind.PGL2) -> GroupAlgebraElement:
    """Sum of mult * J(lambda) over the weights of a self-dual representation."""
    acc: Dict[int, int] = {}
    for lam, m in weights:
        acc[lam] = acc.get(lam, 0) + m
    if any(acc.get(-lam, 0) != m for lam, m in acc.items()):
        raise NotSelfDual(f"weights {sorted(acc.items())} are not symmetric")
    out = GroupAlgebraElement(kind)
    for lam, m in acc.items():
        out = out + J(lam, kind) * m
    return out


def run_all(kmax: int = 20) -> CheckReport:
    rep = CheckReport("hecke")
    rep.extend(verify_relations(kmax), "relations.")
    rep.extend(waki_monoid_check(kmax), "wakimoto.")
    for kind in GroupKind:
        rep.extend(verify_aspherical(kind), f"aspherical.{kind.value}.")
    eis = eis_action(J(3), EisVector.e(-1))
    rep.add("eis.J(3)e_-1=e_2", eis == EisVector.e(2), "e_2", str(eis),
            anchor="Wakimoto on Eisenstein")
    bad = [(mu, lam) for mu in range(-kmax, kmax + 1) for lam in range(-3, 4)
           if eis_action(J(mu), EisVector.e(lam)) != EisVector.e(lam + mu)]
    rep.add("eis.translation_action", not bad, [], bad[:5], anchor="Wakimoto on Eisenstein")
    return rep
