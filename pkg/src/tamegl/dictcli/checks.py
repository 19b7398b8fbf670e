"""Cross-module consistency checks behind the dictionary table."""
from __future__ import annotations

from typing import List, Optional

from .. import heckewaki as hw
from .. import sl2rep, spectral
from ..fqbun import (S, OrbitLabel, aut_order, atkin_lehner, classify, closure, labels,
                     orbit_dimension, representative, specializations, stabilizer_order)
from ..report import CheckReport
from .table import AutomorphicDescriptor, MatchEntry, dictionary_table

# automorphic Hom values are stated, not computed: scalars at n = -1, zero above
STATED_HOM = {-1: 1}

WH_OPEN = (OrbitLabel.parse("c_1(*)"), OrbitLabel.parse("c_1(∅)"))


def stated_hom(n: int) -> int:
    return STATED_HOM.get(n, 0)


def eis_support(n: int) -> OrbitLabel:
    """Label of the stratum carrying Eis_n."""
    if n == -1:
        return OrbitLabel(1, frozenset())
    if n < -1:
        raise ValueError("only n >= -1 has a single-stratum support")
    return OrbitLabel(n, frozenset(S))


def support_labels(a: AutomorphicDescriptor) -> List[OrbitLabel]:
    if a.kind == "Wh":
        return list(WH_OPEN)
    if a.kind == "Eis":
        return [eis_support(a.n)]
    if a.kind in ("IC", "F"):
        return [OrbitLabel.parse(a.label)]
    return []


def support_parity(a: AutomorphicDescriptor) -> int:
    if a.kind == "J_translate":
        return (support_parity(a.base) + a.n) % 2
    return support_labels(a)[0].d % 2


def _label_ok(lab: OrbitLabel, q: int) -> bool:
    return lab in labels(lab.d) and aut_order(lab, q) == stabilizer_order(representative(lab, q))


def check_row(row: MatchEntry, q: int = 3) -> CheckReport:
    rep = CheckReport("row")
    sp, au = row.spectral, row.automorphic
    for name in row.checks:
        if name == "parity":
            want = (1 + sp.total_twist()) % 2
            got = support_parity(au)
            rep.add("parity", got == want, want, got, anchor="parity rule")
        elif name == "support_labels":
            labs = support_labels(au)
            ok = bool(labs) and all(_label_ok(l, q) for l in labs)
            rep.add("support_labels", ok, [str(l) for l in labs],
                    [(str(l), aut_order(l, q)) for l in labs], details=f"q={q}",
                    anchor="orbit labels")
        elif name == "component_base":
            R = OrbitLabel.parse(au.label).R
            base = frozenset(spectral.component(sp.component).conormal_base)
            twist = tuple(0 if s in R else -1 for s in S)
            ok = base == R and twist == sp.twist
            rep.add("component_base", ok, (sorted(R), twist), (sorted(base), sp.twist),
                    anchor="conormal components")
        elif name == "eis_rule":
            got = sp.twist[0]
            rep.add("eis_rule", got == au.n + 1, au.n + 1, got, anchor="Eisenstein matching")
        elif name == "hom":
            got = sl2rep.sections_diagonal(sp.twist[0], sl2rep.HOM_CUTOFF)
            want = stated_hom(au.n)
            rep.add("hom", got == want, want, got, details="spectral computed, automorphic stated",
                    anchor="Hom from O to O_Delta")
        elif name == "sections":
            a, b, c = sp.twist
            got = sl2rep.sections_P1cubed(a, b, c)
            acyclic = all(sl2rep.coh_P1(t) == sl2rep.CohPair() for t in sp.twist)
            rep.add("sections", got == 0 and acyclic, (0, True), (got, acyclic),
                    anchor="open point")
        elif name == "aspherical":
            sub = hw.verify_aspherical(hw.GroupKind.PGL2)
            rep.add("aspherical", sub.passed, "pass", sub.status,
                    details=",".join(c.id for c in sub.failures()), anchor="Whittaker asphericity")
        elif name == "wakimoto_twist":
            pos = S.index(au.point)
            want = tuple(au.n if i == pos else 0 for i in range(3))
            step = hw.J(au.n)
            ok = sp.twist == want and all(g.is_translation() for g in step.support())
            rep.add("wakimoto_twist", ok, want, sp.twist, anchor="Wakimoto twist")
        else:
            raise KeyError(f"unknown row check {name!r}")
    return rep


def verify_table(q: int = 3) -> CheckReport:
    rep = CheckReport("dictionary.rows")
    rows = dictionary_table()
    rep.add("row_count", len(rows) == 9, 9, len(rows))
    for i, row in enumerate(rows):
        rep.extend(check_row(row, q), f"{i}:{row.automorphic}.")
    return rep


def verify_al_swap(q: int = 3) -> CheckReport:
    """AL_r flips the parity of every row's support and is an involution there."""
    rep = CheckReport("dictionary.al_swap")
    seen = []
    for row in dictionary_table():
        seen += [l for l in support_labels(row.automorphic) if l not in seen]
    for lab in seen:
        p = representative(lab, q)
        for r in S:
            img = atkin_lehner(p, r)
            back = classify(atkin_lehner(img, r))
            ok = img.d % 2 != lab.d % 2 and back == lab
            rep.add(f"{lab}.AL_{r}", ok, f"parity {1 - lab.d % 2}, involution",
                    f"{classify(img)}, back {back}", anchor="Atkin-Lehner")
    return rep


def verify_hom_table(n_max: int) -> CheckReport:
    if n_max < -1:
        raise ValueError("n_max must be >= -1")
    rep = CheckReport("dictionary.hom")
    for n, got in sl2rep.hom_structure_table(n_max):
        want = stated_hom(n)
        rep.add(f"n={n}", got == want, want, got, details="spectral computed, automorphic stated",
                anchor="Hom from O to O_Delta")
    return rep


def _matched(delta_twist: int, eis_index: int) -> bool:
    return delta_twist == eis_index + 1


def verify_wakimoto_equivariance(kmax: int) -> CheckReport:
    """J(mu) on Eis classes against O_Delta(n) -> O_Delta(n + mu)."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    rep = CheckReport("dictionary.wakimoto")
    bad = []
    for n in range(-kmax, kmax + 1):
        for mu in range(-kmax, kmax + 1):
            moved = hw.eis_action(hw.J(mu), hw.EisVector.e(n))
            if len(moved.coeffs) != 1 or moved.coeffs[0][1] != 1:
                bad.append((n, mu))
                continue
            if not _matched(n + 1 + mu, moved.coeffs[0][0]):
                bad.append((n, mu))
    rep.add("closed_under_translation", not bad, [], bad[:5], details=f"|n|,|mu| <= {kmax}",
            anchor="Wakimoto on Eisenstein")
    ident = [n for n in range(-kmax, kmax + 1)
             if hw.eis_action(hw.J(0), hw.EisVector.e(n)) != hw.EisVector.e(n)]
    rep.add("mu=0_identity", not ident, [], ident)
    comp = [(n, mu) for n in range(-kmax, kmax + 1) for mu in range(-kmax, kmax + 1)
            if hw.eis_action(hw.J(-mu), hw.eis_action(hw.J(mu), hw.EisVector.e(n)))
            != hw.EisVector.e(n)]
    rep.add("inverse_translation", not comp, [], comp[:5])
    return rep


def verify_newform_sequences(n_max: int, cutoff: int = 10, q: int = 3) -> CheckReport:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    rep = CheckReport("dictionary.newform")
    for n in range(0, n_max + 1):
        lhs = sl2rep.sections_diagonal(n, cutoff)
        rhs = sl2rep.sections_diagonal(n + 2, cutoff - 1) + sl2rep.sections_theta(n, cutoff)
        rep.add(f"additivity.n={n}", lhs == rhs, lhs, rhs, details=f"cutoff {cutoff}",
                anchor="newform generation")
    for n in range(-1, n_max + 1):
        lab = eis_support(n)
        want = aut_order(lab, q)
        got = stabilizer_order(representative(lab, q))
        rep.add(f"Eis_{n}.label", lab in labels(lab.d) and got == want, (str(lab), want),
                (str(lab), got), details=f"q={q}", anchor="easy Eisenstein")
    return rep


def verify_support_disjointness(dmax: int = 4, within: Optional[tuple] = WH_OPEN) -> CheckReport:
    rep = CheckReport("dictionary.support")
    wh = closure([WH_OPEN[0]], within=within)
    rep.add("wh_closure_contains_c_1(∅)", WH_OPEN[1] in wh, True, WH_OPEN[1] in wh,
            anchor="Whittaker support")
    for n in range(0, dmax + 1):
        lab = eis_support(n)
        rep.add(f"disjoint.Eis_{n}", lab not in wh, "disjoint", sorted(map(str, wh)),
                anchor="support disjointness")
    bad = [(str(a), str(b)) for d in range(dmax + 1) for a in labels(d)
           for b in specializations(a) if orbit_dimension(b) >= orbit_dimension(a)]
    rep.add("poset_dimension_drops", not bad, [], bad, anchor="orbit poset")
    return rep


def run_all(q: int = 3, dmax: int = 3, cutoff: int = 10, kmax: int = 10) -> CheckReport:
    rep = CheckReport("dictionary")
    rep.extend(verify_table(q), "rows.")
    rep.extend(verify_al_swap(q), "al_swap.")
    rep.extend(verify_hom_table(20), "hom.")
    rep.extend(verify_wakimoto_equivariance(kmax), "wakimoto.")
    rep.extend(verify_newform_sequences(dmax, cutoff, q), "newform.")
    rep.extend(verify_support_disjointness(max(dmax, 4)), "support.")
    return rep
