"""Checks over F_q: census, Hecke fibres, Atkin-Lehner, splitting types."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict

from ..report import CheckReport
from .birkhoff import TransitionMatrix, splitting_type
from .field import FqConfig
from .hecke import atkin_lehner, hecke_fiber_counts, unramified_points
from .moduli import (S, OrbitLabel, aut_bundle_order, aut_order, classify, groupoid_mass,
                     labels, orbit_census, orbits_by_action, representative, all_points)

EXPECTED_LABEL_COUNTS = {0: 5, 1: 9}


def _fmt(counts: Dict[OrbitLabel, int]) -> Dict[str, int]:
    return {str(k): v for k, v in counts.items()}


def census_report(q: int, dmax: int) -> CheckReport:
    rep = CheckReport("fqbun.census")
    for d in range(dmax + 1):
        c = orbit_census(d, q)
        n_expected = EXPECTED_LABEL_COUNTS.get(d, 8)
        rep.add(f"d={d}.label_count", len(c.sizes) == n_expected, n_expected, len(c.sizes),
                anchor="points of Bun")
        rep.add(f"d={d}.total", c.total() == (q + 1) ** 3, (q + 1) ** 3, c.total())
        prods = {str(lab): n * aut_order(lab, q) for lab, n in c.sizes}
        rep.add(f"d={d}.orbit_stabilizer", c.orbit_stabilizer_ok(), aut_bundle_order(d, q),
                prods, anchor="automorphism groups")
        # orbits of the automorphism group computed from generators agree with classify
        classes = {frozenset(p.lines for p in all_points(d, q) if classify(p) == lab)
                   for lab in labels(d)}
        classes.discard(frozenset())
        action = set(orbits_by_action(d, q))
        rep.add(f"d={d}.orbits_match_action", classes == action, len(action), len(classes))
        m = groupoid_mass(d, q)
        target = Fraction((q + 1) ** 3, aut_bundle_order(d, q))
        rep.add(f"d={d}.groupoid_mass", m == target, target, m)
    return rep


def hecke_report(q: int, dmax: int) -> CheckReport:
    rep = CheckReport("fqbun.hecke_fibers")
    xs = unramified_points(q)
    if not xs:
        rep.skip("fibers", details=f"P^1(F_{q}) has no point outside the three marked ones")
        return rep
    bases = [lab for d in range(max(dmax, 1)) for lab in labels(d)]
    table = {}
    for lab in bases:
        per_x = [hecke_fiber_counts(lab, x, q) for x in xs]
        table[lab] = per_x[0]
        same = all(c == per_x[0] for c in per_x)
        rep.add(f"{lab}.independent_of_x", same, _fmt(per_x[0]),
                [_fmt(c) for c in per_x] if not same else _fmt(per_x[0]),
                anchor="local constancy")
        total = sum(per_x[0].values())
        rep.add(f"{lab}.total", total == q + 1, q + 1, total)
    for s in S:
        rest = frozenset(S) - {s}
        for b, bp in ((OrbitLabel(0, rest), OrbitLabel(1, frozenset({s}))),
                      (OrbitLabel(1, frozenset({s})), OrbitLabel(0, rest))):
            n = table[b].get(bp, 0)
            rep.add(f"{b}->{bp}.count", n == 1, 1, n, anchor="isomorphism case")
    generic = OrbitLabel(1, "*")
    n = table[OrbitLabel(0, frozenset())].get(generic, 0)
    rep.add("c_0(∅)->c_1(*).count", n == q, q, n,
            details=f"full fibre {_fmt(table[OrbitLabel(0, frozenset())])}",
            anchor="affine line fibration")
    return rep


def atkin_lehner_report(q: int, dmax: int) -> CheckReport:
    rep = CheckReport("fqbun.atkin_lehner")
    for d in range(dmax + 1):
        for lab in labels(d):
            p = representative(lab, q)
            for r in S:
                img = atkin_lehner(p, r)
                back = classify(atkin_lehner(img, r))
                rep.add(f"{lab}.AL_{r}.involution", back == lab, str(lab), str(back))
                flip = (img.d - p.d) % 2 == 1
                rep.add(f"{lab}.AL_{r}.parity", flip, "odd shift", img.d - p.d)
            images = {}
            for r in S:
                for r2 in S:
                    images[(r, r2)] = classify(atkin_lehner(atkin_lehner(p, r), r2))
            comm = all(images[(r, r2)] == images[(r2, r)] for r in S for r2 in S)
            rep.add(f"{lab}.AL_commute", comm, True, comm, anchor="Atkin-Lehner group")
    base = representative(OrbitLabel(0, frozenset()), q)
    for r in S:
        got = classify(atkin_lehner(base, r))
        rep.add(f"AL_{r}(c_0(∅))", got == OrbitLabel(1, "*"), "c_1(*)", str(got),
                anchor="open points exchanged")
    return rep


def splitting_report(q: int) -> CheckReport:
    rep = CheckReport("fqbun.splitting")
    fixtures = [
        ("identity", [[{0: 1}, {}], [{}, {0: 1}]], 0),
        ("diag(t,1)", [[{1: 1}, {}], [{}, {0: 1}]], 1),
        ("[[t,1],[0,1/t]]", [[{1: 1}, {0: 1}], [{}, {-1: 1}]], 0),
        ("diag(t^3,1/t)", [[{3: 1}, {}], [{}, {-1: 1}]], 4),
    ]
    for name, rows, expected in fixtures:
        got = splitting_type(TransitionMatrix.from_ints(q, rows))
        rep.add(name, got == expected, expected, got)
    return rep


def run_all(q: int = 3, dmax: int = 3) -> CheckReport:
    FqConfig(q)
    rep = CheckReport("fqbun")
    rep.extend(splitting_report(q), "splitting.")
    rep.extend(census_report(q, dmax), "census.")
    rep.extend(hecke_report(q, dmax), "hecke.")
    rep.extend(atkin_lehner_report(q, dmax), "atkin_lehner.")
    return rep
