import random

import pytest
from hypothesis import given, strategies as st

from tamegl.heckewaki import (E, R0, R1, R_HALF, DihedralElement, EisVector,
                              GroupKind, InvalidClass, KindMismatch,
                              NotTranslation, J, aspherical_module, central_class, eis_action,
                              ga_mul, identity, k0_class, run_all, translation,
                              verify_aspherical, verify_relations, waki_monoid_check)

SL2, PGL2 = GroupKind.SL2, GroupKind.PGL2


def affine(g):
    """x -> eps*x + n as an integer 2x2 matrix."""
    return ((g.eps, g.n), (0, 1))


def affine_mul(m, n):
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def test_group_axioms_random_triples():
    rnd = random.Random(20240)
    for _ in range(10_000):
        g, h, k = (DihedralElement(rnd.randint(-50, 50), rnd.choice((1, -1))) for _ in range(3))
        assert (g * h) * k == g * (h * k)
        assert g * g.inverse() == E == g.inverse() * g
        assert g * E == g == E * g
        assert affine(g * h) == affine_mul(affine(g), affine(h))


def test_basic_products():
    r0 = k0_class("T0_star", PGL2)
    assert ga_mul(r0, r0) == identity(PGL2)
    avg = k0_class("Avg", PGL2)
    assert avg * avg == avg * -2
    th = k0_class("T_half", PGL2)
    assert th * th == identity(PGL2)
    assert k0_class("T0_star", SL2) == k0_class("Avg", SL2) + k0_class("delta", SL2)
    assert k0_class("T0_star", SL2) * k0_class("T0_shriek", SL2) == identity(SL2)


@pytest.mark.parametrize("k", range(-20, 21))
def test_translation_generators(k):
    r0 = {kind: k0_class("T0_star", kind) for kind in GroupKind}
    assert J(2 * k, SL2) == (r0[SL2] * k0_class("T1_star", SL2)) ** k
    assert J(k, PGL2) == (r0[PGL2] * k0_class("T_half", PGL2)) ** k


def test_translation_orientation():
    assert R0 * R_HALF == translation(1)
    assert R0 * R1 == translation(2)


def test_wakimoto_examples():
    assert J(3) * J(-3) == identity(PGL2)
    assert J(1) * J(1) == J(2)
    r0 = k0_class("T0_star", SL2)
    assert r0 * J(2, SL2) * r0 == J(-2, SL2)


def test_conjugates_are_reflections():
    for kind, name, step in ((SL2, "T1_star", 2), (PGL2, "T_half", 1)):
        conj = J(step, kind) * k0_class(name, kind) * J(-step, kind)
        assert len(conj.support()) == 1 and conj.support()[0].eps == -1


def test_invalid_classes():
    with pytest.raises(InvalidClass):
        k0_class("T_half", SL2)
    with pytest.raises(InvalidClass):
        k0_class("T1_star", PGL2)
    with pytest.raises(InvalidClass):
        J(1, SL2)
    with pytest.raises(InvalidClass):
        k0_class("nonsense", PGL2)
    with pytest.raises(KindMismatch):
        ga_mul(identity(SL2), identity(PGL2))


def test_eis_action_examples():
    assert eis_action(J(3), EisVector.e(-1)) == EisVector.e(2)
    assert eis_action(J(0), EisVector.e(5)) == EisVector.e(5)
    assert eis_action(J(1) + J(-1), EisVector.e(0)) == EisVector.e(1) + EisVector.e(-1)
    with pytest.raises(NotTranslation):
        eis_action(k0_class("T0_star", PGL2), EisVector.e(0))


vectors = st.dictionaries(st.integers(-10, 10), st.integers(-3, 3), max_size=4).map(EisVector.of)


@given(st.integers(-10, 10), st.integers(-10, 10), vectors)
def test_eis_action_is_an_action(a, b, v):
    assert eis_action(J(a), eis_action(J(b), v)) == eis_action(J(a + b), v)
    assert eis_action(J(-a), eis_action(J(a), v)) == v


def test_aspherical_module():
    for kind in GroupKind:
        M = aspherical_module(kind)
        assert M.act(k0_class("Avg", kind), M.wh) == {}
        assert M.act(k0_class("T0_star", kind), M.wh) == M.wh
        assert verify_aspherical(kind).passed
    M = aspherical_module(PGL2)
    assert M.act(J(1), M.wh) != M.wh


def test_central_class():
    assert central_class([(1, 1), (-1, 1)]) == J(1) + J(-1)
    assert central_class([(0, 1)]) == identity(PGL2)
    assert central_class([(2, 1), (0, 1), (-2, 1)], SL2) == J(2, SL2) + identity(SL2) + J(-2, SL2)


def test_printing():
    assert str(J(1) + J(-1)) == "(-1,+) + (1,+)"


def test_suites():
    assert verify_relations(20).passed
    assert waki_monoid_check(20).passed
    assert run_all().passed
