import pytest
from hypothesis import given, strategies as st

from oracles import cech_oracle
from tamegl.algkernel import LaurentPoly
from tamegl.sl2rep import (CohPair, NegativeWeight, VirtualRep, cech_weights, coh_P1,
                           hom_structure_table, invariant_dim, irr_char, run_all,
                           sections_diagonal, sections_P1cubed, sections_theta,
                           tensor_decompose)


def test_characters():
    assert str(irr_char(0)) == "1"
    assert irr_char(1).laurent == LaurentPoly({1: 1, -1: 1})
    assert irr_char(2).laurent == LaurentPoly({2: 1, 0: 1, -2: 1})
    with pytest.raises(NegativeWeight):
        irr_char(-1)


def test_tensor_examples():
    assert tensor_decompose(1, 1) == VirtualRep.of({2: 1, 0: 1})
    assert tensor_decompose(5, 0) == VirtualRep.irreducible(5)
    assert tensor_decompose(2, 1) == VirtualRep.of({3: 1, 1: 1})
    assert invariant_dim(VirtualRep.irreducible(0)) == 1
    assert invariant_dim(VirtualRep.irreducible(2)) == 0
    assert invariant_dim(tensor_decompose(1, 1)) == 1


@pytest.mark.parametrize("a", range(13))
def test_character_homomorphism(a):
    for b in range(13):
        assert tensor_decompose(a, b).character() == irr_char(a) * irr_char(b)


def test_cohomology_examples():
    assert coh_P1(0) == CohPair(VirtualRep.irreducible(0), VirtualRep())
    assert coh_P1(-1) == CohPair()
    assert coh_P1(-2) == CohPair(VirtualRep(), VirtualRep.irreducible(0))


@pytest.mark.parametrize("n", range(-10, 11))
def test_bwb_against_cech(n):
    c = coh_P1(n)
    want = cech_oracle(n)
    assert (c.h0.character().laurent, c.h1.character().laurent) == want
    assert cech_weights(n) == want
    assert c.euler() == n + 1
    assert c.h1.dim() == coh_P1(-n - 2).h0.dim()


def test_sections_examples():
    assert sections_diagonal(0, 10) == 1
    assert sections_diagonal(3, 10) == 0
    assert sections_diagonal(1, 0) == 0
    assert sections_theta(0, 5) == 1
    with pytest.raises(ValueError):
        sections_diagonal(0, -1)


@given(st.integers(0, 30), st.integers(0, 20), st.integers(0, 20))
def test_sections_constant_in_cutoff_for_nonnegative(n, c1, c2):
    assert sections_diagonal(n, c1) == sections_diagonal(n, c2)


@given(st.integers(-30, -1), st.integers(0, 20))
def test_sections_monotone_for_negative(n, c):
    assert sections_diagonal(n, c) <= sections_diagonal(n, c + 1)


@given(st.integers(-20, 20), st.integers(1, 20))
def test_diagonal_theta_additivity(n, c):
    assert sections_diagonal(n, c) == sections_diagonal(n + 2, c - 1) + sections_theta(n, c)


def test_hom_table():
    table = hom_structure_table(20)
    assert table[0] == (-1, 1)
    assert all(v == 0 for n, v in table[1:])
    assert dict(table)[7] == 0
    with pytest.raises(ValueError):
        hom_structure_table(-2)


def test_sections_P1cubed():
    assert sections_P1cubed(-1, -1, -1) == 0
    assert sections_P1cubed(0, 0, 0) == 1
    assert sections_P1cubed(1, 1, 0) == 1
    assert sections_P1cubed(1, 1, 2) == 1
    assert sections_P1cubed(1, 1, 1) == 0


@given(st.dictionaries(st.integers(0, 6), st.integers(-3, 3), max_size=4))
def test_character_round_trip(mults):
    v = VirtualRep.of(mults)
    assert VirtualRep.from_character(v.character()) == v
    assert v.character().dim() == v.dim()


def test_suite():
    assert run_all().passed
