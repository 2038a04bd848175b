from __future__ import annotations

import numpy as np
import pytest

import _printed
from oscsym import catalog
from oscsym.catalog import (
    ERRATA,
    GENERATOR_NAMES,
    SECII_NAMES,
    SP4_MEMBERS,
    Ordering,
    generator,
    identification,
    o33_generator,
    permutation_matrix,
    reorder,
    secII_generator,
    sp4_generator,
)
from oscsym.errors import CatalogMiss, NoSingleGenerator
from oscsym.exactnum import ExactMatrix, I, identity, mat_mul, scalar_mul, transpose

INTERLEAVED, TRADITIONAL = Ordering.INTERLEAVED, Ordering.TRADITIONAL


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_interleaved_matches_literal(name):
    assert sp4_generator(name, printed=True) == _printed.printed(_printed.INTERLEAVED, name)


@pytest.mark.parametrize("name", sorted(SP4_MEMBERS))
def test_traditional_matches_literal(name):
    assert sp4_generator(name, TRADITIONAL) == _printed.printed(_printed.TRADITIONAL, name)


@pytest.mark.parametrize("name", SECII_NAMES)
def test_secII_matches_literal(name):
    assert secII_generator(name) == _printed.printed(_printed.SECII, name)


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_o33_matches_literal(name):
    assert o33_generator(name) == _printed.printed(_printed.O33, name)


def test_corrected_s2_is_negated_printed():
    e = ERRATA["S2", INTERLEAVED]
    assert sp4_generator("S2") == -_printed.printed(_printed.INTERLEAVED, "S2")
    assert e.printed == sp4_generator("S2", printed=True)
    # the corrected S2 coincides with the traditional-ordering L1 read in the interleaved slots
    assert sp4_generator("S2") == _printed.printed(_printed.TRADITIONAL, "L1")


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_i_times_generator_is_real_and_traceless(name):
    m = generator(name)
    assert scalar_mul(I, m).is_real()
    assert m.trace() == 0


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_o33_generators_real_after_i(name):
    assert scalar_mul(I, o33_generator(name)).is_real()


@pytest.mark.parametrize("name", sorted(SP4_MEMBERS))
def test_orderings_related_by_permutation(name):
    assert reorder(sp4_generator(name), INTERLEAVED, TRADITIONAL) == sp4_generator(name, TRADITIONAL)


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_reorder_roundtrip(name):
    m = generator(name)
    there = reorder(m, INTERLEAVED, TRADITIONAL)
    assert reorder(there, TRADITIONAL, INTERLEAVED) == m
    assert generator(name, TRADITIONAL) == there


def test_permutation_maps_coordinates():
    p = permutation_matrix().to_numpy(float)
    zeta_int = np.array([1.0, 2.0, 3.0, 4.0])  # (x1, p1, x2, p2)
    assert np.array_equal(p @ zeta_int, [1.0, 3.0, 2.0, 4.0])  # (x1, x2, p1, p2)
    assert mat_mul(permutation_matrix(), transpose(permutation_matrix())) == identity(4)


def test_permutation_relates_printed_j_matrices():
    p = permutation_matrix()
    j_int = _printed.literal("1", _printed.J_INTERLEAVED)
    j_trad = _printed.literal("1", _printed.J_TRADITIONAL)
    assert mat_mul(mat_mul(p, j_int), transpose(p)) == j_trad


def test_reorder_same_ordering_rejected():
    with pytest.raises(ValueError):
        reorder(identity(4), INTERLEAVED, "interleaved")


def test_traditional_extras_not_tabulated():
    with pytest.raises(CatalogMiss):
        sp4_generator("G3", TRADITIONAL)
    assert generator("G3", TRADITIONAL).n == 4


def test_unknown_names():
    with pytest.raises(CatalogMiss):
        sp4_generator("X9")
    with pytest.raises(CatalogMiss):
        secII_generator("D1")
    with pytest.raises(KeyError):
        o33_generator("Z")


def test_ordering_parse():
    assert Ordering.parse("Traditional") is TRADITIONAL
    with pytest.raises(ValueError):
        Ordering.parse("diagonal")


@pytest.mark.parametrize("name", ["Aplus", "Aminus", "A3", "A0", "Bplus", "Bminus", "B3", "Cplus", "Cminus", "C3"])
def test_identification(name):
    sign, target = identification(name)
    assert secII_generator(name) == scalar_mul(sign, sp4_generator(target))


@pytest.mark.parametrize("name", ["A1", "B1", "C1", "A2", "B2", "C2"])
def test_half_generators_have_no_single_image(name):
    with pytest.raises(NoSingleGenerator):
        identification(name)


def test_sums_of_halves():
    s = catalog.secII_generator
    assert s("A1") + s("A2") == s("Aplus")
    assert s("B1") - s("B2") == s("Bminus")
    assert s("C1") + s("C2") == s("Cplus")


def test_pauli():
    for k in (1, 2, 3):
        m = ExactMatrix(catalog.pauli(k))
        assert m @ m == identity(2)
