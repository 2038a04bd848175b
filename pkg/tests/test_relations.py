from __future__ import annotations

import pytest

from oscsym import relations
from oscsym.algebra import BasisSet, structure_constants, verify_table
from oscsym.catalog import Ordering
from oscsym.exactnum import GaussRational

i = GaussRational(0, 1)


def test_lie_sp4_size():
    assert len(relations.lie_sp4().brackets) == 45


def test_grand_table_sizes():
    assert len(relations.grand_table().brackets) == 105
    assert len(relations.grand_table(corrected=False).brackets) == 102


def test_grand_table_equals_computed():
    assert relations.grand_table() == structure_constants(BasisSet.sl4())


@pytest.mark.parametrize("ordering", list(Ordering))
def test_grand_table_both_orderings(ordering):
    rep = verify_table(BasisSet.sl4(ordering), relations.grand_table())
    assert rep.passed and rep.summary()["match"] == 105


def test_gg_bracket_value():
    t = relations.grand_table()
    assert t.lookup("G1", "G2") == {"L3": -i}


@pytest.mark.parametrize("triple", relations.SO21_TRIPLES)
def test_so21_triples(triple):
    rep = verify_table(BasisSet.secII(triple), relations.so21(*triple))
    assert rep.passed and rep.pairs_checked == 3


@pytest.mark.parametrize("triple", relations.UNREPRODUCED_SO21_TRIPLES)
def test_unreproduced_triples_fail(triple):
    rep = verify_table(BasisSet.secII(triple), relations.so21(*triple))
    assert not rep.passed


def test_coupling_relations():
    t = relations.coupling_relations()
    rep = verify_table(BasisSet.secII(relations.COMBINED_NAMES), t, pairs=list(t.brackets))
    assert rep.passed and rep.pairs_checked == 9


def test_g3_derivation_printed_signs():
    t = relations.g3_derivation()
    rep = verify_table(BasisSet.sl4(), t, pairs=list(t.brackets))
    bad = {(r.a, r.b) for r in rep.mismatches}
    assert bad == {("G3", "K3"), ("G3", "Q3")}
    assert rep.summary()["match"] == 8


def test_builder_rejects_conflicts():
    b = relations._Builder()
    b.pair("X", "Y", {"Z": i})
    with pytest.raises(ValueError):
        b.pair("Y", "X", {"Z": i})
    b.pair("Y", "X", {"Z": -i})  # consistent restatement is fine


def test_deviation_keys():
    assert {d.key for d in relations.KNOWN_DEVIATIONS} == {"repeated-QQ", "S2-sign", "G3-derivation-signs"}
