"""End-to-end acceptance checks, one group of tests per criterion.

Each test name starts with ``test_criterion_<n>_``; ``conftest.py`` folds
the outcomes into one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import io
import itertools
import json
import math

import numpy as np
import pytest

import _printed
from oscsym import catalog
from oscsym.algebra import BasisSet, check_isomorphism, enumerate_sp4_subgroups, structure_constants
from oscsym.catalog import GENERATOR_NAMES, NONCANONICAL, SECII_NAMES, SP4_MEMBERS, Ordering
from oscsym.cli import run
from oscsym.exactnum import GaussRational, transpose
from oscsym.oscillator import NormalForm, ReducedParams, normal_form, reconstruct, spectrum
from oscsym.phasespace import (
    GroupElement,
    canonical_deviation,
    exp_generator,
    generator_is_canonical,
    j_matrix,
    symplectic_eigenvalues,
    transform_state,
    uncertainty_ok,
    vacuum_state,
)
from oscsym.realizations import diffop, fock_residual_table
from oscsym.relations import grand_table

RNG_SEED = 20240917


def cli_json(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())["results"]


# -- 1: bracket tables -------------------------------------------------------


def test_criterion_1_so21_halves():
    code, res = cli_json("verify-algebra", "--set", "so21")
    assert code == 0
    for key in ("A1,B1,C1", "A2,B2,C2"):
        t = res["tables"][key]
        assert (t["pairs"], t["match"], t["mismatch"]) == (3, 3, 0)


def test_criterion_1_coupling_generates_third_set():
    code, res = cli_json("verify-algebra", "--set", "coupling")
    assert code == 0 and res["mismatch"] == 0
    t = res["tables"]["coupling"]
    produced = {(r["i"], r["j"]) for r in t["results"] if r["status"] == "match"}
    assert {("A0", "Aminus"), ("A0", "Bminus"), ("A0", "Cminus")} <= produced


@pytest.mark.parametrize("ordering", ["interleaved", "traditional"])
def test_criterion_1_sp4_both_orderings(ordering):
    code, res = cli_json("verify-algebra", "--set", "sp4", "--ordering", ordering)
    assert code == 0
    t = res["tables"]["sp4"]
    assert (t["pairs"], t["match"], t["mismatch"], t["unspecified"]) == (45, 45, 0, 0)


def test_criterion_1_fifteen_generator_table():
    code, res = cli_json("verify-algebra", "--set", "sl4")
    assert code == 0
    t = res["tables"]["sl4"]
    assert (t["pairs"], t["match"], t["mismatch"]) == (105, 105, 0)
    assert {d["key"] for d in res["deviations"]} == {"repeated-QQ", "S2-sign"}
    # matrix-computed values behind the two deviations
    table = structure_constants(BasisSet.sl4())
    mi = GaussRational(0, -1)
    for (a, b), k in {("G1", "G2"): "L3", ("G2", "G3"): "L1", ("G3", "G1"): "L2"}.items():
        assert table.lookup(a, b) == {k: mi}
    assert catalog.sp4_generator("S2") == -catalog.sp4_generator("S2", printed=True)
    assert table == grand_table()


# -- 2: isomorphism ------------------------------------------------------------


def test_criterion_2_isomorphism():
    rep = check_isomorphism(BasisSet.sl4(Ordering.INTERLEAVED), BasisSet.o33())
    assert rep.isomorphic
    assert rep.pairs_checked == 105 and not rep.mismatches
    code, res = cli_json("verify-isomorphism")
    assert code == 0 and res["pairs"] == 105 and res["mismatch"] == 0


# -- 3: subgroup taxonomy ------------------------------------------------------


def test_criterion_3_subgroups():
    found = enumerate_sp4_subgroups()
    assert len(found) == 6
    J = j_matrix(Ordering.INTERLEAVED)
    nonc = {g.pivot: [n for n in g.members if not generator_is_canonical(n, J)] for g in found}
    canonical = [p for p, bad in nonc.items() if not bad]
    assert canonical == ["S3"]
    assert all(len(bad) >= 2 for p, bad in nonc.items() if p != "S3")
    assert set(nonc["L2"]) >= {"G1", "G3"}
    code, res = cli_json("subgroups")
    assert code == 0 and res["count"] == 6 and res["canonical_count"] == 1


# -- 4: oscillator roundtrip ---------------------------------------------------


def test_criterion_4_roundtrip():
    rng = np.random.default_rng(RNG_SEED)
    worst, n = 0.0, 0
    while n < 1000:
        A, B, C = 10.0 * (1.0 - rng.random(3))  # (0, 10]
        if not 4 * A * B - C * C > 0:
            continue
        n += 1
        got = reconstruct(normal_form(ReducedParams(1.0, A, B, C)))
        worst = max(worst, max(abs(x - y) / abs(y) for x, y in zip(got, (A, B, C))))
    assert worst <= 1e-12, worst


def test_criterion_4_worked_example():
    nf = normal_form(ReducedParams(1.0, 1.0, 2.0, 1.0))
    assert abs(nf.alpha - math.pi / 4) <= 1e-14
    assert abs(nf.K - math.sqrt(7) / 2) <= 1e-14


# -- 5: spectra ----------------------------------------------------------------


def test_criterion_5_spectra():
    nf0 = NormalForm(K=1.0, eta=0.0, alpha=0.3)
    for n1, n2 in itertools.product(range(6), repeat=2):
        assert spectrum(nf0, n1, n2, "coupled") == spectrum(nf0, n1, n2, "uncoupled")
    for eta in (-1e-3, -0.2559, -1.0, -4.0):
        nf = NormalForm(K=1.0, eta=eta, alpha=0.0)
        assert spectrum(nf, 1, 0) < spectrum(nf, 0, 1)


# -- 6: canonical gate ---------------------------------------------------------


def test_criterion_6_canonical_gate():
    rng = np.random.default_rng(RNG_SEED)
    J = j_matrix(Ordering.INTERLEAVED)
    thetas = rng.uniform(-2.0, 2.0, 100)
    assert np.all(thetas != 0)
    for name in sorted(SP4_MEMBERS):
        worst = max(canonical_deviation(exp_generator(name, t), J) for t in thetas)
        assert worst <= 1e-12, (name, worst)
    for name in sorted(NONCANONICAL):
        best = min(canonical_deviation(exp_generator(name, t), J) for t in thetas)
        assert best > 1e-12, (name, best)


# -- 7: uncertainty gate -------------------------------------------------------


def test_criterion_7_uncertainty_gate():
    v = vacuum_state()
    assert max(abs(nu - 0.5) for nu in symplectic_eigenvalues(v)) <= 1e-12
    assert uncertainty_ok(v)
    squeezed = transform_state(v, exp_generator("G3", 0.3))
    assert not uncertainty_ok(squeezed)
    assert abs(min(symplectic_eigenvalues(squeezed)) - math.exp(-0.3) / 2) <= 1e-12
    rng = np.random.default_rng(RNG_SEED)
    names = sorted(SP4_MEMBERS)
    for _ in range(500):
        el = GroupElement(np.eye(4))
        for _ in range(int(rng.integers(1, 5))):
            el = exp_generator(str(rng.choice(names)), float(rng.uniform(-2, 2))) @ el
        nu = symplectic_eigenvalues(transform_state(v, el))
        assert max(abs(nu[0] - 0.5), abs(nu[1] - 0.5)) <= 1e-10


# -- 8: realizations -----------------------------------------------------------


def test_criterion_8_fock():
    residuals = fock_residual_table(12)
    assert len(residuals) == 45
    assert max(residuals.values()) <= 1e-10


def test_criterion_8_differential_operators():
    for name in GENERATOR_NAMES:
        assert diffop(name).C == -transpose(catalog.sp4_generator(name)), name
    images = BasisSet(GENERATOR_NAMES, tuple(diffop(n).C for n in GENERATOR_NAMES))
    assert structure_constants(images) == structure_constants(BasisSet.sl4())


# -- 9: catalog integrity ------------------------------------------------------


def test_criterion_9_catalog():
    for n in GENERATOR_NAMES:
        assert catalog.sp4_generator(n, printed=True) == _printed.printed(_printed.INTERLEAVED, n)
        assert catalog.o33_generator(n) == _printed.printed(_printed.O33, n)
    for n in SECII_NAMES:
        assert catalog.secII_generator(n) == _printed.printed(_printed.SECII, n)
    for n in _printed.TRADITIONAL:
        assert catalog.sp4_generator(n, Ordering.TRADITIONAL) == _printed.printed(_printed.TRADITIONAL, n)
    assert len(GENERATOR_NAMES) + len(GENERATOR_NAMES) + len(SECII_NAMES) == 46


def test_criterion_9_reorder_roundtrip():
    I_, T_ = Ordering.INTERLEAVED, Ordering.TRADITIONAL
    for n in GENERATOR_NAMES:
        m = catalog.generator(n, I_)
        assert catalog.reorder(catalog.reorder(m, I_, T_), T_, I_) == m
        t = catalog.generator(n, T_)
        assert catalog.reorder(catalog.reorder(t, T_, I_), I_, T_) == t
