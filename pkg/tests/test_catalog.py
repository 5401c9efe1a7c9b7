from __future__ import annotations

import importlib

import pytest

from fano3.catalog import (CASES, REGISTRY, UnknownClaimError, case, export_table,
                           linear_system_dim, prym_ledger, run_all, run_claim)
from fano3.catalog import cases as ledgers
from fano3.catalog.claims import _degree_table
from fano3.config import RunConfig

IDS = """dp.genus.f1 dp.genus.f0 dp.split.f1 dp.split.f0 h22.xi5 h22.degphi h22.ram h22.detM
h22.minors32 h22.lqq4 h22.ledger h22.jac36 d6.elim d6.nodes8 d8.elim d8.nodes4 d8.septic v1.pres
v1.adj v1.conic v1.genus21 v1.params v1.prym qds.genus10 qds.eta p12.params p12.cremona
p22.params p22.lattice p22.proj p22.f12params p22.sextic v222.params v222.lattice v222.disc44
v222.eta v222.trilinear cases.table""".split()

ZERODIM = {"h22.minors32", "h22.lqq4", "h22.ledger", "d6.nodes8", "d8.nodes4"}


def test_registry_is_complete():
    assert set(IDS) == set(REGISTRY)
    assert REGISTRY["h22.jac36"].cost == "slow"
    assert all(c.cost == "fast" for k, c in REGISTRY.items() if k != "h22.jac36")


@pytest.mark.parametrize("cid", sorted(IDS))
def test_claims_name_an_importable_entry_point(cid):
    claim = REGISTRY[cid]
    module, _, attr = claim.entry_point.rpartition(".")
    assert hasattr(importlib.import_module(module), attr)
    assert claim.paper_ref and claim.description
    assert claim.paper_ref in export_table()


def test_linear_system_dim():
    assert linear_system_dim([3], [4]) == 34
    assert linear_system_dim([2], [8]) == 44
    assert linear_system_dim([1, 1, 1], [2, 2, 2]) == 26
    with pytest.raises(ValueError):
        linear_system_dim([2], [-1])


def test_ledgers_hold_exactly():
    entries = list(ledgers.height22_ledgers(32, 4)) + [
        ledgers.octic_parameter_ledger(), ledgers.two_line_parameter_ledger(),
        ledgers.p2xp2_parameter_ledger(), ledgers.flag_parameter_ledger(9),
        ledgers.triple_p1_parameter_ledger(), ledgers.prym_dimension_ledger(21)]
    assert [e.total for e in entries] == [36, 17, 52, 33, 33, 19, 18, 17, 20]
    assert all(e.holds() for e in entries)
    assert not ledgers.height22_ledgers(31, 4)[0].holds()
    sources = {t.source for t in ledgers.octic_parameter_ledger().terms}
    assert "unlabeled" in sources
    assert "implementer reading" in {t.source for t in ledgers.p2xp2_parameter_ledger().terms}
    assert ledgers.octic_parameter_ledger().render().startswith("33 = 44 [plane octics]")


@pytest.mark.parametrize("degree,h12,rank,genus", [(12, 8, None, 9), (14, 9, None, 10),
                                                    (8, 14, None, 15), (6, 20, 2, 21),
                                                    (12, 9, None, 10)])
def test_prym_ledger(degree, h12, rank, genus):
    c = case(degree, h12, rank)
    res = prym_ledger(c)
    assert res.status == "pass" and res.computed == genus - 1 == h12


def test_prym_ledger_requires_a_model():
    with pytest.raises(ValueError):
        prym_ledger(case(4, 30))


def test_case_invariants():
    assert all(c.degree > 0 and c.h12 >= 0 for c in CASES)
    assert sorted(c.degree for c in CASES if c.index == 2) == [8, 16, 24]
    with pytest.raises(ValueError):
        ledgers.FanoCase(1, 1, 0, 1, "bad")


def test_run_claim_examples():
    r = run_claim("h22.degphi")
    assert (r.status, r.computed) == ("pass", 2)
    r = run_claim("h22.minors32")
    assert (r.status, r.computed, r.prime, r.seed) == ("pass", 32, 32003, 0)
    with pytest.raises(UnknownClaimError):
        run_claim("nonexistent")


def test_slow_claims_need_opt_in():
    assert run_claim("h22.jac36").status == "skipped"
    assert "h22.jac36" not in [r.claim_id for r in run_all(RunConfig(claims=None))]


def test_failures_become_results(monkeypatch):
    from fano3.catalog import claims
    claim = REGISTRY["v1.conic"]
    broken = type(claim)(**{**claim.__dict__, "check": lambda config: 1 / 0})
    monkeypatch.setitem(claims.REGISTRY, "v1.conic", broken)
    r = run_claim("v1.conic")
    assert r.status == "fail" and "ZeroDivisionError" in r.computed["error"]


def test_bad_prime_degrades_only_prime_dependent_claims():
    _degree_table.cache_clear()
    results = {r.claim_id: r for r in run_all(RunConfig(prime=2))}
    for cid in ZERODIM:
        assert results[cid].status in ("unstable", "fail")
    for cid, r in results.items():
        if not REGISTRY[cid].uses_prime:
            assert r.status == "pass", cid


def test_run_all_is_sorted_and_deterministic():
    a = run_all(RunConfig(claims=("v222.eta", "dp.genus.f0", "p22.params")))
    assert [r.claim_id for r in a] == ["dp.genus.f0", "p22.params", "v222.eta"]
    b = run_all(RunConfig(claims=("p22.params", "v222.eta", "dp.genus.f0")))
    assert [(r.claim_id, r.computed) for r in a] == [(r.claim_id, r.computed) for r in b]


def test_parallel_run_matches_serial():
    ids = ("h22.lqq4", "v1.adj", "qds.eta")
    serial = run_all(RunConfig(claims=ids))
    parallel = run_all(RunConfig(claims=ids, jobs=2))
    assert [(r.claim_id, r.status, r.computed) for r in serial] == \
           [(r.claim_id, r.status, r.computed) for r in parallel]


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(prime=6)
    with pytest.raises(ValueError):
        RunConfig(trials=0)
