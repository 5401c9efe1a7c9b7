"""Acceptance criteria, one test per criterion.

Each test asserts the exact values and its wall-clock budget.  Running this
file under pytest prints one ``CRITERION`` line per test (see conftest.py);
running it as a script prints the same lines without pytest.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from contextlib import contextmanager

from fano3 import birat, chow, lattice
from fano3.catalog import case, prym_ledger, run_claim
from fano3.catalog import cases as ledgers
from fano3.catalog.claims import _degree_table
from fano3.cli import REPORT_KEYS
from fano3.config import RunConfig
from fano3.poly import GF, QQ, Grading, derive_seed, random_form
from fano3.zerodim import buchberger, is_reduced, projective_degree, s_polynomials_reduce_to_zero

CRITERIA = {
    "test_criterion_01_chow_degrees": "1 Chow degrees on the height-22 bundle",
    "test_criterion_02_determinantal_identity": "2 discriminant / (-L^2) = det M, generic over QQ",
    "test_criterion_03_node_counts": "3 node counts 32, 4, 8, 4 over F_p",
    "test_criterion_04_hodge_ledger": "4 ledger 52 = 36 - 2 + 1 + 17, 36 = 32 + 4",
    "test_criterion_05_genus_suite": "5 genus suite",
    "test_criterion_06_prym_ledger": "6 Prym dimensions match h12",
    "test_criterion_07_lattice_suite": "7 lattice embeddings and degree bookkeeping",
    "test_criterion_08_birational_transfers": "8 birational transfers",
    "test_criterion_09_parameter_counts": "9 parameter-count identities",
    "test_criterion_10_engine_oracles": "10 Bezout oracles and S-polynomial property",
    "test_criterion_11_cli_contract": "11 CLI: full fast suite, JSON keys, byte-identical runs",
}


@contextmanager
def budget(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def test_criterion_01_chow_degrees():
    with budget(1.0):
        r = chow.height22_bundle()
        xi, h = r["xi"], r["h"]
        x = (xi * 2) * (xi * 2 - h)
        assert chow.degree(r, xi ** 5) == 4
        assert chow.degree(r, (xi - h) ** 3 * x) == 2
        k_x = r.canonical_class + xi * 2 + (xi * 2 - h)
        ram = k_x - chow.pull_back(chow.projective_space(3).canonical_class, r, {"H": xi - h})
        assert ram == (xi - h) * 3
        assert chow.degree(r, ram * (xi - h) ** 2 * x) == 6


def test_criterion_02_determinantal_identity():
    with budget(30.0):
        res = run_claim("h22.detM")
    assert res.status == "pass", res.computed
    assert res.computed["discriminant / (-L^2) ~ det M"] is True


def test_criterion_03_node_counts():
    _degree_table.cache_clear()
    config = RunConfig()
    with budget(120.0):
        minors = run_claim("h22.minors32", config)
    assert (minors.status, minors.computed) == ("pass", 32)
    for cid, n in (("h22.lqq4", 4), ("d6.nodes8", 8), ("d8.nodes4", 4)):
        with budget(20.0):
            res = run_claim(cid, config)
        assert (res.status, res.computed) == ("pass", n), (cid, res.computed)
    samples = _degree_table("h22.minors32", (config.prime, config.second_prime), config.seed,
                            config.trials)
    assert len(samples) == 6 and {v for _, _, v in samples} == {32}


def test_criterion_04_hodge_ledger():
    # the ledger consumes the criterion-3 counts; compute them untimed if this runs alone
    counts = {cid: run_claim(cid).computed for cid in ("h22.minors32", "h22.lqq4")}
    with budget(1.0):
        res = run_claim("h22.ledger")
    assert res.status == "pass", res.computed
    assert (res.computed["minors"], res.computed["lqq"]) == (counts["h22.minors32"], counts["h22.lqq4"])
    assert res.computed["nodes"] == 36 and res.computed["h12 of the sextic double solid"] == 52
    nodes, fib, total = ledgers.height22_ledgers(res.computed["minors"], res.computed["lqq"])
    assert nodes.holds() and fib.holds() and total.holds()
    assert run_claim("h22.jac36").status == "skipped"
    with budget(600.0):
        jac = run_claim("h22.jac36", RunConfig(include_slow=True))
    assert (jac.status, jac.computed) == ("pass", 36)


def test_criterion_05_genus_suite():
    with budget(1.0):
        f1, f0, p2 = chow.hirzebruch_f1(), chow.p1xp1(), chow.projective_space(2)
        xi, f, h1, h2, hh = f1["xi"], f1["f"], f0["h1"], f0["h2"], p2["H"]
        g = chow.adjunction_genus
        for n in (3, 4, 5, 6):
            d, d1, d2 = xi * 5 + f * (n + 3), xi * 2 + f * 3, xi * 3 + f * n
            assert g(f1, d) == 4 * n - 2
            assert (g(f1, d1), g(f1, d2)) == (1, 2 * n - 5)
            assert g(f1, d) == g(f1, d1) + g(f1, d2) + chow.intersection_number(f1, d1, d2) - 1
        for n in (4, 5, 6, 7):
            d, d1, d2 = h1 * n + h2 * 5, h1 * 2 + h2 * 2, h1 * (n - 2) + h2 * 3
            assert g(f0, d) == 4 * n - 4
            assert (g(f0, d1), g(f0, d2)) == (1, 2 * n - 6)
            assert g(f0, d) == g(f0, d1) + g(f0, d2) + chow.intersection_number(f0, d1, d2) - 1
        assert (g(p2, hh * 8), g(p2, hh * 6), g(p2, hh * 7)) == (21, 10, 15)
        assert g(f0, h1 * 4 + h2 * 4) == 9


def test_criterion_06_prym_ledger():
    for (deg, h12, rank), expected in (((6, 20, 2), 20), ((12, 9, None), 9), ((14, 9, None), 9),
                                       ((12, 8, None), 8), ((8, 14, None), 14)):
        res = prym_ledger(case(deg, h12, rank))
        assert (res.status, res.computed) == ("pass", expected)


def test_criterion_07_lattice_suite():
    with budget(5.0):
        phi, pi = lattice.phi_embedding(), lattice.pi_embedding()
        assert lattice.verify_embedding(phi) and lattice.verify_embedding(pi)
        assert phi in lattice.search_embeddings(phi.source, phi.target, 1)
        assert pi in lattice.search_embeddings(pi.source, pi.target, 1)
        t = pi.target
        r0 = t.vector(h=1, R1=-1, R2=-1, R3=-1)
        assert lattice.gram_product(t, r0, r0) == -2
        for i in range(3):
            assert lattice.class_identity(t, pi.columns[i], lattice.add(r0, t.vector(**{f"R{i+1}": 1})))
        p = lattice.pi_lattice()
        s = lattice.add(p.vector(E1=1), p.vector(E2=1))
        eta = lattice.add(s, lattice.scale(-1, p.vector(E3=1)))
        assert lattice.gram_product(p, eta, lattice.scale(4, s)) == 0


def test_criterion_08_birational_transfers():
    with budget(60.0):
        proj, tri, crem = birat.two_point_projection(), birat.trilinear_map(), birat.cremona_product()
        assert birat.pullback_kernel_dim(proj, (1, 1)) == 1
        two = birat.constrained_form_space(birat.nodal_quartic_conditions([0, 1]))
        three = birat.constrained_form_space(birat.nodal_quartic_conditions([0, 1, 2]))
        g = proj.source.grading
        for k in range(5):
            s = derive_seed(2024, k)
            smooth = random_form(g, (4,), QQ, derive_seed(s, "smooth"))
            assert birat.model_transfer_solvable(proj, (2, 2), two.sample(s))
            assert not birat.model_transfer_solvable(proj, (2, 2), smooth)
            assert birat.model_transfer_solvable(tri, (2, 2, 2), three.sample(s), (2,))
            assert not birat.model_transfer_solvable(tri, (2, 2, 2), smooth, (2,))
        cond = birat.two_line_conditions()
        assert birat.constrained_form_space(cond).dimension == 27
        assert birat.pullback_matrix_rank(crem, (2, 2, 2)) == (27, 27)
        assert run_claim("p12.cremona").status == "pass"


def test_criterion_09_parameter_counts():
    entries = [ledgers.octic_parameter_ledger(), ledgers.two_line_parameter_ledger(),
               ledgers.p2xp2_parameter_ledger(),
               ledgers.flag_parameter_ledger(
                   birat.pullback_kernel_dim(birat.two_point_projection(), (2, 2))),
               ledgers.triple_p1_parameter_ledger()]
    assert [e.total for e in entries] == [33, 33, 19, 18, 17]
    assert all(e.holds() for e in entries)
    assert [t.value for t in entries[3].terms] == [36, 9, 1, 8]


def test_criterion_10_engine_oracles():
    p = GF(32003)
    grading = Grading.standard(("y0", "y1", "y2", "y3"))
    for degrees in ((2, 2, 2), (1, 2, 2), (1, 1, 4)):
        gens = [random_form(grading, (d,), p, derive_seed(7, degrees, i)) for i, d in enumerate(degrees)]
        expected = 1
        for d in degrees:
            expected *= d
        assert projective_degree(gens, seed=1) == expected
        gb = buchberger([f.evaluate({"y3": 1}) for f in gens])
        assert s_polynomials_reduce_to_zero(gb) and is_reduced(gb)
    # every point-count claim runs Buchberger with check=True; a failed check fails the claim
    for cid in ("h22.minors32", "h22.lqq4", "d6.nodes8", "d8.nodes4"):
        assert run_claim(cid).status == "pass"


def _cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "fano3", *args], capture_output=True)


def test_criterion_11_cli_contract():
    first = _cli("verify", "--format", "json")
    second = _cli("verify", "--format", "json")
    assert first.returncode == 0, first.stderr.decode()
    report = json.loads(first.stdout)
    assert report and all(tuple(row) == REPORT_KEYS for row in report)
    assert all(row["status"] == "pass" for row in report)
    assert [row["claim_id"] for row in report] == sorted(row["claim_id"] for row in report)
    assert first.stdout == second.stdout


if __name__ == "__main__":
    failed = 0
    for name, label in CRITERIA.items():
        try:
            globals()[name]()
            print(f"CRITERION {label}: PASS")
        except Exception as exc:  # noqa: BLE001
            failed += 1
            print(f"CRITERION {label}: FAIL ({type(exc).__name__}: {exc})")
    sys.exit(1 if failed else 0)
