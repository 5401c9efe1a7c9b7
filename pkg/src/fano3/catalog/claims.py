"""Registered claims: each binds expected values to an executable check."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .. import birat, chow, lattice
from ..config import RunConfig
from ..poly import GF, QQ, Polynomial, derive_seed, monomial_basis, multidegree_of, random_form
from ..zerodim import degree_samples, modal
from . import cases, constructions
from .model import Claim, UnknownClaimError, UnstableResult

REGISTRY: dict[str, Claim] = {}


def register(claim_id: str, *, description: str, paper_ref: str, kind: str, expected,
             entry_point: str, parameters: dict | None = None, cost: str = "fast",
             uses_seed: bool = False, uses_prime: bool = False) -> Callable:
    def deco(fn: Callable[[RunConfig], object]) -> Callable:
        if claim_id in REGISTRY:
            raise ValueError(f"duplicate claim id {claim_id}")
        REGISTRY[claim_id] = Claim(claim_id, description, paper_ref, kind, expected, entry_point,
                                   fn, dict(parameters or {}), cost, uses_seed, uses_prime)
        return fn
    return deco


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


# -- shared helpers -----------------------------------------------------------------

F1_RANGE = (3, 4, 5, 6)
F0_RANGE = (4, 5, 6, 7)
BIRAT_SEEDS = 5

_IDEALS = {
    "h22.minors32": constructions.height22_minor_ideal,
    "h22.lqq4": constructions.height22_lqq_ideal,
    "h22.jac36": constructions.height22_jacobian_ideal,
    "d6.nodes8": constructions.d6_node_ideal,
    "d8.nodes4": constructions.d8_node_ideal,
}


@lru_cache(maxsize=None)
def _degree_table(label: str, primes: tuple[int, ...], seed: int, trials: int) -> tuple:
    """Degree per (prime, data seed); each run also checks the S-polynomial property."""
    out = []
    for p in primes:
        for k in range(trials):
            data_seed = derive_seed(seed + k, label)
            gens = _IDEALS[label](GF(p), data_seed)
            (value,) = degree_samples(gens, derive_seed(data_seed, "chart"), 1, check=True)
            out.append((p, seed + k, value))
    return tuple(out)


def point_count(label: str, config: RunConfig) -> int:
    """Modal degree across trials and both primes; raises on disagreement."""
    primes = tuple(dict.fromkeys((config.prime, config.second_prime)))
    table = _degree_table(label, primes, config.seed, config.trials)
    values = [v for _, _, v in table]
    m = modal(values)
    if len(set(values)) > 1 or m is None:
        raise UnstableResult({"modal": m, "samples": [
            {"prime": p, "seed": s, "degree": v} for p, s, v in table]})
    return m


def _p2():
    return chow.projective_space(2)


def _plane_genus(d: int) -> int:
    p2 = _p2()
    return chow.adjunction_genus(p2, p2["H"] * d)


def _class_str(c: chow.ChowClass) -> str:
    return repr(c.poly)


# -- del Pezzo fibrations over P^1: discriminant curves on F1 and F0 -------------------------

@register("dp.genus.f1", description="genus of 5xi+(n+3)f on F1 equals 4n-2 for n=3..6",
          paper_ref="[D] = 5xi + (n+3)f, g(D) = h - 4, h = 4n + 2", kind="chow",
          expected={str(n): 4 * n - 2 for n in F1_RANGE},
          entry_point="fano3.chow.adjunction_genus", parameters={"surface": "F1", "n": list(F1_RANGE)})
def _dp_genus_f1(config: RunConfig) -> dict:
    s = chow.hirzebruch_f1()
    return {str(n): chow.adjunction_genus(s, s["xi"] * 5 + s["f"] * (n + 3)) for n in F1_RANGE}


@register("dp.genus.f0", description="genus of the (n,5) class on P1xP1 equals 4n-4 for n=4..7",
          paper_ref="[D] = (n, 5), g(D) = 4n - 4", kind="chow",
          expected={str(n): 4 * n - 4 for n in F0_RANGE},
          entry_point="fano3.chow.adjunction_genus", parameters={"surface": "P1xP1", "n": list(F0_RANGE)})
def _dp_genus_f0(config: RunConfig) -> dict:
    s = chow.p1xp1()
    return {str(n): chow.adjunction_genus(s, s["h1"] * n + s["h2"] * 5) for n in F0_RANGE}


def _split_report(s: chow.RingPresentation, d, d1, d2) -> dict:
    g, g1, g2 = (chow.adjunction_genus(s, c) for c in (d, d1, d2))
    meet = chow.intersection_number(s, d1, d2)
    return {"g1": g1, "g2": g2, "D1.D2": meet, "D1+D2 == D": d1 + d2 == d,
            "g(D) == g1+g2+D1.D2-1": g == g1 + g2 + meet - 1}


@register("dp.split.f1", description="splitting 5xi+(n+3)f = (2xi+3f) + (3xi+nf) on F1: "
          "component genera, intersection and nodal genus balance",
          paper_ref="D1 = 2xi + 3f, D2 = 3xi + nf, g(D1) = 1, g(D2) = 2n - 5", kind="chow",
          expected={str(n): {"g1": 1, "g2": 2 * n - 5, "D1.D2": 2 * n + 3, "D1+D2 == D": True,
                             "g(D) == g1+g2+D1.D2-1": True} for n in F1_RANGE},
          entry_point="fano3.chow.intersection_number", parameters={"surface": "F1", "n": list(F1_RANGE)})
def _dp_split_f1(config: RunConfig) -> dict:
    s = chow.hirzebruch_f1()
    xi, f = s["xi"], s["f"]
    return {str(n): _split_report(s, xi * 5 + f * (n + 3), xi * 2 + f * 3, xi * 3 + f * n)
            for n in F1_RANGE}


@register("dp.split.f0", description="splitting (n,5) = (2,2) + (n-2,3) on P1xP1: "
          "component genera, intersection and nodal genus balance",
          paper_ref="D1 = (2,2), D2 = (n-2,3), g(D1) = 1, g(D2) = 2n - 6", kind="chow",
          expected={str(n): {"g1": 1, "g2": 2 * n - 6, "D1.D2": 2 * n + 2, "D1+D2 == D": True,
                             "g(D) == g1+g2+D1.D2-1": True} for n in F0_RANGE},
          entry_point="fano3.chow.intersection_number", parameters={"surface": "P1xP1", "n": list(F0_RANGE)})
def _dp_split_f0(config: RunConfig) -> dict:
    s = chow.p1xp1()
    h1, h2 = s["h1"], s["h2"]
    return {str(n): _split_report(s, h1 * n + h2 * 5, h1 * 2 + h2 * 2, h1 * (n - 2) + h2 * 3)
            for n in F0_RANGE}


# -- height 22 --------------------------------------------------------------------------

def _h22_threefold():
    r = chow.height22_bundle()
    xi, h = r["xi"], r["h"]
    return r, xi, h, (xi * 2) * (xi * 2 - h)


@register("h22.xi5", description="point normalization and xi^5 in the height-22 bundle ring",
          paper_ref="xi^5 = 4 xi^4 h", kind="chow", expected={"xi^4 h": 1, "xi^5": 4},
          entry_point="fano3.chow.degree", parameters={"presentation": "height22"})
def _h22_xi5(config: RunConfig) -> dict:
    r, xi, h, _ = _h22_threefold()
    return {"xi^4 h": chow.degree(r, xi ** 4 * h), "xi^5": chow.degree(r, xi ** 5)}


@register("h22.degphi", description="degree of the map to P^3 given by xi - h",
          paper_ref="deg(phi) = (xi - h)^3 (2xi)(2xi - h) = 2", kind="chow", expected=2,
          entry_point="fano3.chow.degree", parameters={"presentation": "height22"})
def _h22_degphi(config: RunConfig) -> int:
    r, xi, h, x = _h22_threefold()
    return chow.degree(r, (xi - h) ** 3 * x)


@register("h22.ram", description="canonical class by adjunction, ramification class "
          "K_X - phi^*K_P3 and degree of the branch surface",
          paper_ref="K_X = -xi + h, R = K_X - phi^*K = 3(xi - h), deg B = 6", kind="chow",
          expected={"K_X": "-xi + h", "R": "3*xi - 3*h", "R == 3(xi-h)": True, "branch degree": 6},
          entry_point="fano3.chow.pull_back", parameters={"presentation": "height22", "target": "P3"})
def _h22_ram(config: RunConfig) -> dict:
    r, xi, h, x = _h22_threefold()
    k_x = r.canonical_class + xi * 2 + (xi * 2 - h)
    p3 = chow.projective_space(3)
    pulled = chow.pull_back(p3.canonical_class, r, {"H": xi - h})
    ram = k_x - pulled
    return {"K_X": _class_str(k_x), "R": _class_str(ram), "R == 3(xi-h)": ram == (xi - h) * 3,
            "branch degree": chow.degree(r, ram * (xi - h) ** 2 * x)}


@register("h22.detM", description="resultant in z, discriminant b^2-ac and division by -L^2 "
          "reproduce det M with generic symbolic coefficients; M has Q1 in entry (3,1)",
          paper_ref="disc / (-L^2) = det M", kind="symbolic",
          expected={"resultant ~ displayed binary form": True,
                    "discriminant == displayed expansion": True,
                    "discriminant / (-L^2) ~ det M": True,
                    "det M multidegree in y": 6,
                    "det M with (3,1) entry Q0 ~ quotient": False},
          entry_point="fano3.poly.exact_divide", parameters={"coefficients": "generic"})
def _h22_detm(config: RunConfig) -> dict:
    return constructions.height22_symbolic()


@register("h22.minors32", description="degree of the 2x2 minors ideal of M over F_p",
          paper_ref="#V(2x2 minors of M) = 32", kind="zerodim", expected=32,
          entry_point="fano3.zerodim.projective_degree", parameters={"ambient": "P3"},
          uses_seed=True, uses_prime=True)
def _h22_minors32(config: RunConfig) -> int:
    return point_count("h22.minors32", config)


@register("h22.lqq4", description="degree of the ideal (L, Q0, Q1) over F_p",
          paper_ref="#V(L, Q0, Q1) = 4", kind="zerodim", expected=4,
          entry_point="fano3.zerodim.projective_degree", parameters={"ambient": "P3"},
          uses_seed=True, uses_prime=True)
def _h22_lqq4(config: RunConfig) -> int:
    return point_count("h22.lqq4", config)


@register("h22.ledger", description="node total 36 = 32 + 4 from the computed counts and "
          "the balance 52 = n - r + 1 + h12 with h12 = 22 - 5",
          paper_ref="52 = n - r + 1 + h12, n = 36, h12 = 22 - 5 = 17", kind="arithmetic",
          expected={"minors": 32, "lqq": 4, "nodes": 36, "h12 of the fibration": 17,
                    "h12 of the sextic double solid": 52, "all identities hold": True},
          entry_point="fano3.catalog.cases.height22_ledgers", uses_seed=True, uses_prime=True)
def _h22_ledger(config: RunConfig) -> dict:
    minors = point_count("h22.minors32", config)
    lqq = point_count("h22.lqq4", config)
    entries = cases.height22_ledgers(minors, lqq)
    out: dict = {"minors": minors, "lqq": lqq}
    for e in entries:
        out[e.name] = e.balance()
    out["all identities hold"] = all(e.holds() for e in entries)
    return out


@register("h22.jac36", description="degree of the Jacobian ideal of det M over F_p",
          paper_ref="n = 36 = 32 + 4", kind="zerodim", expected=36,
          entry_point="fano3.zerodim.projective_degree", parameters={"ambient": "P3"},
          cost="slow", uses_seed=True, uses_prime=True)
def _h22_jac36(config: RunConfig) -> int:
    return point_count("h22.jac36", config)


# -- index one, d = 6 and d = 8 -------------------------------------------------------------

@register("d6.elim", description="eliminating [s:t] from sL0+tL1 = sQ0+tQ1 = 0 gives the "
          "2x2 determinant, a cubic singular along L0=L1=Q0=Q1=0",
          paper_ref="L1 Q0 - L0 Q1 = det [[L0, L1], [Q0, Q1]]", kind="symbolic",
          expected={"resultant ~ displayed": True, "det ~ displayed": True, "degree": 3,
                    "singular along C": True},
          entry_point="fano3.poly.resultant_univariate", uses_seed=True, uses_prime=True)
def _d6_elim(config: RunConfig) -> dict:
    out = constructions.pencil_elimination(constructions.P5_VARS, ("L", 1), ("Q", 2))
    out["singular along C"] = constructions.d6_singular_along_curve(
        GF(config.prime), derive_seed(config.seed, "d6.elim"))
    return out


@register("d6.nodes8", description="degree of (L0, L1, Q0, Q1, Q) in P^5 over F_p",
          paper_ref="#(C cap {Q = 0}) = 8", kind="zerodim", expected=8,
          entry_point="fano3.zerodim.projective_degree", parameters={"ambient": "P5"},
          uses_seed=True, uses_prime=True)
def _d6_nodes8(config: RunConfig) -> int:
    return point_count("d6.nodes8", config)


@register("d8.elim", description="eliminating [s:t] from sL0+tL1 = sM0+tM1 = 0 gives a "
          "quadric singular along the plane L0=L1=M0=M1=0",
          paper_ref="L1 M0 - L0 M1 = det [[L0, L1], [M0, M1]]", kind="symbolic",
          expected={"resultant ~ displayed": True, "det ~ displayed": True, "degree": 2,
                    "singular along P": True},
          entry_point="fano3.poly.resultant_univariate", uses_seed=True, uses_prime=True)
def _d8_elim(config: RunConfig) -> dict:
    out = constructions.pencil_elimination(constructions.P6_VARS, ("L", 1), ("M", 1))
    out["singular along P"] = constructions.d8_singular_along_plane(
        GF(config.prime), derive_seed(config.seed, "d8.elim"))
    return out


@register("d8.nodes4", description="degree of (L0, L1, M0, M1, Q0, Q1) in P^6 over F_p",
          paper_ref="P cap {Q0 = Q1 = 0} = {p1, ..., p4}", kind="zerodim", expected=4,
          entry_point="fano3.zerodim.projective_degree", parameters={"ambient": "P6"},
          uses_seed=True, uses_prime=True)
def _d8_nodes4(config: RunConfig) -> int:
    return point_count("d8.nodes4", config)


@register("d8.septic", description="discriminant of a random net of quadrics in P^6 is a plane "
          "septic; genus 15 and Prym dimension 14 match h12 of (1,8,14)",
          paper_ref="deg D = 7, g(D) - 1 = 14", kind="symbolic",
          expected={"degree": 7, "genus": 15, "prym dimension": 14, "h12": 14},
          entry_point="fano3.poly.determinant", uses_seed=True)
def _d8_septic(config: RunConfig) -> dict:
    d = multidegree_of(constructions.net_of_quadrics_discriminant(
        derive_seed(config.seed, "d8.septic")))[0]
    g = _plane_genus(d)
    return {"degree": d, "genus": g, "prym dimension": g - 1, "h12": cases.case(8, 14).h12}


# -- index two, delta 1: the blown-up Veronese cone -----------------------------------------

def _v1_ring():
    r = chow.veronese_cone_blowup()
    xi, h = r["xi"], r["h"]
    return r, xi, h, xi - h * 2, xi * 2 + h * 2


@register("v1.pres", description="self-consistency of P(O+O(-2)) over P^2: point class, "
          "E^3 and the restriction of xi to E",
          paper_ref="[E] = xi - 2h", kind="chow",
          expected={"point": 1, "E^3": 4, "xi*E == 0": True},
          entry_point="fano3.chow.degree", parameters={"presentation": "P(O+O(-2))/P2"})
def _v1_pres(config: RunConfig) -> dict:
    r, xi, h, e, _ = _v1_ring()
    return {"point": chow.degree(r, r.point_class), "E^3": chow.degree(r, e ** 3),
            "xi*E == 0": xi * e == r.cls(0)}


@register("v1.adj", description="K + B~ = h by adjunction, B~ is a double cover of P^2 and "
          "its branch curve is a plane octic",
          paper_ref="K_B~ = h|B~", kind="chow",
          expected={"K + B~": "h", "deg(B~ -> P2)": 2, "branch curve degree": 8},
          entry_point="fano3.chow.degree", parameters={"presentation": "P(O+O(-2))/P2"})
def _v1_adj(config: RunConfig) -> dict:
    r, xi, h, _, b = _v1_ring()
    kb = r.canonical_class + b
    k_h = int(kb.poly.coefficient((0, 1)))
    if kb != h * k_h:
        raise AssertionError(f"K + B~ = {kb!r} is not a multiple of h")
    # Riemann-Hurwitz for the double cover B~ -> P^2: K_B~ = pi^*(K_P2 + D/2)
    return {"K + B~": _class_str(kb), "deg(B~ -> P2)": chow.degree(r, b * h ** 2),
            "branch curve degree": 2 * (k_h + 3)}


@register("v1.conic", description="B~ meets E in a conic: E.B~.h = 2",
          paper_ref="B~ cap E = plane conic C", kind="chow", expected=2,
          entry_point="fano3.chow.degree", parameters={"presentation": "P(O+O(-2))/P2"})
def _v1_conic(config: RunConfig) -> int:
    r, xi, h, e, b = _v1_ring()
    return chow.degree(r, e * b * h)


@register("v1.genus21", description="genus of a plane octic", paper_ref="g(D) = 21",
          kind="chow", expected=21, entry_point="fano3.chow.adjunction_genus",
          parameters={"surface": "P2", "degree": 8})
def _v1_genus21(config: RunConfig) -> int:
    return _plane_genus(8)


@register("v1.params", description="parameter count for plane octics eight-tangent to a conic",
          paper_ref="44 - 8 - 3 = 33", kind="arithmetic",
          expected={"total": 33, "holds": True, "terms": [44, 8, 3]},
          entry_point="fano3.catalog.cases.octic_parameter_ledger")
def _v1_params(config: RunConfig) -> dict:
    e = cases.octic_parameter_ledger()
    return {"total": e.balance(), "holds": e.holds(), "terms": [t.value for t in e.terms]}


def _tangency_report(degree: int, conic_tangencies: int) -> dict:
    """deg Z = D.C / 2 and deg eta = D.H - deg Z on the plane, via the Picard lattice <1>."""
    pic = lattice.IntegerLattice(((1,),), ("H",))
    d, c, hyp = (degree,), (2,), (1,)
    z = lattice.gram_product(pic, d, c)
    if z % 2:
        raise AssertionError("D.C is odd; tangency divisor is not halved")
    return {"tangency points": z // 2, "deg eta": lattice.gram_product(pic, d, hyp) - z // 2,
            "expected tangency points": conic_tangencies}


@register("v1.prym", description="Prym dimension of the octic double cover and degree "
          "bookkeeping of eta for the octic and its two quartic components",
          paper_ref="21 - 1 = 20; D cap C = 2Z, eta = O_D(1)(-Z)", kind="lattice",
          expected={"genus": 21, "prym dimension": 20, "h12": 20, "ledger holds": True,
                    "octic": {"tangency points": 8, "deg eta": 0, "expected tangency points": 8},
                    "quartic": {"tangency points": 4, "deg eta": 0, "expected tangency points": 4}},
          entry_point="fano3.catalog.cases.prym_ledger")
def _v1_prym(config: RunConfig) -> dict:
    g = _plane_genus(8)
    entry = cases.prym_dimension_ledger(g)
    res = cases.prym_ledger(cases.case(6, 20, picard_rank=2))
    return {"genus": g, "prym dimension": entry.balance(), "h12": res.expected,
            "ledger holds": entry.holds() and res.status == "pass",
            "octic": _tangency_report(8, 8), "quartic": _tangency_report(4, 4)}


# -- quartic double solids ----------------------------------------------------------------

@register("qds.genus10", description="plane sextic genus 10, split into two cubics with "
          "nodal genus balance, Prym dimension 9",
          paper_ref="g(D) = 10, g(D) - 1 = 9", kind="chow",
          expected={"sextic genus": 10, "cubic genus": 1, "cubic.cubic": 9,
                    "nodal balance": True, "prym dimension": 9, "h12": 9},
          entry_point="fano3.chow.adjunction_genus", parameters={"surface": "P2"})
def _qds_genus10(config: RunConfig) -> dict:
    p2 = _p2()
    big, small = p2["H"] * 6, p2["H"] * 3
    g, g3 = chow.adjunction_genus(p2, big), chow.adjunction_genus(p2, small)
    meet = chow.intersection_number(p2, small, small)
    res = cases.prym_ledger(cases.case(14, 9))
    return {"sextic genus": g, "cubic genus": g3, "cubic.cubic": meet,
            "nodal balance": g == 2 * g3 + meet - 1, "prym dimension": res.computed,
            "h12": res.expected}


@register("qds.eta", description="degree bookkeeping of eta for the sextic six-tangent to a "
          "conic and for its cubic components",
          paper_ref="D cap C = 2Z, Z = z1 + ... + z6", kind="lattice",
          expected={"sextic": {"tangency points": 6, "deg eta": 0, "expected tangency points": 6},
                    "cubic": {"tangency points": 3, "deg eta": 0, "expected tangency points": 3}},
          entry_point="fano3.lattice.gram_product")
def _qds_eta(config: RunConfig) -> dict:
    return {"sextic": _tangency_report(6, 6), "cubic": _tangency_report(3, 3)}


# -- (2,4) double covers of P^1 x P^2 ------------------------------------------------------------

@register("p12.params", description="parameter count for (2,4) divisors singular along two lines",
          paper_ref="3 x 15 - (1 + 3 + 8) = 33", kind="arithmetic",
          expected={"total": 33, "holds": True, "terms": [45, 1, 3, 8]},
          entry_point="fano3.catalog.cases.two_line_parameter_ledger")
def _p12_params(config: RunConfig) -> dict:
    e = cases.two_line_parameter_ledger()
    return {"total": e.balance(), "holds": e.holds(), "terms": [t.value for t in e.terms]}


@register("p12.cremona", description="pullback of (2,2,2) forms along id x Cremona is injective "
          "into (2,4) forms singular along both lines, and fills that 27-dimensional space",
          paper_ref="B0 -> (2,2,2) divisor", kind="birat",
          expected={"source dimension": 27, "pullback rank": 27, "all pullbacks singular": True,
                    "constrained dimension": 27, "image == constrained space": True},
          entry_point="fano3.birat.constrained_form_space_dim")
def _p12_cremona(config: RunConfig) -> dict:
    m = birat.cremona_product()
    rank, n = birat.pullback_matrix_rank(m, (2, 2, 2))
    cond = birat.two_line_conditions()
    dim = birat.constrained_form_space(cond).dimension
    g = m.target.grading
    forms = [birat.pullback(m, random_form(g, (2, 2, 2), QQ, derive_seed(config.seed, "p12", k)))
             for k in range(3)]
    basis = [Polynomial.monomial(g, QQ, e) for e in monomial_basis(g, (2, 2, 2))]
    singular = all(birat.satisfies(birat.pullback(m, f), cond) for f in basis)
    singular = singular and all(birat.satisfies(f, cond) for f in forms)
    return {"source dimension": n, "pullback rank": rank, "all pullbacks singular": singular,
            "constrained dimension": dim, "image == constrained space": singular and rank == dim}


# -- (2,2) divisors in P^2 x P^2 ------------------------------------------------------------------

@register("p22.params", description="parameter count for (2,2) divisors in P^2 x P^2",
          paper_ref="19 parameters = 36 - 1 - 16", kind="arithmetic",
          expected={"total": 19, "holds": True, "terms": [36, 1, 16]},
          entry_point="fano3.catalog.cases.p2xp2_parameter_ledger")
def _p22_params(config: RunConfig) -> dict:
    e = cases.p2xp2_parameter_ledger()
    return {"total": e.balance(), "holds": e.holds(), "terms": [t.value for t in e.terms]}


@register("p22.f12params", description="parameter count for (2,2) divisors on the flag "
          "variety, with the 9 forms vanishing on it computed as a pullback kernel",
          paper_ref="18 parameters = 36 - 9 - 1 - 8", kind="arithmetic",
          expected={"total": 18, "holds": True, "terms": [36, 9, 1, 8]},
          entry_point="fano3.birat.pullback_kernel_dim", parameters={"d": [2, 2]})
def _p22_f12params(config: RunConfig) -> dict:
    kernel = birat.pullback_kernel_dim(birat.two_point_projection(), (2, 2))
    e = cases.flag_parameter_ledger(kernel)
    return {"total": e.balance(), "holds": e.holds(), "terms": [t.value for t in e.terms]}


@register("p22.lattice", description="Phi embeds into <4,-2,-2> via (h-R1, h-R2), and bounded "
          "search rediscovers it",
          paper_ref="f1 = h - R1, f2 = h - R2", kind="lattice",
          expected={"verify": True, "search finds it": True, "all found verify": True},
          entry_point="fano3.lattice.search_embeddings", parameters={"bound": 1})
def _p22_lattice(config: RunConfig) -> dict:
    emb = lattice.phi_embedding()
    found = lattice.search_embeddings(emb.source, emb.target, 1)
    return {"verify": lattice.verify_embedding(emb), "search finds it": emb in found,
            "all found verify": all(lattice.verify_embedding(m) for m in found)}


def _transfer_counts(config: RunConfig, label: str, m, target, nodes, cofactor) -> dict:
    space = birat.constrained_form_space(birat.nodal_quartic_conditions(nodes))
    g = m.source.grading
    nodal = smooth = 0
    for k in range(BIRAT_SEEDS):
        s = derive_seed(config.seed, label, k)
        if birat.model_transfer_solvable(m, target, space.sample(s), cofactor):
            nodal += 1
        if birat.model_transfer_solvable(m, target, random_form(g, (4,), QQ, s), cofactor):
            smooth += 1
    return {"nodal quartics solvable": nodal, "smooth quartics solvable": smooth}


@register("p22.proj", description="projection from two nodes: (1,1) kernel is the flag "
          "equation, 2-nodal quartics transfer to (2,2) forms, smooth quartics do not",
          paper_ref="P^3 --> F(1,2) subset P^2 x P^2", kind="birat",
          expected={"kernel (1,1)": 1, "u2v3 - u3v2 pulls back to 0": True,
                    "nodal quartics solvable": BIRAT_SEEDS, "smooth quartics solvable": 0},
          entry_point="fano3.birat.model_transfer_solvable",
          parameters={"target_degree": [2, 2], "nodes": [0, 1], "seeds": BIRAT_SEEDS},
          uses_seed=True)
def _p22_proj(config: RunConfig) -> dict:
    m = birat.two_point_projection()
    t = m.target.coordinates()
    flag = t["u2"] * t["v3"] - t["u3"] * t["v2"]
    out = {"kernel (1,1)": birat.pullback_kernel_dim(m, (1, 1)),
           "u2v3 - u3v2 pulls back to 0": birat.pullback(m, flag).is_zero()}
    out.update(_transfer_counts(config, "p22.proj", m, (2, 2), (0, 1), None))
    return out


@register("p22.sextic", description="a random (2,2) divisor in P^2 x P^2 has sextic "
          "discriminant over either factor; genus 10, Prym dimension 9",
          paper_ref="deg D = 6, g(D) - 1 = 9 = h12", kind="symbolic",
          expected={"degree over first factor": 6, "degree over second factor": 6,
                    "genus": 10, "prym dimension": 9, "h12": 9},
          entry_point="fano3.poly.determinant", uses_seed=True)
def _p22_sextic(config: RunConfig) -> dict:
    s = derive_seed(config.seed, "p22.sextic")
    d1 = multidegree_of(constructions.bidegree22_discriminant(s, "y"))
    d2 = multidegree_of(constructions.bidegree22_discriminant(s, "x"))
    res = cases.prym_ledger(cases.case(12, 9))
    return {"degree over first factor": d1[0], "degree over second factor": d2[1],
            "genus": _plane_genus(d1[0]), "prym dimension": res.computed, "h12": res.expected}


# -- (2,2,2) double covers of (P^1)^3 -----------------------------------------------------------

@register("v222.params", description="parameter count for (2,2,2) divisors in (P^1)^3",
          paper_ref="27 - 1 - 9 = 17", kind="arithmetic",
          expected={"total": 17, "holds": True, "terms": [27, 1, 9]},
          entry_point="fano3.catalog.cases.triple_p1_parameter_ledger")
def _v222_params(config: RunConfig) -> dict:
    e = cases.triple_p1_parameter_ledger()
    return {"total": e.balance(), "holds": e.holds(), "terms": [t.value for t in e.terms]}


@register("v222.lattice", description="Pi embeds into <4,-2,-2,-2> via Ei = h - Rj - Rk; "
          "search rediscovers it; R0 = h - R1 - R2 - R3 is a (-2)-class with Ei = R0 + Ri",
          paper_ref="E1 = h - R2 - R3, Ei = R0 + Ri", kind="lattice",
          expected={"verify": True, "search finds it": True, "R0^2": -2,
                    "Ei == R0 + Ri": [True, True, True], "E1 == R0 + R2": False},
          entry_point="fano3.lattice.verify_embedding", parameters={"bound": 1})
def _v222_lattice(config: RunConfig) -> dict:
    emb = lattice.pi_embedding()
    t = emb.target
    found = lattice.search_embeddings(emb.source, t, 1)
    r0 = t.vector(h=1, R1=-1, R2=-1, R3=-1)
    rs = [t.vector(**{f"R{i}": 1}) for i in (1, 2, 3)]
    return {"verify": lattice.verify_embedding(emb), "search finds it": emb in found,
            "R0^2": lattice.gram_product(t, r0, r0),
            "Ei == R0 + Ri": [lattice.class_identity(t, emb.columns[i], lattice.add(r0, rs[i]))
                              for i in range(3)],
            "E1 == R0 + R2": lattice.class_identity(t, emb.columns[0], lattice.add(r0, rs[1]))}


@register("v222.eta", description="degree bookkeeping in Pi: (E1+E2-E3).D = 0 for D = 4(E1+E2), "
          "and the involution E3 -> 2(E1+E2) - E3 preserves E3^2 and E3.D",
          paper_ref="D = 4(E1 + E2), deg((E1 + E2 - E3).D) = 0", kind="lattice",
          expected={"(E1+E2-E3).D": 0, "conj(E3)^2": 0, "E3.D": 16, "conj(E3).D": 16,
                    "2(E1+E2-E3) == conj(E3) - E3": True},
          entry_point="fano3.lattice.gram_product")
def _v222_eta(config: RunConfig) -> dict:
    pi = lattice.pi_lattice()
    e1, e2, e3 = pi.vector(E1=1), pi.vector(E2=1), pi.vector(E3=1)
    s = lattice.add(e1, e2)
    d = lattice.scale(4, s)
    conj = lattice.add(lattice.scale(2, s), lattice.scale(-1, e3))
    eta2 = lattice.scale(2, lattice.add(s, lattice.scale(-1, e3)))
    return {"(E1+E2-E3).D": lattice.gram_product(pi, lattice.add(s, lattice.scale(-1, e3)), d),
            "conj(E3)^2": lattice.gram_product(pi, conj, conj),
            "E3.D": lattice.gram_product(pi, e3, d), "conj(E3).D": lattice.gram_product(pi, conj, d),
            "2(E1+E2-E3) == conj(E3) - E3":
                lattice.class_identity(pi, eta2, lattice.add(conj, lattice.scale(-1, e3)))}


@register("v222.disc44", description="discriminant of a random (2,2,2) form over (P^1)^2 has "
          "bidegree (4,4) and matches the 2x2 determinant template; genus 9, Prym dimension 8",
          paper_ref="D = {det M = 0} of bidegree (4,4)", kind="symbolic",
          expected={"discriminant bidegree": [4, 4], "degree in fiber coordinates": 0,
                    "det [[a,b],[b,c]] ~ discriminant": True, "2x2 template bidegree": [4, 4],
                    "genus": 9, "prym dimension": 8, "h12": 8},
          entry_point="fano3.poly.discriminant_binary_quadratic", uses_seed=True)
def _v222_disc44(config: RunConfig) -> dict:
    out = constructions.triple_p1_discriminant(derive_seed(config.seed, "v222.disc44"))
    s = chow.p1xp1()
    a, b = out["discriminant bidegree"]
    res = cases.prym_ledger(cases.case(12, 8))
    out.update({"genus": chow.adjunction_genus(s, s["h1"] * a + s["h2"] * b),
                "prym dimension": res.computed, "h12": res.expected})
    return out


@register("v222.trilinear", description="trilinear map P^3 --> (P^1)^3: injective on (2,2,2) "
          "forms; 3-nodal quartics transfer with a quadric cofactor, smooth quartics do not",
          paper_ref="B0 -> (2,2,2) nodal K3 surface", kind="birat",
          expected={"kernel (2,2,2)": 0, "nodal quartics solvable": BIRAT_SEEDS,
                    "smooth quartics solvable": 0},
          entry_point="fano3.birat.model_transfer_solvable",
          parameters={"target_degree": [2, 2, 2], "nodes": [0, 1, 2], "cofactor_degree": [2],
                      "seeds": BIRAT_SEEDS},
          uses_seed=True)
def _v222_trilinear(config: RunConfig) -> dict:
    m = birat.trilinear_map()
    out = {"kernel (2,2,2)": birat.pullback_kernel_dim(m, (2, 2, 2))}
    out.update(_transfer_counts(config, "v222.trilinear", m, (2, 2, 2), (0, 1, 2), (2,)))
    return out


# -- invariant table ----------------------------------------------------------------------

@register("cases.table", description="case invariants are consistent (index two degrees are "
          "8 delta) and every conic-bundle case satisfies genus(D) - 1 = h12",
          paper_ref="(r, -K^3, h12) and (-K^3, h12) tables", kind="arithmetic",
          expected={"index two degrees": [8, 16, 24],
                    "prym": {"(1,8,14)": 14, "(6,20)": 20, "(12,9)": 9, "(14,9)": 9,
                             "(12,8)": 8}},
          entry_point="fano3.catalog.cases.prym_ledger")
def _cases_table(config: RunConfig) -> dict:
    twos = sorted(c.degree for c in cases.CASES if c.index == 2)
    if any(d % 8 for d in twos):
        raise AssertionError("index two degree not divisible by 8")
    prym = {}
    for c in cases.CASES:
        if c.discriminant_model is not None:
            res = cases.prym_ledger(c)
            prym[c.label] = res.computed
    return {"index two degrees": twos, "prym": prym}

