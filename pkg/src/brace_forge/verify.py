"""The full structural and representation-theoretic check suite.

``brace_reports`` runs every per-brace check; ``fixture_reports`` runs the
checks tied to specific groups and brace pairs. Both return lists of
:class:`Report` in a fixed order.
"""

from __future__ import annotations

import numpy as np
from sympy import primefactors

from .braces import SkewBrace, direct_product_brace, make_radical_brace, make_semidirect_brace, make_trivial_brace
from .characters import (
    character_degrees,
    example_suite_bicyclic,
    example_suite_p2,
    ird,
    ird_group,
    linear_character_count,
    order_p3_check,
    regular_decomposition_check,
)
from .config import caps
from .corpus import Corpus
from .cyclotomic import CycRing
from .errors import BraceForgeError, RelationViolation
from .groups import center, conjugacy_classes, direct_product
from .isoclinism import (
    brace_isoclinic,
    brace_isoclinism_consequences,
    group_isoclinic,
    hall_criterion_check,
    isocom_check,
    isoclinicsdp_check,
    opposite_pattern_check,
    theta_well_defined,
)
from .lambda_groups import (
    annihilator_quotient,
    build_lambda_group,
    check_center_structure,
    commutator_of_lambda,
    conjugacy_structure_checks,
    normal_pairs_check,
    psi_action,
    psi_pair_isomorphism,
    trivial_brace_check,
)
from .named_groups import cyclic, dihedral, klein_four, quaternion, symmetric3
from .reports import Report
from .reps import from_group_rep, linear_characters, one_dim_rep_count, to_group_rep, validate_brace_rep

REGULAR_CHECK_MAX = 16


def _guard(name: str, fn) -> Report:
    try:
        return fn()
    except BraceForgeError as exc:
        rep = Report(name)
        rep.add(type(exc).__name__, False, list(exc.witness))
        return rep
    except AssertionError as exc:
        rep = Report(name)
        rep.add(str(exc) or "assertion", False)
        return rep


def _psi_iso_report(A: SkewBrace) -> Report:
    rep = Report("psi_pair_isomorphism")
    hom = psi_pair_isomorphism(A)
    rep.add("(a, b) -> (a b, b) is an isomorphism", hom.is_bijective())
    return rep


def _degree_report(A: SkewBrace) -> Report:
    rep = Report("characters")
    L = build_lambda_group(A).group
    if L.n > caps().analysis_order:
        rep.data["skipped"] = "above analysis cap"
        return rep
    D = character_degrees(L)
    k = conjugacy_classes(L).k
    rep.data.update(D.to_json())
    rep.add("sum of squared degrees is |Lambda|", sum(d * d for d in D.degrees) == L.n)
    rep.add("linear count is |Lambda : Lambda'|", D.count(1) == linear_character_count(L), D.count(1))
    rep.add("number of degrees is k(Lambda)", D.k == k, (D.k, k))
    odr = one_dim_rep_count(A)
    rep.add("|A/A'| |(A,o)/(A,o)'| is the linear count", odr == D.count(1), (odr, D.count(1)))
    rep.add("ird(A, o) inside ird(A)", ird_group(A.circ) <= ird(A), sorted(ird_group(A.circ)))
    primes = primefactors(L.n)
    if len(primes) == 1:
        p = primes[0]
        rep.add("p-group degrees are powers of p", all(_is_power(d, p) for d in D.degrees))
    return rep


def _is_power(d: int, p: int) -> bool:
    while d % p == 0:
        d //= p
    return d == 1


def _correspondence_report(A: SkewBrace) -> Report:
    rep = Report("rep_correspondence")
    L = build_lambda_group(A).group
    bad = None
    for i, phi in enumerate(linear_characters(L)):
        r = from_group_rep(A, phi)
        if to_group_rep(r) != phi or r != from_group_rep(A, to_group_rep(r)):
            bad = i
            break
    rep.add("linear characters round-trip", bad is None, bad)
    return rep


def brace_reports(A: SkewBrace) -> list[Report]:
    out = [
        _guard("psi_pair_isomorphism", lambda: _psi_iso_report(A)),
        _guard("center_structure", lambda: check_center_structure(A)),
        _guard("commutator_structure", lambda: commutator_of_lambda(A)[1]),
        _guard("annihilator_quotient", lambda: annihilator_quotient(A)[1]),
        _guard("psi_action", lambda: psi_action(A)[1]),
        _guard("conjugacy_structure", lambda: conjugacy_structure_checks(A)),
        _guard("ideal_times_normal_is_normal", lambda: normal_pairs_check(A)),
        _guard("trivial_brace_lambda", lambda: trivial_brace_check(A)),
        _guard("characters", lambda: _degree_report(A)),
        _guard("rep_correspondence", lambda: _correspondence_report(A)),
        _guard("order p^3 with large center", lambda: order_p3_check(A)),
    ]
    theta = Report("theta_maps")
    theta.add("commutator maps factor through A/Ann(A)", theta_well_defined(A))
    out.append(theta)
    if A.n <= REGULAR_CHECK_MAX:
        out.append(_guard("regular_decomposition", lambda: regular_decomposition_check(A)))
    return out


# ------------------------------------------------------------- fixtures


def semidirect_left_brace() -> SkewBrace:
    """Dot group Z/3 x Z/2, circle group Z/3 x| Z/2 = S3 (inversion action)."""
    N, H = cyclic(3), cyclic(2)
    act = [[0, 1, 2], [0, 2, 1]]
    return make_semidirect_brace(N, H, act)


def isoclinic_pairs() -> list[tuple[str, SkewBrace, SkewBrace]]:
    B = make_radical_brace(2, 2, 1)
    T = make_trivial_brace
    S = T(symmetric3())
    SD = semidirect_left_brace()
    return [
        ("B(2,1,2) x Z4 vs B(2,1,2) x V4", direct_product_brace(B, T(cyclic(4))), direct_product_brace(B, T(klein_four()))),
        ("trivial S3 vs trivial S3 x Z2", S, direct_product_brace(S, T(cyclic(2)))),
        ("semidirect Z3 x Z2 vs it x Z2", SD, direct_product_brace(SD, T(cyclic(2)))),
    ]


def relation_negative_report() -> Report:
    """beta(b) = i^b on Z/4 with a o b = a + b + 2ab and trivial rho must fail at (1, 1)."""
    rep = Report("relation_negative")
    A = make_radical_brace(2, 2, 1)
    ring = CycRing(4)
    beta = ring.zeta_powers[np.arange(4)][:, None, None, :]
    rho = np.broadcast_to(ring.identity(1), beta.shape)
    try:
        validate_brace_rep(A, beta, rho, 4)
        rep.add("rejected with RelationViolation", False)
    except RelationViolation as exc:
        rep.add("rejected with RelationViolation", exc.witness == (1, 1), list(exc.witness))
    return rep


def _direct_product_degree_report() -> Report:
    rep = Report("direct_product_degrees")
    S3 = symmetric3()
    for name, G, H in [("S3 x S3", S3, S3), ("Z2 x S3", cyclic(2), S3)]:
        want = sorted(a * b for a in character_degrees(G).degrees for b in character_degrees(H).degrees)
        got = list(character_degrees(direct_product(G, H)).degrees)
        rep.add(f"{name} degrees are pairwise products", got == want, got)
    return rep


def _group_isoclinism_report() -> Report:
    rep = Report("group_isoclinism")
    D4, Q8 = dihedral(4), quaternion()
    rep.add("D4 isoclinic to Q8", group_isoclinic(D4, Q8) is not None)
    rep.add("Q8 isoclinic to D4", group_isoclinic(Q8, D4) is not None)
    rep.add("Z4 isoclinic to V4", group_isoclinic(cyclic(4), klein_four()) is not None)
    return rep


def _hall_reports() -> list[Report]:
    D4 = dihedral(4)
    G = direct_product(symmetric3(), cyclic(2))
    return [
        hall_criterion_check(D4, center(D4)),
        hall_criterion_check(G, [0, 1]),
        hall_criterion_check(D4, [0]),
    ]


def _pair_reports() -> list[Report]:
    out = []
    for name, A, B in isoclinic_pairs():
        cert = brace_isoclinic(A, B)
        rep = Report(f"isoclinic pair: {name}")
        rep.add("brace isoclinism certificate found", cert is not None)
        out.append(rep)
        if cert is not None:
            out.append(brace_isoclinism_consequences(A, B, cert))
        out.append(isocom_check(A, B))
        out.append(isoclinicsdp_check(A, B))
    return out


def fixture_reports() -> list[Report]:
    out = [
        _guard("order p^2 example p=2", lambda: example_suite_p2(2)),
        _guard("order p^2 example p=3", lambda: example_suite_p2(3)),
        _guard("bicyclic example", lambda: example_suite_bicyclic(3, 2, 1)),
        _guard("order p^3 with large center", lambda: order_p3_check(make_radical_brace(3, 3, 2))),
        _guard("direct_product_degrees", _direct_product_degree_report),
        _guard("group_isoclinism", _group_isoclinism_report),
        *_hall_reports(),
        *_pair_reports(),
        _guard("trivial brace vs opposite", lambda: opposite_pattern_check(symmetric3())),
        relation_negative_report(),
    ]
    return out


def run_suite(corpus: Corpus, *, fixtures: bool = True) -> dict:
    braces = []
    holds = True
    for name, A in corpus:
        reps = brace_reports(A)
        ok = all(r.holds for r in reps)
        holds &= ok
        braces.append({"name": name, "n": A.n, "holds": ok, "reports": [r.to_json() for r in reps]})
    out = {"holds": holds, "braces": braces}
    if fixtures:
        reps = fixture_reports()
        out["fixtures"] = [r.to_json() for r in reps]
        out["holds"] = holds and all(r.holds for r in reps)
    return out


def first_failure(result: dict) -> dict | None:
    for b in result["braces"]:
        for r in b["reports"]:
            for c in r["checks"]:
                if not c["holds"] and not c.get("informational"):
                    return {"brace": b["name"], "report": r["name"], **c}
    for r in result.get("fixtures", []):
        for c in r["checks"]:
            if not c["holds"] and not c.get("informational"):
                return {"report": r["name"], **c}
    return None
