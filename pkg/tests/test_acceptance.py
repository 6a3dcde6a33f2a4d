"""The twelve acceptance criteria, each at exact equality.

Every test prints one ``PASS criterion N`` or ``FAIL criterion N`` line.
Caches are cleared first so the time bounds measure real work.
"""

import time

import numpy as np
import pytest

import oracles
from brace_forge import characters, lambda_groups
from brace_forge.braces import annihilator, commutator_ideal, fix_lambda, make_radical_brace, make_trivial_brace, opposite
from brace_forge.characters import character_degrees, linear_character_count, regular_decomposition_check
from brace_forge.corpus import default_corpus
from brace_forge.errors import RelationViolation
from brace_forge.groups import (
    center,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    hom_check,
    intersect,
    quotient,
)
from brace_forge.isoclinism import (
    brace_isoclinic,
    condition_ann_meets_derived,
    condition_center,
    group_isoclinic,
    hall_criterion_check,
    isocom_check,
    isoclinicsdp_check,
    verify_group_isoclinism,
)
from brace_forge.isomorphism import find_isomorphism
from brace_forge.lambda_groups import (
    build_lambda_group,
    check_center_structure,
    conjugacy_structure_checks,
    pairs,
    psi_action,
    psi_pair_isomorphism,
)
from brace_forge.named_groups import alternating, cyclic, dihedral, metacyclic, quaternion, symmetric, symmetric3
from brace_forge.cyclotomic import CycRing
from brace_forge.reps import (
    from_group_rep,
    induced_rep,
    linear_characters,
    regular_rep,
    to_group_rep,
    validate_brace_rep,
)
from brace_forge.verify import isoclinic_pairs

CORPUS = default_corpus()


@pytest.fixture(autouse=True)
def fresh_caches():
    characters._degrees_cached.cache_clear()
    lambda_groups._build.cache_clear()
    yield


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}{': ' + detail if detail else ''}")
        assert ok, detail

    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_order_p2_example_at_p2(verdict):
    L = build_lambda_group(make_radical_brace(2, 2, 1)).group
    D, secs = timed(lambda: character_degrees(L))
    ok = D.multiplicities() == [[1, 8], [2, 2]] and secs < 1.0
    ok &= list(D.degrees) == oracles.float_degrees(oracles.tolist(L.table))
    verdict(1, ok, f"degrees {D.multiplicities()} in {secs:.2f}s")


def test_criterion_02_order_p2_example_at_p3(verdict):
    L = build_lambda_group(make_radical_brace(3, 2, 1)).group
    D, secs = timed(lambda: character_degrees(L))
    ok = L.n == 81 and D.count(1) == 27 and D.count(3) == 6 and D.k == 33 and secs < 10.0
    verdict(2, ok, f"degrees {D.multiplicities()} in {secs:.2f}s")


def test_criterion_03_bicyclic_example(verdict):
    def work():
        L = build_lambda_group(make_radical_brace(3, 2, 1)).group
        iso = find_isomorphism(L, metacyclic(9, 9, 4))
        return L, iso, character_degrees(L)

    (L, iso, D), secs = timed(work)
    ok = iso is not None and hom_check(L, metacyclic(9, 9, 4), iso.image) and iso.is_bijective()
    ok &= D.count(1) == 27 == 3 ** (2 + 1) and D.distinct() == {1, 3} and secs < 30.0
    verdict(3, ok, f"iso found={iso is not None}, linear={D.count(1)}, set={sorted(D.distinct())}, {secs:.2f}s")


def test_criterion_04_derived_subgroup_of_lambda(verdict):
    bad, worst = [], 0.0
    for name, A in CORPUS:
        t0 = time.perf_counter()
        L = build_lambda_group(A).group
        D = derived_subgroup(L)
        want = pairs(A.n, commutator_ideal(A), derived_subgroup(A.circ))
        Q, _ = quotient(L, D)
        prod = direct_product(quotient(A.add, commutator_ideal(A))[0], quotient(A.circ, derived_subgroup(A.circ))[0])
        iso = find_isomorphism(Q, prod)
        worst = max(worst, time.perf_counter() - t0)
        if D != want or iso is None:
            bad.append(name)
    verdict(4, not bad and worst < 5.0, f"{len(CORPUS)} braces, failures {bad}, slowest {worst:.2f}s")


def test_criterion_05_psi_pair_isomorphism(verdict):
    bad = []
    for name, A in CORPUS:
        psi = psi_pair_isomorphism(A)
        n, t = A.n, A.add.table
        idx = np.arange(n * n)
        want = t[idx // n, idx % n] * n + idx % n
        LA = build_lambda_group(A, "standard").group
        LO = build_lambda_group(A, "opposite").group
        if not (np.array_equal(psi.image, want) and hom_check(LO, LA, psi.image) and psi.is_bijective()):
            bad.append(name)
    verdict(5, not bad, f"failures {bad}")


def test_criterion_06_center_of_lambda(verdict):
    bad = [name for name, A in CORPUS if not check_center_structure(A).holds]
    A = make_radical_brace(2, 2, 1)
    Z = center(build_lambda_group(A).group)
    ok = not bad and Z == pairs(4, [0, 2], [0, 2])
    ok &= Z == pairs(4, fix_lambda(A), annihilator(A))
    verdict(6, ok, f"failures {bad}, Z(Lambda(B(2,1,2))) = {[divmod(z, 4) for z in Z]}")


def test_criterion_07_regular_decomposition(verdict):
    checked, bad = [], []
    for name, A in CORPUS:
        if A.n > 16:
            continue
        checked.append(name)
        rep = regular_decomposition_check(A)
        if not rep.holds:
            bad.append(name)
    verdict(7, not bad and len(checked) == 11, f"{len(checked)} braces checked, failures {bad}")


def test_criterion_08_class_numbers(verdict):
    bad = [name for name, A in CORPUS if not conjugacy_structure_checks(A).holds]
    A = make_radical_brace(2, 2, 1)
    rep = conjugacy_structure_checks(A)
    d = rep.data
    lower = max(d["k_circ"], d["psi_orbits"])
    act, _ = psi_action(A)
    ok = not bad and (lower, d["k_lambda"], d["k_add"] * d["k_circ"]) == (4, 10, 16)
    verdict(8, ok, f"failures {bad}, B(2,1,2): {lower} <= {d['k_lambda']} <= {d['k_add'] * d['k_circ']}")


def test_criterion_09_hall_criterion(verdict):
    D4, Q8 = dihedral(4), quaternion()
    G = direct_product(symmetric3(), cyclic(2))
    cases = [(D4, center(D4), False), (Q8, center(Q8), False), (G, (0, 1), True), (D4, (0,), True)]
    ok = True
    for H, N, expect in cases:
        rep = hall_criterion_check(H, N)
        meets_trivially = intersect(N, derived_subgroup(H)) == (0,)
        ok &= rep.holds and rep.data["isoclinic"] is expect and meets_trivially is expect
    verdict(9, ok, "D4/Z, Q8/Z not isoclinic; S3xZ2/Z2 and D4/1 isoclinic")


def test_criterion_10_brace_isoclinism_and_lambda(verdict):
    def work():
        ok, notes = True, []
        for name, A, B in isoclinic_pairs():
            cert = brace_isoclinic(A, B)
            ok &= cert is not None
            com = isocom_check(A, B)
            ok &= com.data["applicable"] and com.holds
            sdp = isoclinicsdp_check(A, B)
            cond = (condition_center(A) and condition_center(B)) or (
                condition_ann_meets_derived(A) and condition_ann_meets_derived(B))
            if cond:
                g = group_isoclinic(build_lambda_group(A).group, build_lambda_group(B).group)
                ok &= g is not None and verify_group_isoclinism(g) and sdp.holds and bool(sdp.checks)
                notes.append(name)
        S = make_trivial_brace(symmetric3())
        T = opposite(S)
        ok &= brace_isoclinic(S, T) is None
        ok &= find_isomorphism(build_lambda_group(S).group, build_lambda_group(T).group) is not None
        return ok, notes

    (ok, notes), secs = timed(work)
    verdict(10, ok and len(notes) >= 1 and secs < 60.0, f"lambda certificates for {notes}, {secs:.2f}s")


def test_criterion_11_character_engine_invariants(verdict):
    groups = [build_lambda_group(A).group for _, A in CORPUS]
    groups += [symmetric3(), dihedral(4), quaternion(), alternating(4), alternating(5), symmetric(4)[0]]
    bad = []
    for i, G in enumerate(groups):
        D = character_degrees(G)
        if not (sum(d * d for d in D.degrees) == G.n
                and D.count(1) == G.n // len(derived_subgroup(G)) == linear_character_count(G)
                and D.k == conjugacy_classes(G).k):
            bad.append(i)
    S3 = symmetric3()
    law = character_degrees(direct_product(S3, S3)).multiplicities()
    verdict(11, not bad and law == [[1, 4], [2, 4], [4, 1]], f"{len(groups)} groups, failures {bad}, S3xS3 {law}")


def test_criterion_12_rep_correspondence(verdict):
    ok, count = True, 0
    for _, A in CORPUS:
        L = build_lambda_group(A).group
        fams = list(linear_characters(L))
        if A.n <= 6:
            fams.append(regular_rep(L))
        for phi in fams:
            r = from_group_rep(A, phi)
            ok &= to_group_rep(r) == phi and from_group_rep(A, to_group_rep(r)) == r
            count += 1
    B = make_radical_brace(2, 2, 1)
    L = build_lambda_group(B).group
    H = pairs(4, range(4), [0, 2])
    for j in range(4):
        phi = induced_rep(L, H, {h: j * (h // 4) % 4 for h in H}, 4)
        r = from_group_rep(B, phi)
        ok &= to_group_rep(r) == phi
        count += 1
    ring = CycRing(4)
    beta = ring.zeta_powers[np.arange(4)][:, None, None, :]
    rho = np.broadcast_to(ring.identity(1), beta.shape)
    try:
        validate_brace_rep(B, beta, rho, 4)
        witness = None
    except RelationViolation as exc:
        witness = exc.witness
    ok &= witness == (1, 1)
    verdict(12, ok, f"{count} representations round-trip, negative witness {witness}")
