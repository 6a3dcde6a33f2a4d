from fractions import Fraction

import numpy as np
import pytest

from brace_forge.braces import make_brace_hom, make_radical_brace, make_trivial_brace
from brace_forge.cyclotomic import CycRing
from brace_forge.errors import FormatError, NotAddHom, NotBraceHom, NotCircHom, RelationViolation
from brace_forge.groups import derived_subgroup
from brace_forge.lambda_groups import build_lambda_group, pairs
from brace_forge.named_groups import S3_PERMS, cyclic, klein_four, symmetric3
from brace_forge.reps import (
    brace_rep_from_json,
    character,
    character_norm,
    direct_sum,
    from_group_rep,
    induced_rep,
    is_irreducible,
    linear_characters,
    one_dim_rep_count,
    permutation_brace_rep,
    permutation_matrices,
    regular_rep,
    rep_with_trivial_beta,
    to_group_rep,
    trivial_rep,
    validate_brace_rep,
)


def test_trivial_rep(corpus):
    for _, A in corpus:
        r = trivial_rep(A, 2)
        phi = to_group_rep(r)
        assert all(phi[g].is_identity() for g in range(phi.group.n))


def test_relation_violation_witness(b212):
    ring = CycRing(4)
    beta = ring.zeta_powers[np.arange(4)][:, None, None, :]
    rho = np.broadcast_to(ring.identity(1), beta.shape)
    with pytest.raises(RelationViolation) as exc:
        validate_brace_rep(b212, beta, rho, 4)
    assert exc.value.witness == (1, 1)


def test_hom_failures_are_named(b212):
    ring = CycRing(4)
    ident = np.broadcast_to(ring.identity(1), (4, 1, 1, 2))
    bad = ring.zeta_powers[[0, 1, 1, 1]][:, None, None, :]
    with pytest.raises(NotAddHom):
        validate_brace_rep(b212, bad, ident, 4)
    with pytest.raises(NotCircHom):
        validate_brace_rep(b212, ident, bad, 4)
    with pytest.raises(FormatError):
        validate_brace_rep(b212, ident[:3], ident, 4)


def test_brace_homs_into_roots_of_unity(b212):
    # a -> (-1)^a is a brace hom onto the trivial brace of order 2
    ring = CycRing(2)
    sign = ring.zeta_powers[[0, 1, 0, 1]][:, None, None, :]
    r = validate_brace_rep(b212, sign, sign, 2)
    assert is_irreducible(r)


def test_trivial_beta_with_circle_character(b212):
    for chi in linear_characters(b212.circ):
        r = rep_with_trivial_beta(b212, chi)
        phi = to_group_rep(r)
        for a in range(4):
            for b in range(4):
                assert phi[a * 4 + b] == chi[b]


def test_round_trip_on_linear_characters(corpus):
    for name, A in corpus:
        L = build_lambda_group(A).group
        for phi in linear_characters(L):
            r = from_group_rep(A, phi)
            assert to_group_rep(r) == phi, name
            assert from_group_rep(A, to_group_rep(r)) == r


def test_linear_characters_kill_derived_parts(corpus):
    for name, A in corpus:
        L = build_lambda_group(A).group
        D = set(derived_subgroup(L))
        chis = linear_characters(L)
        assert len(chis) == one_dim_rep_count(A), name
        for phi in chis:
            assert all(phi[g].is_identity() for g in D)


def test_regular_rep_round_trip(b212):
    L = build_lambda_group(b212).group
    phi = regular_rep(L)
    r = from_group_rep(b212, phi)
    assert to_group_rep(r) == phi
    assert character(phi).tolist()[0] == [16]
    assert character_norm(phi) == 16


def test_one_dim_counts(b212, trivial_s3):
    assert one_dim_rep_count(b212) == 8
    assert one_dim_rep_count(trivial_s3) == 4
    assert one_dim_rep_count(make_trivial_brace(klein_four())) == 16


def test_irreducibility(b212):
    L = build_lambda_group(b212).group
    chis = linear_characters(L)
    assert is_irreducible(chis[1])
    s = direct_sum(chis[0], chis[1])
    assert character_norm(s) == 2 and not is_irreducible(s)
    H = pairs(4, range(4), [0, 2])
    ind = induced_rep(L, H, {h: (h // 4) % 4 for h in H}, 4)
    assert ind.d == 2 and character_norm(ind) == 1 and is_irreducible(ind)
    r = from_group_rep(b212, ind)
    assert to_group_rep(r) == ind and is_irreducible(r)


def test_s3_irreducibles(s3):
    two = induced_rep(s3, [0, 4, 5], {0: 0, 4: 1, 5: 2}, 3)
    assert two.d == 2 and is_irreducible(two)
    perm = regular_rep(s3)
    assert character_norm(perm) == Fraction(6)


def test_permutation_brace_reps(trivial_s3, s3):
    sym = make_trivial_brace(s3)
    eta = make_brace_hom(trivial_s3, sym, list(range(6)))
    r = permutation_brace_rep(trivial_s3, eta, S3_PERMS)
    assert r.d == 3 and r == validate_brace_rep(trivial_s3, r.beta, r.rho)
    assert np.array_equal(r.beta, r.rho)
    assert not is_irreducible(r)
    triv = make_brace_hom(trivial_s3, sym, [0] * 6)
    r = permutation_brace_rep(trivial_s3, triv, S3_PERMS)
    assert all((r.beta[a] == permutation_matrices([S3_PERMS[0]], CycRing(1))[0]).all() for a in range(6))


def test_regular_embedding_is_not_a_brace_hom(b212):
    # (A, o) = V4 embeds in the trivial brace on V4, but not as a brace hom
    with pytest.raises(NotBraceHom):
        make_brace_hom(b212, make_trivial_brace(klein_four()), list(range(4)))


def test_natural_permutation_rep(corpus):
    # beta(a) x = a x and rho(a) x = a o x satisfy the relation for every brace
    ring = CycRing(1)
    for name, A in corpus:
        if A.n > 9:
            continue
        beta = permutation_matrices(A.add.table, ring)
        rho = permutation_matrices(A.circ.table, ring)
        r = validate_brace_rep(A, beta, rho)
        assert to_group_rep(r).d == A.n, name


def test_regular_beta_with_trivial_rho_fails_relation(b212):
    ring = CycRing(1)
    beta = permutation_matrices(b212.add.table, ring)
    rho = np.broadcast_to(ring.identity(4), beta.shape)
    with pytest.raises(RelationViolation) as exc:
        validate_brace_rep(b212, beta, rho)
    a, b = exc.value.witness
    assert b212.lam_op[a, b] != b
    assert exc.value.witness == (1, 1)


def test_json_round_trip(b212):
    L = build_lambda_group(b212).group
    H = pairs(4, range(4), [0, 2])
    r = from_group_rep(b212, induced_rep(L, H, {h: (h // 4) % 4 for h in H}, 4))
    back = brace_rep_from_json(b212, r.to_json())
    assert back == r
    bad = r.to_json() | {"d": 3}
    with pytest.raises(FormatError):
        brace_rep_from_json(b212, bad)
