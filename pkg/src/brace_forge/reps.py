"""Representations of skew braces with exact cyclotomic matrix entries.

A brace representation is a pair of matrix families (beta, rho) indexed by
the elements of A, with beta a representation of (A, .), rho one of (A, o)
and beta(lam_op_a(b)) = rho(a) beta(b) rho(a)^-1. These correspond to
representations phi(a, b) = beta(a) rho(b) of the lambda group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import isprime

from .braces import BraceHom, SkewBrace, commutator_ideal
from .config import caps, check_cap
from .cyclotomic import CycMatrix, CycRing
from .errors import FormatError, NotAddHom, NotAHom, NotCircHom, RelationViolation, SolverError, ValidationError
from .groups import FiniteGroup, coset_labels, derived_subgroup, exponent
from .isomorphism import iter_homs
from .lambda_groups import build_lambda_group
from .named_groups import cyclic

# ------------------------------------------------------------ group reps


@dataclass(frozen=True, eq=False)
class GroupRep:
    group: FiniteGroup
    ring: CycRing
    mats: np.ndarray  # (N, d, d, deg)

    @property
    def d(self) -> int:
        return self.mats.shape[1]

    @property
    def m(self) -> int:
        return self.ring.m

    def __getitem__(self, g: int) -> CycMatrix:
        return CycMatrix(self.ring, self.mats[g])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRep)
            and self.group == other.group
            and self.m == other.m
            and np.array_equal(self.mats, other.mats)
        )

    __hash__ = None


def _first_hom_failure(ring: CycRing, table: np.ndarray, F: np.ndarray, rows: Sequence[int]) -> tuple[int, int] | None:
    d = F.shape[1]
    if not np.array_equal(F[0], ring.identity(d)):
        return (0, 0)
    Fp = ring.prepare(F)
    for a in rows:
        prod = ring.matmul_prepared(F[a][None], Fp)
        bad = np.flatnonzero((prod != F[table[a]]).reshape(len(F), -1).any(axis=1))
        if bad.size:
            return (int(a), int(bad[0]))
    return None


def validate_group_rep(G: FiniteGroup, mats, ring: CycRing) -> GroupRep:
    mats = np.asarray(mats, dtype=np.int64)
    if mats.ndim != 4 or mats.shape[0] != G.n or mats.shape[1] != mats.shape[2] or mats.shape[3] != ring.deg:
        raise FormatError(f"expected shape ({G.n}, d, d, {ring.deg}), got {mats.shape}")
    # phi(g h) = phi(g) phi(h) for generators g and all h already forces a hom
    if _first_hom_failure(ring, G.table, mats, G.generators) is not None:
        w = _first_hom_failure(ring, G.table, mats, range(G.n))
        raise NotAHom(f"matrix family is not a homomorphism at {w}", w)
    return GroupRep(G, ring, mats)


def character(r: GroupRep) -> np.ndarray:
    """Traces, one ring element per group element: shape (N, deg)."""
    return r.ring.trace(r.mats)


def characters_equal(r: GroupRep, s: GroupRep) -> bool:
    return r.group == s.group and r.m == s.m and np.array_equal(character(r), character(s))


def character_norm(r: GroupRep) -> Fraction:
    """(1/|G|) sum_g chi(g) chi(g^-1), computed in Z[zeta_m]."""
    chi = character(r)
    total = r.ring.mul(chi, chi[r.group.inv]).sum(axis=0)
    if total[1:].any():
        raise SolverError("character inner product is not rational", tuple(total.tolist()))
    return Fraction(int(total[0]), r.group.n)


def _projective_points(d: int, q: int) -> np.ndarray:
    pts = []
    for lead in range(d):
        tail = d - lead - 1
        grids = np.meshgrid(*([np.arange(q)] * tail), indexing="ij") if tail else []
        count = q**tail
        block = np.zeros((count, d), dtype=np.int64)
        block[:, lead] = 1
        for i, g in enumerate(grids):
            block[:, lead + 1 + i] = g.ravel()
        pts.append(block)
    return np.concatenate(pts)


def _has_invariant_line(gens: np.ndarray, q: int) -> bool:
    d = gens.shape[1]
    pts = _projective_points(d, q)
    alive = np.ones(len(pts), dtype=bool)
    for M in gens:
        w = pts @ M.T % q
        # v and M v are parallel iff every 2 x 2 minor vanishes
        for i in range(d):
            for j in range(i + 1, d):
                alive &= (pts[:, i] * w[:, j] - pts[:, j] * w[:, i]) % q == 0
    return bool(alive.any())


def reduction_prime(m: int, order: int) -> int:
    q = m + 1
    while not (isprime(q) and order % q):
        q += m
    return q


def reducible_mod_q(r: GroupRep) -> bool:
    """Invariant line or hyperplane of the reduction mod a prime q = 1 mod m, q not dividing |G|."""
    if r.d == 1:
        return False
    q = reduction_prime(r.m, r.group.n)
    gens = r.ring.reduce_mod(r.mats[list(r.group.generators)], q)
    return _has_invariant_line(gens, q) or _has_invariant_line(np.swapaxes(gens, 1, 2), q)


# ------------------------------------------------------------ brace reps


@dataclass(frozen=True, eq=False)
class BraceRep:
    brace: SkewBrace
    ring: CycRing
    beta: np.ndarray  # (n, d, d, deg)
    rho: np.ndarray

    @property
    def d(self) -> int:
        return self.beta.shape[1]

    @property
    def m(self) -> int:
        return self.ring.m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BraceRep)
            and self.brace.add == other.brace.add
            and self.brace.circ == other.brace.circ
            and self.m == other.m
            and np.array_equal(self.beta, other.beta)
            and np.array_equal(self.rho, other.rho)
        )

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "beta": {str(a): self.beta[a].tolist() for a in range(self.brace.n)},
            "rho": {str(a): self.rho[a].tolist() for a in range(self.brace.n)},
        }


def _family(ring: CycRing, n: int, fam) -> np.ndarray:
    if isinstance(fam, dict):
        fam = [fam[str(a)] if str(a) in fam else fam[a] for a in range(n)]
    if isinstance(fam, (list, tuple)) and fam and isinstance(fam[0], CycMatrix):
        fam = [M.data for M in fam]
    arr = np.asarray(fam, dtype=np.int64)
    if arr.ndim != 4 or arr.shape[0] != n or arr.shape[1] != arr.shape[2] or arr.shape[3] != ring.deg:
        raise FormatError(f"expected a family of shape ({n}, d, d, {ring.deg}), got {arr.shape}")
    return arr


def validate_brace_rep(A: SkewBrace, beta, rho, m: int = 1) -> BraceRep:
    ring = CycRing(m)
    beta = _family(ring, A.n, beta)
    rho = _family(ring, A.n, rho)
    if beta.shape != rho.shape:
        raise FormatError("beta and rho have different dimensions")
    w = _first_hom_failure(ring, A.add.table, beta, range(A.n))
    if w is not None:
        raise NotAddHom(f"beta is not a homomorphism of (A, .) at {w}", w)
    w = _first_hom_failure(ring, A.circ.table, rho, range(A.n))
    if w is not None:
        raise NotCircHom(f"rho is not a homomorphism of (A, o) at {w}", w)
    # with rho a homomorphism, rho(a)^-1 = rho(a') for the circle inverse a'
    cinv = A.circ.inv
    beta_p = ring.prepare(beta)
    for a in range(A.n):
        assert CycMatrix(ring, rho[a]).inverse_certified(CycMatrix(ring, rho[cinv[a]]))
        rhs = ring.matmul(ring.matmul_prepared(rho[a][None], beta_p), rho[cinv[a]][None])
        lhs = beta[A.lam_op[a]]
        bad = np.flatnonzero((lhs != rhs).reshape(A.n, -1).any(axis=1))
        if bad.size:
            w = (a, int(bad[0]))
            raise RelationViolation(f"beta(lam_op_a(b)) != rho(a) beta(b) rho(a)^-1 at {w}", w)
    return BraceRep(A, ring, beta, rho)


def brace_rep_from_json(A: SkewBrace, obj: dict) -> BraceRep:
    try:
        d, m = int(obj["d"]), int(obj["m"])
        rep = validate_brace_rep(A, obj["beta"], obj["rho"], m)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed representation: {exc}") from None
    if rep.d != d:
        raise FormatError(f"declared d={d} but matrices have size {rep.d}")
    return rep


def to_group_rep(r: BraceRep) -> GroupRep:
    L = build_lambda_group(r.brace, "opposite").group
    n, d = r.brace.n, r.d
    phi = r.ring.matmul(r.beta[:, None], r.rho[None, :]).reshape(n * n, d, d, r.ring.deg)
    try:
        return validate_group_rep(L, phi, r.ring)
    except NotAHom as exc:  # impossible for a validated brace rep
        raise AssertionError(f"phi(a, b) = beta(a) rho(b) is not a representation: {exc}") from None


def from_group_rep(A: SkewBrace, phi: GroupRep) -> BraceRep:
    L = build_lambda_group(A, "opposite").group
    if phi.group != L:
        raise ValidationError("representation is not over the lambda group of this brace")
    n = A.n
    beta = phi.mats[np.arange(n) * n]
    rho = phi.mats[np.arange(n)]
    r = validate_brace_rep(A, beta, rho, phi.m)
    assert to_group_rep(r) == phi, "phi(a, b) != phi(a, 1) phi(1, b)"
    return r


def is_irreducible(r: BraceRep | GroupRep) -> bool:
    g = to_group_rep(r) if isinstance(r, BraceRep) else r
    check_cap(g.d * g.group.n, caps().analysis_order * 64, "irreducibility test")
    norm = character_norm(g)
    by_norm = norm == 1
    if g.d <= 3:
        by_search = not reducible_mod_q(g)
        if by_search != by_norm:
            raise SolverError("character norm and invariant-subspace search disagree", (str(norm), by_search))
    return by_norm


def one_dim_rep_count(A: SkewBrace) -> int:
    return (A.n // len(commutator_ideal(A))) * (A.n // len(derived_subgroup(A.circ)))


# -------------------------------------------------------- constructions


def trivial_rep(A: SkewBrace, d: int = 1, m: int = 1) -> BraceRep:
    ring = CycRing(m)
    ident = np.broadcast_to(ring.identity(d), (A.n, d, d, ring.deg))
    return validate_brace_rep(A, ident, ident, m)


def permutation_matrices(perms: Sequence[Sequence[int]], ring: CycRing) -> np.ndarray:
    perms = np.asarray(perms, dtype=np.int64)
    k, pts = perms.shape
    out = np.zeros((k, pts, pts, ring.deg), dtype=np.int64)
    cols = np.arange(pts)
    for i, p in enumerate(perms):
        out[i, p, cols, 0] = 1
    return out


def permutation_brace_rep(A: SkewBrace, eta: BraceHom, perms: Sequence[Sequence[int]]) -> BraceRep:
    """beta = rho = permutation matrices of eta, for eta into a trivial brace on Sym(m)."""
    S = eta.cod
    if S.add != S.circ:
        raise ValidationError("codomain of eta must be a trivial brace")
    P = np.asarray(perms, dtype=np.int64)
    if P.shape[0] != S.n:
        raise FormatError("need one permutation per codomain element")
    composed = P[np.arange(S.n)[:, None, None], P[None, :, :]]  # (p o q)(x) = p(q(x))
    if not np.array_equal(P[S.add.table], composed):
        raise ValidationError("permutation list does not match the codomain table")
    ring = CycRing(1)
    mats = permutation_matrices(P, ring)[np.asarray(eta.image)]
    return validate_brace_rep(A, mats, mats, 1)


def regular_rep(G: FiniteGroup, m: int = 1) -> GroupRep:
    ring = CycRing(m)
    return validate_group_rep(G, permutation_matrices(G.table, ring), ring)


def linear_characters(G: FiniteGroup, m: int | None = None) -> list[GroupRep]:
    m = m or exponent(G)
    ring = CycRing(m)
    out = []
    for h in iter_homs(G, cyclic(m)):
        mats = ring.zeta_powers[np.asarray(h.image)][:, None, None, :]
        out.append(validate_group_rep(G, mats, ring))
    return out


def induced_rep(G: FiniteGroup, H: Sequence[int], exps: dict[int, int], m: int) -> GroupRep:
    """Induce the linear character h -> zeta_m^exps[h] of the subgroup H."""
    ring = CycRing(m)
    _, reps = coset_labels(G, H)  # left cosets g H, by minimal member
    reps = [int(t) for t in reps]
    d = len(reps)
    t, inv = G.table, G.inv
    Hset = set(int(h) for h in H)
    mats = np.zeros((G.n, d, d, ring.deg), dtype=np.int64)
    for g in range(G.n):
        for j, tj in enumerate(reps):
            for i, ti in enumerate(reps):
                h = int(t[t[inv[ti], g], tj])
                if h in Hset:
                    mats[g, i, j] = ring.zeta_powers[exps[h] % m]
                    break
    return validate_group_rep(G, mats, ring)


def direct_sum(r: GroupRep, s: GroupRep) -> GroupRep:
    if r.group != s.group or r.m != s.m:
        raise ValidationError("summands must share group and conductor")
    N, d, e = r.group.n, r.d, s.d
    mats = np.zeros((N, d + e, d + e, r.ring.deg), dtype=np.int64)
    mats[:, :d, :d] = r.mats
    mats[:, d:, d:] = s.mats
    return validate_group_rep(r.group, mats, r.ring)


def rep_with_trivial_beta(A: SkewBrace, rho: GroupRep) -> BraceRep:
    """(beta_0, rho) for a representation rho of (A, o)."""
    if rho.group != A.circ:
        raise ValidationError("rho must be a representation of the circle group")
    ident = np.broadcast_to(rho.ring.identity(rho.d), rho.mats.shape)
    return validate_brace_rep(A, ident, rho.mats, rho.m)
