"""Skew left braces on a shared index set.

A brace is a pair of groups ``add`` (the dot group) and ``circ`` on the same
elements ``0..n-1`` with common identity 0, satisfying

    a o (b c) = (a o b) a^-1 (a o c).

Subsets (ideals, annihilator, commutator ideal) are sorted index tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal, Sequence

import numpy as np

from .config import caps, check_cap
from .errors import BadParameters, BraceAxiomViolation, NotAnIdeal, NotBraceHom, ValidationError
from .groups import (
    FiniteGroup,
    _frozen,
    as_subset,
    center,
    coset_labels,
    direct_product,
    hom_check,
    hom_witness,
    intersect,
    is_cyclic,
    is_normal,
    is_subgroup,
    semidirect_product,
    subgroup_generated,
    validate_group,
)
from .isomorphism import iter_isomorphisms, order_profile

Flavor = Literal["standard", "opposite"]


@dataclass(frozen=True, eq=False)
class SkewBrace:
    add: FiniteGroup
    circ: FiniteGroup

    @property
    def n(self) -> int:
        return self.add.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewBrace):
            return NotImplemented
        return self.add == other.add and self.circ == other.circ

    def __hash__(self) -> int:
        return hash((hash(self.add), hash(self.circ)))

    def __repr__(self) -> str:
        return f"SkewBrace(n={self.n})"

    @cached_property
    def lam(self) -> np.ndarray:
        """lam[a, b] = a^-1 (a o b)"""
        A, C = self.add.table, self.circ.table
        return _frozen(A[self.add.inv[:, None], C])

    @cached_property
    def lam_op(self) -> np.ndarray:
        """lam_op[a, b] = (a o b) a^-1"""
        A, C = self.add.table, self.circ.table
        return _frozen(A[C, self.add.inv[:, None]])

    def to_json(self) -> dict:
        return {"n": self.n, "add": self.add.table.tolist(), "circ": self.circ.table.tolist()}


def _axiom_first_witness(A: FiniteGroup, C: FiniteGroup) -> tuple[int, int, int, int, int] | None:
    At, Ct, inv = A.table, C.table, A.inv
    for a in range(A.n):
        lhs = Ct[a][At]                                        # a o (b c)
        rhs = At[At[Ct[a], inv[a]][:, None], Ct[a][None, :]]   # (a o b) a^-1 (a o c)
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            b, c = (int(v) for v in diff[0])
            return a, b, c, int(lhs[b, c]), int(rhs[b, c])
    return None


def _check_brace(A: FiniteGroup, C: FiniteGroup) -> None:
    if A.n != C.n:
        raise ValidationError(f"group orders differ: {A.n} vs {C.n}")
    # The axiom for a fixed a says b -> a^-1 (a o b) is a hom of (A, .); a hom
    # condition on a generating set of (A, .) is exhaustive.
    lam = A.table[A.inv[:, None], C.table]
    gens = list(A.generators)
    ok = True
    if gens:
        lhs = lam[:, A.table[:, gens]]                             # lam_a(b g)
        rhs = A.table[lam[:, :, None], lam[:, gens][:, None, :]]   # lam_a(b) lam_a(g)
        ok = bool(np.array_equal(lhs, rhs))
    if not ok:
        w = _axiom_first_witness(A, C)
        assert w is not None
        a, b, c, left, right = w
        raise BraceAxiomViolation(
            f"a o (b c) = {left} but (a o b) a^-1 (a o c) = {right} at (a,b,c)=({a},{b},{c})", (a, b, c, left, right)
        )


def validate_brace(add_table, circ_table) -> SkewBrace:
    A = add_table if isinstance(add_table, FiniteGroup) else validate_group(add_table)
    C = circ_table if isinstance(circ_table, FiniteGroup) else validate_group(circ_table)
    _check_brace(A, C)
    return SkewBrace(A, C)


# -------------------------------------------------------------- lambda


@dataclass(frozen=True, eq=False)
class LambdaMap:
    brace: SkewBrace
    perms: np.ndarray
    flavor: Flavor

    def __call__(self, a: int, b: int) -> int:
        return int(self.perms[a, b])


def _check_lambda(A: SkewBrace, perms: np.ndarray, flavor: str) -> None:
    add, circ = A.add, A.circ
    if not np.array_equal(perms[0], np.arange(A.n)):
        raise AssertionError(f"{flavor} lambda_0 is not the identity")
    for a in range(A.n):
        if not hom_check(add, add, perms[a]):
            raise AssertionError(f"{flavor} lambda_{a} is not an automorphism")
    composed = np.take_along_axis(perms[:, None, :].repeat(A.n, axis=1), perms[None, :, :].repeat(A.n, axis=0), axis=2)
    if not np.array_equal(perms[circ.table], composed):
        raise AssertionError(f"{flavor} lambda is not a homomorphism from the circle group")


def lambda_map(A: SkewBrace) -> LambdaMap:
    _check_lambda(A, A.lam, "standard")
    return LambdaMap(A, A.lam, "standard")


def lambda_op_map(A: SkewBrace) -> LambdaMap:
    _check_lambda(A, A.lam_op, "opposite")
    t, inv = A.add.table, A.add.inv
    conj = t[t[np.arange(A.n)[:, None], A.lam], inv[:, None]]  # a lam_a(b) a^-1
    if not np.array_equal(conj, A.lam_op):
        raise AssertionError("lam_op_a(b) != a lam_a(b) a^-1")
    return LambdaMap(A, A.lam_op, "opposite")


# --------------------------------------------------------- constructions


def opposite(A: SkewBrace) -> SkewBrace:
    return validate_brace(validate_group(A.add.table.T), A.circ)


def make_trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G, G)


def make_radical_brace(p: int, n: int, r: int, *, size_cap: int | None = None) -> SkewBrace:
    """Z/p^n with a o b = a + b + p^r a b."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise BadParameters(f"p={p} is not prime", (p, n, r))
    if not 1 <= r < n:
        raise BadParameters(f"need 1 <= r < n, got r={r}, n={n}", (p, n, r))
    N = p**n
    check_cap(N, size_cap or caps().brace_order, "radical brace order")
    idx = np.arange(N)
    add = (idx[:, None] + idx[None, :]) % N
    circ = (idx[:, None] + idx[None, :] + p**r * idx[:, None] * idx[None, :]) % N
    B = validate_brace(add, circ)
    if p % 2 == 1:
        assert is_cyclic(B.add) and is_cyclic(B.circ), "odd radical brace should be bicyclic"
    return B


def direct_product_brace(A: SkewBrace, B: SkewBrace) -> SkewBrace:
    return validate_brace(direct_product(A.add, B.add), direct_product(A.circ, B.circ))


def make_semidirect_brace(N: FiniteGroup, H: FiniteGroup, act) -> SkewBrace:
    """Dot group N x H, circle group N x|_act H (pairs stored at a*|H| + b)."""
    return validate_brace(direct_product(N, H), semidirect_product(N, H, act))


# ------------------------------------------------------------- subsets


def is_ideal(A: SkewBrace, S: Sequence[int]) -> bool:
    S = as_subset(S)
    if not is_subgroup(A.add, S) or not is_subgroup(A.circ, S):
        return False
    if not is_normal(A.add, S) or not is_normal(A.circ, S):
        return False
    mask = np.zeros(A.n, dtype=bool)
    mask[list(S)] = True
    return bool(mask[A.lam[:, list(S)]].all())


def fix_lambda(A: SkewBrace) -> tuple[int, ...]:
    return tuple(int(x) for x in np.flatnonzero((A.lam == np.arange(A.n)[None, :]).all(axis=0)))


def ker_lambda(A: SkewBrace) -> tuple[int, ...]:
    return tuple(int(a) for a in np.flatnonzero((A.lam == np.arange(A.n)[None, :]).all(axis=1)))


def fix_lambda_op(A: SkewBrace) -> tuple[int, ...]:
    return tuple(int(x) for x in np.flatnonzero((A.lam_op == np.arange(A.n)[None, :]).all(axis=0)))


def ker_lambda_op(A: SkewBrace) -> tuple[int, ...]:
    return tuple(int(a) for a in np.flatnonzero((A.lam_op == np.arange(A.n)[None, :]).all(axis=1)))


def annihilator(A: SkewBrace) -> tuple[int, ...]:
    ker, fix = ker_lambda(A), fix_lambda(A)
    via_fix = intersect(ker, center(A.add), fix)
    via_center = intersect(ker, center(A.add), center(A.circ))
    if via_fix != via_center:
        raise AssertionError(f"annihilator forms disagree: {via_fix} vs {via_center}")
    return via_fix


def commutator_ideal(A: SkewBrace) -> tuple[int, ...]:
    t, inv = A.add.table, A.add.inv
    comms = t[t[t, inv[:, None]], inv[None, :]]            # a b a^-1 b^-1
    twists = t[np.arange(A.n)[None, :], A.lam[:, inv]]      # [b, a] -> a lam_b(a^-1)
    gens = np.unique(np.concatenate([comms.ravel(), twists.ravel()]))
    S = subgroup_generated(A.add, gens.tolist())
    assert is_ideal(A, S), "commutator ideal is not an ideal"
    return S


def quotient_brace(A: SkewBrace, I: Sequence[int]) -> tuple[SkewBrace, np.ndarray]:
    """A/I together with the projection (element -> coset label)."""
    I = as_subset(I)
    if not is_ideal(A, I):
        raise NotAnIdeal("subset is not an ideal", I)
    label, reps = coset_labels(A.add, I)
    circ_label, circ_reps = coset_labels(A.circ, I)
    if not (np.array_equal(label, circ_label) and np.array_equal(reps, circ_reps)):
        raise AssertionError("a I != a o I for some a")
    add_q = label[A.add.table[np.ix_(reps, reps)]]
    circ_q = label[A.circ.table[np.ix_(reps, reps)]]
    return validate_brace(add_q, circ_q), _frozen(label)


def sub_brace(A: SkewBrace, S: Sequence[int]) -> tuple[SkewBrace, np.ndarray]:
    """The sub-brace on S, members re-indexed ascending (0 first)."""
    members = np.array(as_subset(S), dtype=np.int64)
    pos = np.full(A.n, -1, dtype=np.int64)
    pos[members] = np.arange(members.size)
    add_t = pos[A.add.table[np.ix_(members, members)]]
    circ_t = pos[A.circ.table[np.ix_(members, members)]]
    if (add_t < 0).any() or (circ_t < 0).any():
        raise ValidationError("subset is not closed under both operations")
    return validate_brace(add_t, circ_t), _frozen(members)


# ----------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class BraceHom:
    dom: SkewBrace
    cod: SkewBrace
    image: np.ndarray

    def __call__(self, a: int) -> int:
        return int(self.image[a])

    def to_json(self) -> dict:
        return {"image": self.image.tolist()}


def make_brace_hom(dom: SkewBrace, cod: SkewBrace, image) -> BraceHom:
    w = hom_witness(dom.add, cod.add, image)
    if w is not None:
        raise NotBraceHom(f"not a hom of the dot groups at {w}", ("add",) + w)
    w = hom_witness(dom.circ, cod.circ, image)
    if w is not None:
        raise NotBraceHom(f"not a hom of the circle groups at {w}", ("circ",) + w)
    return BraceHom(dom, cod, _frozen(image))


def iter_brace_isomorphisms(A: SkewBrace, B: SkewBrace) -> Iterator[BraceHom]:
    if A.n != B.n or order_profile(A.circ) != order_profile(B.circ):
        return
    if A.circ.is_abelian != B.circ.is_abelian:
        return
    for iso in iter_isomorphisms(A.add, B.add):
        if hom_check(A.circ, B.circ, iso.image):
            yield BraceHom(A, B, iso.image)


def find_brace_isomorphism(A: SkewBrace, B: SkewBrace) -> BraceHom | None:
    for iso in iter_brace_isomorphisms(A, B):
        return make_brace_hom(A, B, iso.image)
    return None


def is_left_brace(A: SkewBrace) -> bool:
    return A.add.is_abelian


def is_trivial_brace(A: SkewBrace) -> bool:
    return A.add == A.circ


def is_self_opposite(A: SkewBrace) -> bool:
    return find_brace_isomorphism(A, opposite(A)) is not None
