"""Finite groups as Cayley tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
``table[a, b]`` is the product ``a*b``. Subsets of a group (subgroups, cosets,
orbits) are plain sorted tuples of element indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    FormatError,
    NoIdentityAtZero,
    NotActionHom,
    NotAHom,
    NotASubgroup,
    NotAssociative,
    NotAutomorphism,
    NotLatin,
    NotNormal,
)

Subset = tuple  # sorted tuple of element indices, no duplicates


def as_subset(members: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted({int(m) for m in members}))


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    inv: np.ndarray

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table.shape == other.table.shape and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup(n={self.n})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1"""
        t, i = self.table, self.inv
        return int(t[t[t[a, b], i[a]], i[b]])

    def power(self, a: int, k: int) -> int:
        x = 0
        k %= self.order_of(a)
        for _ in range(k):
            x = int(self.table[x, a])
        return x

    def order_of(self, a: int) -> int:
        return int(self.orders[a])

    @cached_property
    def orders(self) -> np.ndarray:
        return _element_orders(self.table)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A short generating sequence, chosen greedily by maximal element order."""
        return _greedy_generators(self)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_json(self) -> dict:
        return {"n": self.n, "table": self.table.tolist()}


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while True:
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
        if orders.all():
            return orders
        cur = table[cur, idx]
        k += 1


def validate_group(table) -> FiniteGroup:
    """Check a Cayley table and return the group it defines.

    Errors name the first witness found: a row or column index for
    ``NotLatin``, a triple for ``NotAssociative``.
    """
    try:
        t = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"table is not a rectangular integer array: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise FormatError(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise FormatError("table entries must lie in [0, n)")
    idx = np.arange(n)
    if not np.array_equal(t[0], idx) or not np.array_equal(t[:, 0], idx):
        bad = int(np.flatnonzero((t[0] != idx) | (t[:, 0] != idx))[0])
        raise NoIdentityAtZero(f"element 0 is not a two-sided identity (index {bad})", (bad,))
    srt = np.sort(t, axis=1)
    bad_rows = np.flatnonzero((srt != idx).any(axis=1))
    if bad_rows.size:
        r = int(bad_rows[0])
        raise NotLatin(f"row {r} is not a permutation", ("row", r))
    srt = np.sort(t, axis=0)
    bad_cols = np.flatnonzero((srt != idx[:, None]).any(axis=0))
    if bad_cols.size:
        c = int(bad_cols[0])
        raise NotLatin(f"column {c} is not a permutation", ("col", c))
    _check_associative(t)
    inv = np.argmin(t, axis=1)  # unique zero per row in a Latin square
    return FiniteGroup(_frozen(t), _frozen(inv))


def _magma_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    gens: list[int] = []
    while not seen.all():
        g = int(np.flatnonzero(~seen)[0])
        gens.append(g)
        members = np.flatnonzero(seen).tolist() + [g]
        seen[g] = True
        frontier = members
        while frontier:
            cur = np.flatnonzero(seen)
            prods = np.concatenate([t[np.ix_(frontier, cur)].ravel(), t[np.ix_(cur, frontier)].ravel()])
            new = np.unique(prods[~seen[prods]])
            seen[new] = True
            frontier = new.tolist()
    return gens


def _check_associative(t: np.ndarray) -> None:
    # Light's test: the middle elements g with (xg)y = x(gy) for all x, y form
    # a closed set, so checking a generating set is exhaustive.
    for g in _magma_generators(t):
        lhs = t[t[:, g]]  # (x g) y
        rhs = t[:, t[g]]  # x (g y)
        if not np.array_equal(lhs, rhs):
            _raise_first_assoc_witness(t)
    return None


def _raise_first_assoc_witness(t: np.ndarray) -> None:
    n = t.shape[0]
    for a in range(n):
        lhs = t[t[a]]            # lhs[b, c] = (a b) c
        rhs = t[a][t]            # rhs[b, c] = a (b c)
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            b, c = (int(v) for v in diff[0])
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    raise AssertionError("associativity failure not reproduced")


def _greedy_generators(G: FiniteGroup) -> tuple[int, ...]:
    if G.n == 1:
        return ()
    orders = G.orders
    ranking = sorted(range(1, G.n), key=lambda a: (-int(orders[a]), a))
    gens: list[int] = []
    inside = np.zeros(G.n, dtype=bool)
    inside[0] = True
    for a in ranking:
        if inside[a]:
            continue
        gens.append(a)
        inside[:] = False
        inside[list(subgroup_generated(G, gens))] = True
        if inside.all():
            break
    return tuple(gens)


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    gens = [int(g) for g in gens if int(g) != 0]
    seen = np.zeros(G.n, dtype=bool)
    seen[0] = True
    if not gens:
        return (0,)
    frontier = np.array([0], dtype=np.int64)
    g = np.array(sorted(set(gens)), dtype=np.int64)
    while frontier.size:
        prods = np.unique(G.table[np.ix_(frontier, g)].ravel())
        new = prods[~seen[prods]]
        seen[new] = True
        frontier = new
    members = tuple(int(x) for x in np.flatnonzero(seen))
    assert G.n % len(members) == 0, "Lagrange violated: table is not a group"
    return members


def center(G: FiniteGroup) -> tuple[int, ...]:
    t = G.table
    return tuple(int(z) for z in np.flatnonzero((t == t.T).all(axis=1)))


def commutator_set(G: FiniteGroup) -> np.ndarray:
    t, i = G.table, G.inv
    return np.unique(t[t[t, i[:, None]], i[None, :]])


def derived_subgroup(G: FiniteGroup) -> tuple[int, ...]:
    return subgroup_generated(G, commutator_set(G).tolist())


def is_subgroup(G: FiniteGroup, S: Sequence[int]) -> bool:
    s = np.array(sorted(set(S)), dtype=np.int64)
    if s.size == 0 or s[0] != 0:
        return False
    mask = np.zeros(G.n, dtype=bool)
    mask[s] = True
    return bool(mask[G.table[np.ix_(s, s)]].all() and mask[G.inv[s]].all())


def is_normal(G: FiniteGroup, S: Sequence[int]) -> bool:
    if not is_subgroup(G, S):
        raise NotASubgroup("subset is not a subgroup", tuple(S))
    s = np.array(sorted(set(S)), dtype=np.int64)
    mask = np.zeros(G.n, dtype=bool)
    mask[s] = True
    t = G.table
    conj = t[t[:, s], G.inv[:, None]]  # g s g^-1
    return bool(mask[conj].all())


def intersect(*subsets: Sequence[int]) -> tuple[int, ...]:
    return as_subset(reduce(lambda x, y: set(x) & set(y), subsets))


# ---------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class GroupHom:
    dom: FiniteGroup
    cod: FiniteGroup
    image: np.ndarray

    def __call__(self, a: int) -> int:
        return int(self.image[a])

    def kernel(self) -> tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self.image == 0))

    def is_bijective(self) -> bool:
        return self.dom.n == self.cod.n and np.unique(self.image).size == self.dom.n

    def to_json(self) -> dict:
        return {"image": self.image.tolist()}


def hom_witness(dom: FiniteGroup, cod: FiniteGroup, image) -> tuple[int, int] | None:
    """First pair (a, b) with image[ab] != image[a] image[b], or None."""
    img = np.asarray(image, dtype=np.int64)
    if img.shape != (dom.n,) or img.min(initial=0) < 0 or img.max(initial=0) >= cod.n:
        return (-1, -1)
    if img[0] != 0:
        return (0, 0)
    # checking b over generators is exhaustive (the good b's form a closed set)
    gens = list(dom.generators)
    if gens:
        lhs = img[dom.table[:, gens]]
        rhs = cod.table[img[:, None], img[gens][None, :]]
        if np.array_equal(lhs, rhs):
            return None
    else:
        return None
    lhs = img[dom.table]
    rhs = cod.table[img[:, None], img[None, :]]
    a, b = np.argwhere(lhs != rhs)[0]
    return int(a), int(b)


def hom_check(dom: FiniteGroup, cod: FiniteGroup, image) -> bool:
    return hom_witness(dom, cod, image) is None


def make_hom(dom: FiniteGroup, cod: FiniteGroup, image) -> GroupHom:
    w = hom_witness(dom, cod, image)
    if w is not None:
        raise NotAHom(f"not a homomorphism at {w}", w)
    return GroupHom(dom, cod, _frozen(image))


def compose_homs(f: GroupHom, g: GroupHom) -> GroupHom:
    """g after f."""
    if f.cod != g.dom:
        raise ValueError("homomorphisms do not compose")
    return GroupHom(f.dom, g.cod, _frozen(g.image[f.image]))


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, _frozen(np.arange(G.n)))


# ---------------------------------------------------------- quotients


def coset_labels(G: FiniteGroup, N: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Per-element coset label and the sorted minimal representatives."""
    n_arr = np.array(sorted(set(N)), dtype=np.int64)
    mins = G.table[:, n_arr].min(axis=1)
    reps = np.unique(mins)
    label = np.searchsorted(reps, mins)
    return label, reps


def quotient(G: FiniteGroup, N: Sequence[int]) -> tuple[FiniteGroup, GroupHom]:
    if not is_subgroup(G, N) or not is_normal(G, N):
        raise NotNormal("subgroup is not normal", tuple(N))
    label, reps = coset_labels(G, N)
    q_table = label[G.table[np.ix_(reps, reps)]]
    Q = validate_group(q_table)
    return Q, GroupHom(G, Q, _frozen(label))


def subgroup_as_group(G: FiniteGroup, S: Sequence[int]) -> tuple[FiniteGroup, np.ndarray]:
    """Re-index a subgroup as its own group (members ascending, 0 first).

    Returns the group and the embedding array (new index -> old index).
    """
    members = np.array(sorted(set(S)), dtype=np.int64)
    if not is_subgroup(G, members.tolist()):
        raise NotASubgroup("subset is not a subgroup", tuple(members.tolist()))
    pos = np.full(G.n, -1, dtype=np.int64)
    pos[members] = np.arange(members.size)
    sub = pos[G.table[np.ix_(members, members)]]
    return validate_group(sub), members


# ---------------------------------------------------------- conjugacy


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    class_of: np.ndarray
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.reps)

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in self.reps]
        for g, c in enumerate(self.class_of.tolist()):
            out[c].append(g)
        return [tuple(c) for c in out]


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    n = G.n
    t = G.table
    class_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    sizes: list[int] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        members = np.unique(t[t[:, x], G.inv])
        class_of[members] = len(reps)
        reps.append(x)
        sizes.append(int(members.size))
    inverse_class = tuple(int(class_of[G.inv[r]]) for r in reps)
    assert sum(sizes) == n and all(n % s == 0 for s in sizes)
    return ConjugacyData(_frozen(class_of), tuple(reps), tuple(sizes), inverse_class)


# --------------------------------------------------------- products


def semidirect_product(N: FiniteGroup, H: FiniteGroup, act) -> FiniteGroup:
    """N x| H with (a1, b1)(a2, b2) = (a1 act[b1](a2), b1 b2).

    ``act[h]`` is the permutation of N by which h acts. The pair (a, b) is
    stored at index ``a * |H| + b``.
    """
    act = np.asarray(act, dtype=np.int64)
    if act.shape != (H.n, N.n):
        raise FormatError(f"action array must have shape {(H.n, N.n)}")
    for h in range(H.n):
        p = act[h]
        if np.unique(p).size != N.n or p[0] != 0 or not np.array_equal(p[N.table], N.table[p[:, None], p[None, :]]):
            raise NotAutomorphism(f"act[{h}] is not an automorphism", (h,))
    # act[h1 h2] = act[h1] o act[h2]
    composed = np.take_along_axis(act[:, None, :].repeat(H.n, axis=1), act[None, :, :].repeat(H.n, axis=0), axis=2)
    direct = act[H.table]
    bad = np.argwhere((composed != direct).any(axis=2))
    if bad.size:
        h1, h2 = (int(v) for v in bad[0])
        raise NotActionHom(f"act[{h1}*{h2}] != act[{h1}] o act[{h2}]", (h1, h2))
    m = H.n
    a = np.repeat(np.arange(N.n), m)
    b = np.tile(np.arange(m), N.n)
    first = N.table[a[:, None], act[b[:, None], a[None, :]]]
    second = H.table[b[:, None], b[None, :]]
    return validate_group(first * m + second)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    act = np.tile(np.arange(G.n), (H.n, 1))
    return semidirect_product(G, H, act)


# -------------------------------------------------------------- misc


def exponent(G: FiniteGroup) -> int:
    return int(reduce(math.lcm, G.orders.tolist(), 1))


def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Cyclic factor orders of an abelian group, largest first.

    An element of maximal order spans a direct summand, so peeling it off and
    recursing on the quotient gives the invariant factors.
    """
    if not G.is_abelian:
        raise ValueError("abelian_invariants needs an abelian group")
    out: list[int] = []
    cur = G
    while cur.n > 1:
        g = int(np.argmax(cur.orders))
        out.append(int(cur.orders[g]))
        cur, _ = quotient(cur, subgroup_generated(cur, [g]))
    return out


def is_cyclic(G: FiniteGroup) -> bool:
    return int(G.orders.max()) == G.n


# ------------------------------------------------------------ actions


@dataclass(frozen=True, eq=False)
class GroupAction:
    group: FiniteGroup
    perms: np.ndarray  # perms[g] is the permutation of [0, m) by which g acts

    @property
    def m(self) -> int:
        return int(self.perms.shape[1])


def make_action(G: FiniteGroup, perms) -> GroupAction:
    p = np.asarray(perms, dtype=np.int64)
    if p.ndim != 2 or p.shape[0] != G.n:
        raise FormatError("action needs one permutation per group element")
    m = p.shape[1]
    if not np.array_equal(p[0], np.arange(m)):
        raise NotActionHom("identity does not act trivially", (0, 0))
    if (np.sort(p, axis=1) != np.arange(m)).any():
        raise FormatError("action entries are not permutations")
    gens = list(G.generators)
    if gens:
        lhs = p[G.table[:, gens]]                      # perms[g h]
        rhs = np.take_along_axis(p[:, None, :].repeat(len(gens), axis=1), p[gens][None, :, :].repeat(G.n, axis=0), axis=2)
        bad = np.argwhere((lhs != rhs).any(axis=2))
        if bad.size:
            g, j = (int(v) for v in bad[0])
            raise NotActionHom(f"perms[{g}*{gens[j]}] != perms[{g}] o perms[{gens[j]}]", (g, gens[j]))
    return GroupAction(G, _frozen(p))


def orbits(act: GroupAction) -> list[tuple[int, ...]]:
    m = act.m
    seen = np.zeros(m, dtype=bool)
    out = []
    for x in range(m):
        if seen[x]:
            continue
        orb = np.unique(act.perms[:, x])
        seen[orb] = True
        out.append(tuple(int(v) for v in orb))
    return out


def conjugation_action(G: FiniteGroup) -> GroupAction:
    t = G.table
    return make_action(G, t[t, G.inv[:, None]])  # perms[g][x] = g x g^-1
