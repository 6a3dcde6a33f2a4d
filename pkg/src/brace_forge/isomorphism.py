"""Backtracking search for homomorphisms and isomorphisms between table groups.

Images are assigned to the greedy generating sequence of the domain one at a
time. After each assignment the partial map is closed over the subgroup the
assigned generators span; an inconsistency during closure prunes the branch.
Candidates are tried in ascending index order, so the first result is
deterministic.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

import numpy as np

from .groups import FiniteGroup, GroupHom, _frozen, make_hom


def extend_partial(
    G: FiniteGroup,
    H: FiniteGroup,
    img: np.ndarray,
    gens: Sequence[int],
    new_gen: int,
    new_img: int,
) -> np.ndarray | None:
    """Close ``img`` (defined on <gens>) after sending ``new_gen`` to ``new_img``.

    Returns the extended map on <gens, new_gen> or None on inconsistency.
    Unassigned entries are -1.
    """
    img = img.copy()
    all_gens = list(gens) + [new_gen]
    if img[new_gen] >= 0:
        if img[new_gen] != new_img:
            return None
    img[new_gen] = new_img
    gimg = img[all_gens]
    t, ht = G.table, H.table
    frontier = np.flatnonzero(img >= 0)
    while frontier.size:
        prod = t[np.ix_(frontier, all_gens)]
        want = ht[img[frontier][:, None], gimg[None, :]]
        have = img[prod]
        known = have >= 0
        if (have[known] != want[known]).any():
            return None
        new_pos = ~known
        targets = prod[new_pos]
        values = want[new_pos]
        if targets.size == 0:
            break
        # the same element may be reached twice in one sweep
        order = np.argsort(targets, kind="stable")
        targets, values = targets[order], values[order]
        uniq, start = np.unique(targets, return_index=True)
        vals_first = values[start]
        counts = np.diff(np.append(start, targets.size))
        expanded = np.repeat(vals_first, counts)
        if (expanded != values).any():
            return None
        img[uniq] = vals_first
        frontier = uniq
    return img


def iter_homs(
    G: FiniteGroup,
    H: FiniteGroup,
    *,
    injective: bool = False,
    surjective: bool = False,
    fixed: dict[int, int] | None = None,
) -> Iterator[GroupHom]:
    """All homomorphisms G -> H (optionally injective / surjective)."""
    gens = list(G.generators)
    if injective and G.n > H.n:
        return
    if surjective and H.n > G.n:
        return
    h_orders = H.orders
    g_orders = G.orders
    img0 = np.full(G.n, -1, dtype=np.int64)
    img0[0] = 0
    fixed = fixed or {}

    def candidates(g: int) -> list[int]:
        og = int(g_orders[g])
        ok = (h_orders == og) if injective else (og % h_orders == 0)
        if g in fixed:
            return [fixed[g]] if ok[fixed[g]] else []
        return np.flatnonzero(ok).tolist()

    cand_lists = [candidates(g) for g in gens]

    def rec(level: int, img: np.ndarray) -> Iterator[np.ndarray]:
        if level == len(gens):
            yield img
            return
        g = gens[level]
        for h in cand_lists[level]:
            ext = extend_partial(G, H, img, gens[:level], g, h)
            if ext is None:
                continue
            if injective:
                vals = ext[ext >= 0]
                if np.unique(vals).size != vals.size:
                    continue
            yield from rec(level + 1, ext)

    for img in rec(0, img0):
        if surjective and np.unique(img).size != H.n:
            continue
        yield GroupHom(G, H, _frozen(img))


def order_profile(G: FiniteGroup) -> Counter:
    return Counter(G.orders.tolist())


def iter_isomorphisms(G: FiniteGroup, H: FiniteGroup) -> Iterator[GroupHom]:
    if G.n != H.n or order_profile(G) != order_profile(H):
        return
    if G.is_abelian != H.is_abelian:
        return
    yield from iter_homs(G, H, injective=True)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> GroupHom | None:
    for iso in iter_isomorphisms(G, H):
        return make_hom(G, H, iso.image)  # full re-validation
    return None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def automorphisms(G: FiniteGroup) -> Iterator[GroupHom]:
    return iter_isomorphisms(G, G)


def close_map_on_generators(
    G: FiniteGroup, H: FiniteGroup, assignment: dict[int, int]
) -> np.ndarray | None:
    """Extend a map given on some elements of G to the subgroup they generate.

    Returns the map (-1 outside that subgroup) or None if no homomorphism
    restricts to ``assignment``.
    """
    img = np.full(G.n, -1, dtype=np.int64)
    img[0] = 0
    done: list[int] = []
    for g, h in sorted(assignment.items()):
        if g == 0:
            if h != 0:
                return None
            continue
        ext = extend_partial(G, H, img, done, g, h)
        if ext is None:
            return None
        img = ext
        done.append(g)
    return img
