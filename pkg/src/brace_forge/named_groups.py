"""Cayley tables of the small groups used as fixtures."""

from __future__ import annotations

import itertools

import numpy as np

from .groups import FiniteGroup, validate_group


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return validate_group((idx[:, None] + idx[None, :]) % n)


def klein_four() -> FiniteGroup:
    idx = np.arange(4)
    return validate_group(idx[:, None] ^ idx[None, :])


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    # (p*q)(x) = p(q(x))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[x] for x in q)]
    return validate_group(table)


S3_PERMS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
"""e, (12), (13), (23), (123), (132) acting on {0, 1, 2}."""


def symmetric3() -> FiniteGroup:
    return _perm_group(S3_PERMS)


def symmetric(m: int) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """Sym(m) with elements in lexicographic order (identity first)."""
    perms = list(itertools.permutations(range(m)))
    return _perm_group(perms), perms


def _parity(p) -> int:
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def alternating(m: int) -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(m)) if _parity(p) == 0]
    return _perm_group(perms)


def dihedral(k: int) -> FiniteGroup:
    """Symmetries of a k-gon (order 2k): r^i s^j stored at i + k j."""
    n = 2 * k
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        i1, j1 = x % k, x // k
        for y in range(n):
            i2, j2 = y % k, y // k
            i = (i1 + (-i2 if j1 else i2)) % k
            table[x, y] = i + k * ((j1 + j2) % 2)
    return validate_group(table)


def quaternion() -> FiniteGroup:
    """Q8 on 1, -1, i, -i, j, -j, k, -k."""
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    table = np.empty((8, 8), dtype=np.int64)
    for a, (s1, u1) in enumerate(elems):
        for b, (s2, u2) in enumerate(elems):
            s, u = mult[(u1, u2)]
            table[a, b] = index[(s1 * s2 * s, u)]
    return validate_group(table)


def metacyclic(m: int, k: int, t: int) -> FiniteGroup:
    """<a, b | a^m = b^k = 1, b^-1 a b = a^t>, element a^i b^j at i*k + j.

    Requires t^k = 1 mod m. From b^-1 a b = a^t we get b a^i = a^(i s) b with
    s the inverse of t mod m.
    """
    if pow(t, k, m) != 1 % m:
        raise ValueError("t^k must be 1 mod m")
    s = pow(t, -1, m)
    n = m * k
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        i1, j1 = divmod(x, k)
        shift = pow(s, j1, m)
        for y in range(n):
            i2, j2 = divmod(y, k)
            table[x, y] = ((i1 + i2 * shift) % m) * k + (j1 + j2) % k
    return validate_group(table)
