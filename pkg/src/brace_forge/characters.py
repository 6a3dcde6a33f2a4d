"""Irreducible character degrees, permutation characters and the regular
representation of the lambda group.

Degrees come from the class algebra. With a_{jkl} = #{(x, y) in C_j x C_k :
xy = z_l} for a fixed z_l in C_l, the vector of central character values
w = (w_l) of every irreducible satisfies M_j w = w_j w where
M_j[k, l] = a_{jkl}. All these vectors are found as common eigenvectors over
F_q, and chi(1)^2 = |G| / sum_k w_k w_{k*} / h_k gives the degree.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import isprime

from . import modp
from .braces import SkewBrace, make_radical_brace
from .config import caps, check_cap
from .errors import NoSuitablePrime, SolverError
from .groups import (
    ConjugacyData,
    FiniteGroup,
    GroupAction,
    center,
    conjugacy_classes,
    derived_subgroup,
    exponent,
)
from .isomorphism import find_isomorphism
from .lambda_groups import build_lambda_group
from .named_groups import metacyclic
from .reports import Report

PRIME_SEARCH_LIMIT = 10**6


@dataclass(frozen=True)
class DegreeMultiset:
    order: int
    degrees: tuple[int, ...]
    prime_q: int

    @property
    def k(self) -> int:
        return len(self.degrees)

    def multiplicities(self) -> list[list[int]]:
        return [[d, m] for d, m in sorted(Counter(self.degrees).items())]

    def distinct(self) -> frozenset[int]:
        return frozenset(self.degrees)

    def count(self, d: int) -> int:
        return self.degrees.count(d)

    def to_json(self) -> dict:
        return {"order": self.order, "k": self.k, "degrees": self.multiplicities(), "prime_q": self.prime_q}


@dataclass(frozen=True)
class ClassFunction:
    classes: ConjugacyData
    values: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.values[int(self.classes.class_of[g])]

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)


def choose_prime(order: int, exp: int) -> int:
    """Smallest prime q = 1 mod exp with q > 2 sqrt(order)."""
    bound = math.isqrt(4 * order) + 1  # least integer with bound^2 > 4 order
    m = max(1, -(-(bound - 1) // exp))
    for _ in range(PRIME_SEARCH_LIMIT):
        q = m * exp + 1
        if q >= bound and isprime(q):
            return q
        m += 1
    raise NoSuitablePrime(f"no prime = 1 mod {exp} found above {bound}", (order, exp))


class _ClassAlgebra:
    """Class matrices built on demand, one per class."""

    def __init__(self, G: FiniteGroup, cd: ConjugacyData):
        self.G, self.cd = G, cd
        self.members = cd.classes()
        self._cache: dict[int, np.ndarray] = {}

    def matrix(self, j: int) -> np.ndarray:
        if j not in self._cache:
            k = self.cd.k
            t, inv, cls = self.G.table, self.G.inv, self.cd.class_of
            xs = np.asarray(self.members[j], dtype=np.int64)
            M = np.zeros((k, k), dtype=np.int64)
            for l, z in enumerate(self.cd.reps):
                # y = x^-1 z for x in C_j
                np.add.at(M[:, l], cls[t[inv[xs], z]], 1)
            self._cache[j] = M
        return self._cache[j]


def _split(alg: _ClassAlgebra, q: int) -> list[np.ndarray]:
    k = alg.cd.k
    spaces = [np.eye(k, dtype=np.int64)]
    for j in range(1, k):
        if all(W.shape[1] == 1 for W in spaces):
            break
        Mj = alg.matrix(j)
        nxt: list[np.ndarray] = []
        for W in spaces:
            dim = W.shape[1]
            if dim == 1:
                nxt.append(W)
                continue
            W, piv = modp.column_echelon(W, q)
            R = modp.matmul(Mj, W, q)[piv]
            roots = modp.poly_roots(modp.charpoly(R, q), q)
            got = 0
            for ev in roots:
                E = modp.nullspace((R - ev * np.eye(dim, dtype=np.int64)) % q, q)
                got += E.shape[1]
                nxt.append(modp.matmul(W, E, q))
            if got != dim:
                raise SolverError(f"class matrix {j} is not diagonalizable mod {q}", (j, q))
        spaces = nxt
    if any(W.shape[1] != 1 for W in spaces) or len(spaces) != k:
        raise SolverError("class matrices do not separate the irreducibles", (q,))
    return spaces


def _degree_from_vector(v: np.ndarray, cd: ConjugacyData, n: int, q: int) -> int:
    v = v.ravel() % q
    if v[0] == 0:
        raise SolverError("eigenvector vanishes at the identity class", (q,))
    v = v * pow(int(v[0]), -1, q) % q
    s = 0
    for c in range(cd.k):
        s = (s + int(v[c]) * int(v[cd.inverse_class[c]]) * pow(cd.sizes[c], -1, q)) % q
    if s == 0:
        raise SolverError("zero norm for a class-algebra eigenvector", (q,))
    target = n * pow(s, -1, q) % q
    for d in range(1, math.isqrt(n) + 1):
        if d * d % q == target:
            return d
    raise SolverError("no integer degree matches the recovered square", (target, q))


def validate_degrees(G: FiniteGroup, degrees, k: int) -> None:
    n = G.n
    lin = linear_character_count(G)
    if sum(d * d for d in degrees) != n:
        raise SolverError("sum of squared degrees differs from the group order", tuple(degrees))
    if list(degrees).count(1) != lin:
        raise SolverError("linear character count differs from |G:G'|", (list(degrees).count(1), lin))
    if len(degrees) != k:
        raise SolverError("number of degrees differs from the class number", (len(degrees), k))


@lru_cache(maxsize=128)
def _degrees_cached(G: FiniteGroup) -> DegreeMultiset:
    n = G.n
    q = choose_prime(n, exponent(G))
    cd = conjugacy_classes(G)
    if cd.k == n:
        degrees = [1] * n
    else:
        alg = _ClassAlgebra(G, cd)
        degrees = [_degree_from_vector(W, cd, n, q) for W in _split(alg, q)]
    degrees.sort()
    validate_degrees(G, degrees, cd.k)
    return DegreeMultiset(n, tuple(degrees), q)


def character_degrees(G: FiniteGroup, *, size_cap: int | None = None) -> DegreeMultiset:
    check_cap(G.n, size_cap or caps().analysis_order, "character analysis")
    return _degrees_cached(G)


def linear_character_count(G: FiniteGroup) -> int:
    return G.n // len(derived_subgroup(G))


def ird_group(G: FiniteGroup) -> frozenset[int]:
    return character_degrees(G).distinct()


def ird(A: SkewBrace) -> frozenset[int]:
    L = build_lambda_group(A, "opposite")
    check_cap(L.group.n, caps().analysis_order, "lambda group character analysis")
    out = ird_group(L.group)
    assert ird_group(A.circ) <= out, "ird(A, o) is not contained in ird(A)"
    return out


# ---------------------------------------------------- permutation actions


def permutation_character(act: GroupAction) -> ClassFunction:
    cd = conjugacy_classes(act.group)
    perms = np.asarray(act.perms)
    points = np.arange(perms.shape[1])
    values = tuple(int((perms[r] == points).sum()) for r in cd.reps)
    return ClassFunction(cd, values)


def _fixed_points(perms: np.ndarray) -> np.ndarray:
    return (perms == np.arange(perms.shape[1])[None, :]).sum(axis=1)


def regular_decomposition_check(A: SkewBrace) -> Report:
    """The regular action of the lambda group, restricted to (A, .) x 1 and
    1 x (A, o), against |A| copies of the respective left-regular actions.
    """
    L = build_lambda_group(A, "opposite")
    n = A.n
    t = L.group.table
    rep = Report("regular_decomposition", data={"blocks": n, "block_size": n})
    idx = np.arange(n * n)
    x, y = idx // n, idx % n
    zeros = np.zeros(n, dtype=np.int64)
    beta = t[np.arange(n) * n, :]  # (a, 1) acting on every point
    rho = t[zeros * n + np.arange(n), :]  # (1, b)

    want_beta = A.add.table[:, x] * n + y[None, :]
    bad = np.argwhere(beta != want_beta)
    rep.add("beta(a)(x,y) = (a x, y)", bad.size == 0, None if bad.size == 0 else [int(bad[0][0]), *divmod(int(bad[0][1]), n)])
    want_rho = A.lam_op[:, x] * n + A.circ.table[:, y]
    bad = np.argwhere(rho != want_rho)
    rep.add("rho(b)(x,y) = (lam_op_b(x), b o y)", bad.size == 0, None if bad.size == 0 else [int(bad[0][0]), *divmod(int(bad[0][1]), n)])

    # beta side: the block {(x, y) : x in A} is stable and x -> (x, y) intertwines
    ok, wit = True, None
    for yy in range(n):
        block = np.arange(n) * n + yy
        if not np.array_equal(beta[:, block], A.add.table * n + yy):
            ok, wit = False, yy
            break
    rep.add("beta = |A| copies of the left-regular (A, .) action", ok, wit)

    # rho side: free action with n orbits, each equivariantly a copy of (A, o)
    ok, wit = True, None
    seen = np.zeros(n * n, dtype=bool)
    bases = []
    for base in range(n * n):
        if seen[base]:
            continue
        orbit = rho[:, base]  # b -> (1, b) . base
        if np.unique(orbit).size != n or seen[orbit].any():
            ok, wit = False, int(base)
            break
        seen[orbit] = True
        bases.append(base)
        # equivariance: (1, c) . orbit[b] == orbit[c o b]
        if not np.array_equal(rho[:, orbit], orbit[A.circ.table]):
            ok, wit = False, int(base)
            break
    ok = ok and len(bases) == n
    rep.add("rho = |A| copies of the left-regular (A, o) action", ok, wit if wit is not None else (None if ok else len(bases)))
    rep.data["rho_orbit_bases"] = bases

    reg = np.where(np.arange(n) == 0, n, 0)
    rep.add("char(beta) = |A| char(beta_reg)", np.array_equal(_fixed_points(beta), n * reg), _fixed_points(beta))
    rep.add("char(rho) = |A| char(rho_reg)", np.array_equal(_fixed_points(rho), n * reg), _fixed_points(rho))
    return rep


# ------------------------------------------------------- worked examples


def example_suite_p2(p: int) -> Report:
    """Radical brace on Z/p^2 with a o b = a + b + p a b."""
    A = make_radical_brace(p, 2, 1)
    L = build_lambda_group(A, "opposite").group
    check_cap(L.n, caps().analysis_order, "lambda group character analysis")
    D = character_degrees(L)
    dlen = len(derived_subgroup(L))
    rep = Report(f"order p^2 radical brace, p={p}", data={"degrees": D.multiplicities(), "derived_order": dlen})
    rep.add("|Lambda'| = p", dlen == p, dlen)
    rep.add("p^3 linear characters", D.count(1) == p**3, D.count(1))
    rep.add("p^2 - p irreducibles of degree p", D.count(p) == p * p - p, D.count(p))
    rep.add("degrees in {1, p}", D.distinct() <= {1, p}, sorted(D.distinct()))
    return rep


def example_suite_bicyclic(p: int, n: int, r: int) -> Report:
    check_cap(p ** (2 * n), caps().analysis_order, "lambda group character analysis")
    A = make_radical_brace(p, n, r)
    L = build_lambda_group(A, "opposite").group
    D = character_degrees(L)
    expected = {1} | {p ** (n - r - a) for a in range(n - r)}
    rep = Report(f"bicyclic radical brace ({p},{n},{r})", data={"degrees": D.multiplicities()})
    rep.add("linear count p^(n+r)", D.count(1) == p ** (n + r), D.count(1))
    rep.add("degree set {1} u {p^(n-r-a)}", D.distinct() == expected, sorted(D.distinct()))
    M = metacyclic(p**n, p**n, 1 + p**r)
    iso = find_isomorphism(L, M)
    rep.add("Lambda isomorphic to <a,b | a^(p^n) = b^(p^n) = 1, b^-1 a b = a^(1+p^r)>", iso is not None,
            None if iso is None else iso.image[:8])
    return rep


def order_p3_check(A: SkewBrace) -> Report:
    """Degrees of Lambda for |A| = p^3 (p odd) when |Z(Lambda)| >= p^3.

    Braces outside the hypothesis produce a report with no checks and
    ``applicable`` False.
    """
    n = A.n
    rep = Report("order p^3 with large center", data={"applicable": False})
    p = next((d for d in range(2, n + 1) if n % d == 0), n)
    if p == 2 or n != p**3:
        return rep
    L = build_lambda_group(A, "opposite").group
    if len(center(L)) < p**3:
        return rep
    rep.data["applicable"] = True
    D = character_degrees(L)
    dlen = len(derived_subgroup(L))
    rep.data.update(degrees=D.multiplicities(), derived_order=dlen)
    rep.add("degrees in {1, p}", D.distinct() <= {1, p}, sorted(D.distinct()))
    want = {p: p**4 - p**3, p**2: p**4 - p**2, p**3: p**4 - p}.get(dlen)
    rep.add("degree-p count matches |Lambda'|", want is not None and D.count(p) == want, (dlen, D.count(p)))
    return rep
