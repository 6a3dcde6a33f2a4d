"""Isoclinism deciders for groups and skew braces.

Both searches enumerate only the isomorphism xi1 between the central (resp.
annihilator) quotients. The commutator diagrams then fix xi2 on every
commutator value; xi2 is closed over the subgroup those values generate and
checked to be an isomorphism of derived subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .braces import (
    SkewBrace,
    annihilator,
    commutator_ideal,
    iter_brace_isomorphisms,
    make_brace_hom,
    make_trivial_brace,
    opposite,
    quotient_brace,
    sub_brace,
)
from .config import caps, check_cap
from .errors import NotAHom, NotBraceHom, NotNormal
from .groups import (
    FiniteGroup,
    GroupHom,
    center,
    derived_subgroup,
    intersect,
    is_normal,
    make_hom,
    quotient,
    subgroup_as_group,
)
from .isomorphism import close_map_on_generators, find_isomorphism, iter_homs, iter_isomorphisms
from .lambda_groups import build_lambda_group, pairs
from .reps import one_dim_rep_count
from .reports import Report


def _lifts(labels: np.ndarray) -> np.ndarray:
    _, first = np.unique(labels, return_index=True)
    return first


def _forced_map(
    pairs_in: Iterable[tuple[int, int]],
) -> dict[int, int] | None:
    out: dict[int, int] = {}
    for src, dst in pairs_in:
        if out.setdefault(src, dst) != dst:
            return None
    return out


def _complete_xi2(
    G: FiniteGroup,
    H: FiniteGroup,
    DG: tuple[int, ...],
    DH: tuple[int, ...],
    forced: dict[int, int],
    extra_ok: Callable[[np.ndarray], bool] = lambda img: True,
) -> np.ndarray | None:
    """An injective hom DG -> DH extending ``forced``, as an array over G (-1 off DG)."""
    img = close_map_on_generators(G, H, forced)
    if img is None:
        return None
    members = np.asarray(DG)
    if (img[members] >= 0).all():
        candidates: Iterator[np.ndarray] = iter([img])
    else:
        # the forced values do not generate DG: search the remaining freedom
        subG, embG = subgroup_as_group(G, DG)
        subH, embH = subgroup_as_group(H, DH)
        posH = {int(h): i for i, h in enumerate(embH)}
        posG = {int(g): i for i, g in enumerate(embG)}
        fixed = {posG[g]: posH[h] for g, h in forced.items() if h in posH}
        if len(fixed) != len(forced):
            return None

        def gen() -> Iterator[np.ndarray]:
            for hom in iter_homs(subG, subH, injective=True, fixed=fixed):
                if any(hom.image[posG[g]] != posH[h] for g, h in forced.items()):
                    continue
                full = np.full(G.n, -1, dtype=np.int64)
                full[embG] = embH[hom.image]
                yield full

        candidates = gen()
    target = set(DH)
    for cand in candidates:
        vals = cand[members]
        if len(set(vals.tolist())) == len(DG) and set(vals.tolist()) == target and extra_ok(cand):
            return cand
    return None


# ------------------------------------------------------------------ groups


@dataclass(frozen=True, eq=False)
class GroupIsoclinism:
    G: FiniteGroup
    H: FiniteGroup
    xi1: GroupHom  # G/Z(G) -> H/Z(H)
    xi2: np.ndarray  # over G, defined on G'

    def to_json(self) -> dict:
        DG = derived_subgroup(self.G)
        return {
            "xi1": self.xi1.image.tolist(),
            "xi2": {"domain": list(DG), "image": [int(self.xi2[g]) for g in DG]},
        }


def _central_data(G: FiniteGroup):
    Q, pi = quotient(G, center(G))
    lift = _lifts(np.asarray(pi.image))
    t, inv = G.table, G.inv
    u, v = lift[:, None], lift[None, :]
    comm = t[t[t[u, v], inv[u]], inv[v]]
    return Q, pi, comm


def group_isoclinic(G: FiniteGroup, H: FiniteGroup) -> GroupIsoclinism | None:
    ZG, ZH = center(G), center(H)
    DG, DH = derived_subgroup(G), derived_subgroup(H)
    if G.n // len(ZG) != H.n // len(ZH) or len(DG) != len(DH):
        return None
    cap = caps().isoclinism
    check_cap(G.n // len(ZG), cap, "central quotient")
    check_cap(len(DG), cap, "derived subgroup")
    QG, _, cG = _central_data(G)
    QH, _, cH = _central_data(H)
    for xi1 in iter_isomorphisms(QG, QH):
        im = np.asarray(xi1.image)
        forced = _forced_map(zip(cG.ravel().tolist(), cH[im[:, None], im[None, :]].ravel().tolist()))
        if forced is None:
            continue
        xi2 = _complete_xi2(G, H, DG, DH, forced)
        if xi2 is not None:
            return GroupIsoclinism(G, H, xi1, xi2)
    return None


def verify_group_isoclinism(c: GroupIsoclinism) -> bool:
    _, _, cG = _central_data(c.G)
    _, _, cH = _central_data(c.H)
    im = np.asarray(c.xi1.image)
    return bool(np.array_equal(c.xi2[cG], cH[im[:, None], im[None, :]]))


def hall_criterion_check(G: FiniteGroup, N) -> Report:
    """G is isoclinic to G/N exactly when N meets G' trivially."""
    N = tuple(sorted(set(int(x) for x in N)))
    rep = Report("hall_criterion")
    if not is_normal(G, N):
        raise NotNormal("N is not a normal subgroup", N)
    Q, _ = quotient(G, N)
    cert = group_isoclinic(G, Q)
    meet = intersect(N, derived_subgroup(G))
    rep.data.update(intersection=list(meet), isoclinic=cert is not None)
    rep.add("isoclinic(G, G/N) iff N meets G' trivially", (cert is not None) == (meet == (0,)), list(meet))
    if cert is not None:
        rep.add("certificate commutes with the commutator maps", verify_group_isoclinism(cert))
    return rep


# ------------------------------------------------------------------ braces


@dataclass(frozen=True, eq=False)
class BraceIsoclinism:
    A: SkewBrace
    B: SkewBrace
    xi1: np.ndarray  # A/Ann(A) -> B/Ann(B)
    xi2: np.ndarray  # over A, defined on A'

    def to_json(self) -> dict:
        DA = commutator_ideal(self.A)
        return {
            "xi1": self.xi1.tolist(),
            "xi2": {"domain": list(DA), "image": [int(self.xi2[a]) for a in DA]},
        }


def _theta_data(A: SkewBrace):
    """Quotient by Ann and both commutator maps on quotient labels (via lifts)."""
    Q, labels = quotient_brace(A, annihilator(A))
    lift = _lifts(labels)
    t, inv = A.add.table, A.add.inv
    u, v = lift[:, None], lift[None, :]
    theta = t[t[t[u, v], inv[u]], inv[v]]  # a b a^-1 b^-1
    theta_star = t[A.lam[u, v], inv[v]]  # lam_a(b) b^-1
    return Q, labels, theta, theta_star


def theta_well_defined(A: SkewBrace) -> bool:
    """Both maps depend only on the classes of a and b modulo Ann(A)."""
    _, labels, theta, theta_star = _theta_data(A)
    t, inv = A.add.table, A.add.inv
    a, b = np.arange(A.n)[:, None], np.arange(A.n)[None, :]
    full = t[t[t[a, b], inv[a]], inv[b]]
    full_star = t[A.lam[a, b], inv[b]]
    la, lb = labels[:, None], labels[None, :]
    return bool(np.array_equal(full, theta[la, lb]) and np.array_equal(full_star, theta_star[la, lb]))


def brace_isoclinic(A: SkewBrace, B: SkewBrace) -> BraceIsoclinism | None:
    annA, annB = annihilator(A), annihilator(B)
    DA, DB = commutator_ideal(A), commutator_ideal(B)
    if A.n // len(annA) != B.n // len(annB) or len(DA) != len(DB):
        return None
    cap = caps().isoclinism
    check_cap(A.n // len(annA), cap, "annihilator quotient")
    check_cap(len(DA), cap, "commutator ideal")
    QA, _, thA, tsA = _theta_data(A)
    QB, _, thB, tsB = _theta_data(B)
    subA, memA = sub_brace(A, DA)
    subB, memB = sub_brace(B, DB)
    posB = np.full(B.n, -1, dtype=np.int64)
    posB[memB] = np.arange(memB.size)

    def circ_ok(img: np.ndarray) -> bool:
        image = posB[img[memA]]
        try:
            make_brace_hom(subA, subB, image)
        except NotBraceHom:
            return False
        return True

    for xi1 in iter_brace_isomorphisms(QA, QB):
        im = np.asarray(xi1.image)
        tgt, tgt_star = thB[im[:, None], im[None, :]], tsB[im[:, None], im[None, :]]
        forced = _forced_map(
            list(zip(thA.ravel().tolist(), tgt.ravel().tolist()))
            + list(zip(tsA.ravel().tolist(), tgt_star.ravel().tolist()))
        )
        if forced is None:
            continue
        xi2 = _complete_xi2(A.add, B.add, DA, DB, forced, circ_ok)
        if xi2 is not None:
            return BraceIsoclinism(A, B, im, xi2)
    return None


def verify_brace_isoclinism(c: BraceIsoclinism) -> bool:
    _, _, thA, tsA = _theta_data(c.A)
    _, _, thB, tsB = _theta_data(c.B)
    im = c.xi1
    return bool(
        np.array_equal(c.xi2[thA], thB[im[:, None], im[None, :]])
        and np.array_equal(c.xi2[tsA], tsB[im[:, None], im[None, :]])
    )


def brace_isoclinism_consequences(A: SkewBrace, B: SkewBrace, cert: BraceIsoclinism) -> Report:
    rep = Report("brace isoclinism consequences")
    rep.add("diagrams commute", verify_brace_isoclinism(cert))
    rep.add("(A, .) isoclinic to (B, .)", group_isoclinic(A.add, B.add) is not None)
    rep.add("(A, o) isoclinic to (B, o)", group_isoclinic(A.circ, B.circ) is not None)
    if A.n == B.n:
        ca, cb = one_dim_rep_count(A), one_dim_rep_count(B)
        rep.add("same number of 1-dimensional representations", ca == cb, (ca, cb))
    return rep


# --------------------------------------------------- lambda-group checks


def _lambda_derived_map(A: SkewBrace, B: SkewBrace, cert: BraceIsoclinism) -> tuple[Report, bool]:
    LA = build_lambda_group(A, "opposite").group
    LB = build_lambda_group(B, "opposite").group
    DA, DB = derived_subgroup(LA), derived_subgroup(LB)
    subA, embA = subgroup_as_group(LA, DA)
    subB, embB = subgroup_as_group(LB, DB)
    posB = np.full(LB.n, -1, dtype=np.int64)
    posB[embB] = np.arange(embB.size)
    nA, nB = A.n, B.n
    a, b = embA // nA, embA % nA
    image = posB[cert.xi2[a] * nB + cert.xi2[b]]
    rep = Report("isocom")
    explicit = False
    if (image >= 0).all():
        try:
            hom = make_hom(subA, subB, image)
            explicit = hom.is_bijective()
        except NotAHom:
            explicit = False
    rep.add("(a, b) -> (xi2(a), xi2(b)) is an isomorphism of derived subgroups", explicit)
    found = find_isomorphism(subA, subB)
    rep.add("derived subgroups of the lambda groups are isomorphic", found is not None)
    return rep, explicit


def isocom_check(A: SkewBrace, B: SkewBrace) -> Report:
    cert = brace_isoclinic(A, B)
    if cert is None:
        return Report("isocom", data={"applicable": False})
    rep, _ = _lambda_derived_map(A, B, cert)
    rep.data["applicable"] = True
    return rep


def condition_center(A: SkewBrace) -> bool:
    L = build_lambda_group(A, "opposite").group
    ann = annihilator(A)
    return center(L) == pairs(A.n, ann, ann)


def condition_ann_meets_derived(A: SkewBrace) -> bool:
    return intersect(annihilator(A), commutator_ideal(A)) == (0,)


def isoclinicsdp_check(A: SkewBrace, B: SkewBrace) -> Report:
    rep = Report("isoclinicsdp")
    cert = brace_isoclinic(A, B)
    if cert is None:
        rep.data["applicable"] = False
        return rep
    c1 = condition_center(A) and condition_center(B)
    c2 = condition_ann_meets_derived(A) and condition_ann_meets_derived(B)
    rep.data.update(applicable=c1 or c2, condition_center=c1, condition_ann_meets_derived=c2)
    if c1 or c2:
        LA = build_lambda_group(A, "opposite").group
        LB = build_lambda_group(B, "opposite").group
        g = group_isoclinic(LA, LB)
        rep.add("lambda groups isoclinic", g is not None)
        if g is not None:
            rep.add("lambda group certificate commutes", verify_group_isoclinism(g))
    return rep


def opposite_pattern_check(G: FiniteGroup, *, lambda_level: bool = True) -> Report:
    """Trivial brace over a nonabelian G against its opposite."""
    A = make_trivial_brace(G)
    B = opposite(A)
    rep = Report("trivial brace vs opposite")
    rep.add("braces not isoclinic", brace_isoclinic(A, B) is None)
    if lambda_level:
        LA = build_lambda_group(A, "opposite").group
        LB = build_lambda_group(B, "opposite").group
        rep.add("lambda groups isomorphic", find_isomorphism(LA, LB) is not None)
    return rep
