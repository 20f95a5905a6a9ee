"""Sylow subgroups, the normal-subgroup lattice and derived invariants."""

from __future__ import annotations

from dataclasses import dataclass

from .config import Caps, default_caps
from .core import FiniteGroup, SubgroupHandle, factorize
from .errors import NotADivisor, OrderCapExceeded


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupHandle:
    """The canonical Sylow p-subgroup.

    Greedy extension inside successive normalizers: while the current
    p-subgroup is not full, some element of its normalizer has p-th power
    inside it and extends it p-fold.  Lowest index wins every choice, so the
    result is deterministic for a fixed group.
    """
    if p not in G.prime_set:
        raise NotADivisor(f"{p} does not divide {G.order}")
    if p in G._sylow:
        return G._sylow[p]
    target = p ** factorize(G.order)[p]
    P = G.generated_subgroup([])
    while P.order < target:
        N = G.normalizer(P)
        extended = False
        for g in N.members:
            if P.contains(g):
                continue
            if P.contains(G.power(g, p)):
                Q = G.generated_subgroup(list(P.members) + [g])
                if Q.order == p * P.order:
                    P = Q
                    extended = True
                    break
        if not extended:  # cannot happen for a correct normalizer
            raise RuntimeError("sylow extension stalled")
    G._sylow[p] = P
    return P


def all_sylow_subgroups(G: FiniteGroup, p: int) -> list[SubgroupHandle]:
    """Every Sylow p-subgroup, as the conjugation orbit of the canonical one."""
    P = sylow_subgroup(G, p)
    seen = {P.members: P}
    for g in range(G.order):
        Q = P.conjugate_by(g)
        if Q.members not in seen:
            seen[Q.members] = Q
    out = [seen[k] for k in sorted(seen)]
    if len(out) % p != 1:
        raise RuntimeError("Sylow count is not 1 mod p; table is corrupt")
    return out


def normal_subgroups(G: FiniteGroup, caps: Caps | None = None) -> list[SubgroupHandle]:
    """All normal subgroups, sorted by (order, members).

    Every normal subgroup is generated by the conjugacy classes it contains,
    so the lattice is the join-closure of the single-class closures.
    """
    caps = caps or default_caps()
    if G.order > caps.subgroup_search:
        raise OrderCapExceeded(
            f"normal subgroup search needs order <= {caps.subgroup_search}"
        )
    atoms: dict[tuple[int, ...], SubgroupHandle] = {}
    trivial = G.generated_subgroup([])
    atoms[trivial.members] = trivial
    for cls in G.conjugacy_classes():
        H = G.generated_subgroup(cls)
        atoms.setdefault(H.members, H)
    found = dict(atoms)
    frontier = list(atoms.values())
    while frontier:
        fresh = []
        for A in frontier:
            for key in list(found):
                B = found[key]
                if A.member_set <= B.member_set or B.member_set <= A.member_set:
                    continue
                J = G.generated_subgroup(set(A.members) | set(B.members))
                if J.members not in found:
                    found[J.members] = J
                    fresh.append(J)
        frontier = fresh
    return sorted(found.values(), key=lambda H: (H.order, H.members))


def minimal_normal_subgroups(G: FiniteGroup, caps: Caps | None = None) -> list[SubgroupHandle]:
    nontrivial = [H for H in normal_subgroups(G, caps) if 1 < H.order]
    out = []
    for H in nontrivial:
        if H.order == G.order and len(nontrivial) > 1:
            continue
        if not any(
            K.order < H.order and K.member_set < H.member_set for K in nontrivial
        ):
            out.append(H)
    return out


@dataclass(frozen=True)
class CoreSubgroups:
    o_p: SubgroupHandle
    o_p_prime: SubgroupHandle
    fitting: SubgroupHandle


def core_subgroups(G: FiniteGroup, p: int, caps: Caps | None = None) -> CoreSubgroups:
    """O_p(G), O_{p'}(G) and the Fitting subgroup.

    A prime not dividing |G| is fine: O_p is then trivial and O_{p'}
    is the largest normal subgroup.
    """
    normals = normal_subgroups(G, caps)
    o_p = max(
        (H for H in normals if H.is_p_subgroup(p)),
        key=lambda H: H.order,
    )
    o_pp = max(
        (H for H in normals if H.order % p != 0),
        key=lambda H: H.order,
    )
    fit_members: set[int] = {0}
    for q in G.prime_set:
        o_q = max(
            (H for H in normals if H.is_p_subgroup(q)),
            key=lambda H: H.order,
        )
        fit_members |= set(o_q.members)
    fitting = G.generated_subgroup(fit_members)
    return CoreSubgroups(o_p=o_p, o_p_prime=o_pp, fitting=fitting)


def fitting_subgroup(G: FiniteGroup, caps: Caps | None = None) -> SubgroupHandle:
    p = G.prime_set[0] if G.prime_set else 2
    return core_subgroups(G, p, caps).fitting


def commutator_subgroup(G: FiniteGroup) -> SubgroupHandle:
    seeds = {
        G.commutator(a, b) for a in range(G.order) for b in range(G.order)
    }
    return G.generated_subgroup(seeds)


def is_perfect(G: FiniteGroup) -> bool:
    return commutator_subgroup(G).order == G.order


def is_quasisimple(G: FiniteGroup, caps: Caps | None = None) -> bool:
    """Perfect and simple modulo its center."""
    from .core import quotient_group

    if G.order == 1 or not is_perfect(G):
        return False
    Q, _ = quotient_group(G, G.center())
    return is_simple(Q, caps)


def is_simple(G: FiniteGroup, caps: Caps | None = None) -> bool:
    if G.order == 1:
        return False
    return len(normal_subgroups(G, caps)) == 2


def _components(G: FiniteGroup, caps: Caps, memo: dict) -> list[frozenset[int]]:
    """Subnormal quasisimple subgroups, as member sets of G."""
    out: dict[frozenset[int], None] = {}
    for M in normal_subgroups(G, caps):
        if M.order in (1, G.order):
            continue
        sub, to_parent = M.as_group()
        key = M.members
        if key not in memo:
            memo[key] = [
                frozenset(to_parent[i] for i in comp)
                for comp in _components(sub, caps, {})
            ]
        for comp in memo[key]:
            out.setdefault(comp)
    if is_quasisimple(G, caps):
        out.setdefault(frozenset(range(G.order)))
    return list(out)


def layer(G: FiniteGroup, caps: Caps | None = None) -> SubgroupHandle:
    """E(G): the product of all subnormal quasisimple subgroups."""
    caps = caps or default_caps()
    comps = _components(G, caps, {})
    seeds: set[int] = set()
    for c in comps:
        seeds |= c
    return G.generated_subgroup(seeds)


@dataclass(frozen=True)
class GroupFlags:
    is_abelian: bool
    is_nilpotent: bool
    is_simple: bool
    p_group_prime: int | None  # the prime when the group is a p-group


def is_nilpotent(G: FiniteGroup) -> bool:
    """All Sylow subgroups normal."""
    return all(sylow_subgroup(G, p).is_normal() for p in G.prime_set)


def classify(G: FiniteGroup, caps: Caps | None = None) -> GroupFlags:
    abelian = G.is_abelian()
    p_prime = G.prime_set[0] if len(G.prime_set) == 1 else None
    return GroupFlags(
        is_abelian=abelian,
        is_nilpotent=abelian or is_nilpotent(G),
        is_simple=is_simple(G, caps),
        p_group_prime=p_prime,
    )


def chief_factor_orders(G: FiniteGroup, caps: Caps | None = None) -> list[int]:
    """Factor orders along one chief series.

    Each step ascends to a normal subgroup of G minimal over the current
    one; the factor multiset is series-independent, so one series is enough
    to decide which simple groups appear as chief factors.
    """
    normals = normal_subgroups(G, caps)
    current = normals[0]
    orders = []
    while current.order < G.order:
        above = [
            H
            for H in normals
            if current.order < H.order and current.member_set < H.member_set
        ]
        step = min(
            (
                H
                for H in above
                if not any(
                    current.order < K.order < H.order
                    and current.member_set < K.member_set < H.member_set
                    for K in above
                )
            ),
            key=lambda H: (H.order, H.members),
        )
        orders.append(step.order // current.order)
        current = step
    return orders


def has_cyclic_chief_factor(G: FiniteGroup, p: int, caps: Caps | None = None) -> bool:
    """Whether C_p appears as a chief factor (factor of order exactly p)."""
    return p in chief_factor_orders(G, caps)
