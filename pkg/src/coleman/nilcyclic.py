"""Coleman structure of nilpotent-by-(cyclic p-power) groups.

Given G with a nilpotent normal subgroup N and G/N cyclic of order p^n, the
outer Coleman automorphisms are generated by maps that twist each Sylow
subgroup of N by a power of the distinguished p-element x and an element of
a commutator-constrained pool, while fixing x.  This module computes the
presentation data (x, the Sylow subgroups of N, the action exponents r_i and
their inner witnesses h_i), builds the twist maps, enumerates the predicted
complement of the inner automorphisms, and realizes any prescribed finite
abelian group as an outer Coleman group via a metabelian semidirect product.

The predicted complement follows the published formulas literally.  On
abelian N they are exact; tests document a nonabelian instance where the
twist pool admits a map that is a valid automorphism but fails the Coleman
condition on the full Sylow p-subgroup of G, so the checker compares the
prediction against brute force instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import Automorphism
from .config import Caps, default_caps
from .constructors import build
from .core import (
    FiniteGroup,
    GroupHom,
    SubgroupHandle,
    factorize,
    is_prime,
    quotient_group,
)
from .errors import (
    InvalidTwist,
    NotAnAutomorphism,
    NotNilpotent,
    PrimeSearchExhausted,
    QuotientNotCyclicPrimePower,
    SubsetNotClosed,
)
from .structure import is_nilpotent, sylow_subgroup


@dataclass
class NilpotentByCyclicPresentation:
    """Presentation data for G with nilpotent N and G/N = <x-bar> of order p^n."""

    group: FiniteGroup
    nilpotent_base: SubgroupHandle
    x: int
    p: int
    n: int
    sylows: list[SubgroupHandle]  # Sylow subgroups of N, r ascending
    primes: list[int]  # primes of the Sylow subgroups, same order
    r: list[int]
    h: list[int]
    quotient: FiniteGroup
    projection: GroupHom
    coset_exponent: dict[int, int]  # quotient index -> t with coset = x^t N
    centralizer_of_base: SubgroupHandle

    @property
    def x_order(self) -> int:
        return self.group.element_order(self.x)

    def x_power(self, t: int) -> int:
        return self.group.power(self.x, t)

    def p_position(self) -> int | None:
        """Index of the Sylow p-subgroup of N in the sorted list, if any."""
        for i, q in enumerate(self.primes):
            if q == self.p:
                return i
        return None

    def decompose(self, g: int) -> tuple[dict[int, int], int]:
        """Write g = a * x^t with a in N, 0 <= t < p^n; a as prime parts."""
        G = self.group
        t = self.coset_exponent[self.projection(g)]
        a = G.multiply(g, G.inverse(self.x_power(t)))
        return G.primary_decomposition(a).parts, t


def presentation_from(
    G: FiniteGroup, N: SubgroupHandle, caps: Caps | None = None
) -> NilpotentByCyclicPresentation:
    """Extract the presentation data, deterministically.

    x is the p-part of the lowest-index preimage of the lowest-index
    generator of G/N; its image still generates because the quotient is a
    p-group.  Sylow subgroups of N are sorted by r ascending, ties by
    subgroup order then lowest member index.
    """
    caps = caps or default_caps()
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    Ngrp, to_parent = N.as_group()
    if not is_nilpotent(Ngrp):
        raise NotNilpotent("the base subgroup is not nilpotent")
    Q, proj = quotient_group(G, N)
    if Q.order == 1:
        raise QuotientNotCyclicPrimePower("quotient is trivial")
    fact = factorize(Q.order)
    if len(fact) != 1:
        raise QuotientNotCyclicPrimePower(
            f"quotient order {Q.order} is not a prime power"
        )
    [(p, n)] = fact.items()
    qgen = next(
        (i for i in range(Q.order) if Q.element_order(i) == Q.order), None
    )
    if qgen is None:
        raise QuotientNotCyclicPrimePower(f"quotient of order {Q.order} is not cyclic")
    g0 = min(i for i in range(G.order) if proj(i) == qgen)
    x = G.primary_decomposition(g0).parts[p]
    if Q.element_order(proj(x)) != Q.order:
        raise QuotientNotCyclicPrimePower("p-part of the preimage lost generation")

    # coset exponents relative to x-bar
    coset_exponent = {}
    xq = proj(x)
    c = 0
    for t in range(Q.order):
        coset_exponent[c] = t
        c = Q.multiply(c, xq)

    x_order = G.element_order(x)
    centralizer_of_base = G.centralizer(N.generators())

    entries = []
    for q in Ngrp.prime_set:
        Pq_sub = sylow_subgroup(Ngrp, q)
        P = G.subgroup([to_parent[i] for i in Pq_sub.members], validate=False)
        r, h = _action_exponent(G, x, x_order, P)
        entries.append((r, P.order, P.members, q, P, h))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    return NilpotentByCyclicPresentation(
        group=G,
        nilpotent_base=N,
        x=x,
        p=p,
        n=n,
        sylows=[e[4] for e in entries],
        primes=[e[3] for e in entries],
        r=[e[0] for e in entries],
        h=[e[5] for e in entries],
        quotient=Q,
        projection=proj,
        coset_exponent=coset_exponent,
        centralizer_of_base=centralizer_of_base,
    )


def _action_exponent(
    G: FiniteGroup, x: int, x_order: int, P: SubgroupHandle
) -> tuple[int, int]:
    """Smallest r with conj(x^r) = conj(h) on P for some h in P, plus that h.

    h is the lowest-index witness, so it is the identity whenever conj(x^r)
    is trivial on P.
    """
    gens = P.generators()
    for r in range(1, x_order + 1):
        xr = G.power(x, r)
        for h in P.members:
            if all(G.conjugate(s, xr) == G.conjugate(s, h) for s in gens):
                return r, h
    raise RuntimeError("no action exponent found below ord(x); impossible")


@dataclass(frozen=True)
class PhiSpec:
    """Exponents and twists defining one twist automorphism."""

    presentation: NilpotentByCyclicPresentation
    exponents: tuple[int, ...]
    twists: tuple[int, ...]


def validate_twists(spec: PhiSpec) -> None:
    pres = spec.presentation
    G = pres.group
    if len(spec.exponents) != len(pres.sylows) or len(spec.twists) != len(pres.sylows):
        raise InvalidTwist("one exponent and one twist per Sylow subgroup")
    xpn = pres.x_power(pres.p**pres.n)
    for i, (P, w) in enumerate(zip(pres.sylows, spec.twists)):
        if not P.contains(w):
            raise InvalidTwist(f"twist {w} is not in Sylow subgroup {i}")
        if G.commutator(w, xpn) != 0:
            raise InvalidTwist(f"twist {w} does not commute with x^(p^n)")
        for t in range(1, pres.x_order + 1):
            c = G.commutator(pres.x_power(t), G.inverse(w))
            if not pres.centralizer_of_base.contains(c):
                raise InvalidTwist(
                    f"[x^{t}, w^-1] escapes the centralizer of the base for w={w}"
                )
        if spec.exponents[i] < 0:
            raise InvalidTwist("exponents must be non-negative")


def phi_automorphism(spec: PhiSpec) -> Automorphism:
    """The map a_i -> x^-j_i w_i^-1 a_i w_i x^j_i on the Sylow parts, x -> x.

    Twist conditions are validated first; the assembled index map is then
    checked to be a bijective homomorphism, so a failure here signals a bug
    in the presentation rather than bad input.
    """
    validate_twists(spec)
    pres = spec.presentation
    G = pres.group
    conj_by: list[int] = []
    for j, w, P in zip(spec.exponents, spec.twists, pres.sylows):
        conj_by.append(G.multiply(w, pres.x_power(j)))
    prime_to_pos = {q: i for i, q in enumerate(pres.primes)}
    images = []
    for g in range(G.order):
        parts, t = pres.decompose(g)
        img = 0
        for q in sorted(parts):
            a = parts[q]
            pos = prime_to_pos[q]
            img = G.multiply(img, G.conjugate(a, conj_by[pos]))
        images.append(G.multiply(img, pres.x_power(t)))
    if len(set(images)) != G.order:
        raise NotAnAutomorphism("twist map is not a bijection")
    sigma = Automorphism(G, images)
    if not sigma._is_valid():
        raise NotAnAutomorphism("twist map is not a homomorphism")
    return sigma


def d_subgroup(pres: NilpotentByCyclicPresentation, i: int) -> SubgroupHandle:
    """Twist pool D_i: elements of the i-th Sylow subgroup commuting with
    x^(p^n) whose inverse commutators with all x-powers centralize the base.

    Closure is verified rather than assumed; a failure raises with the
    witness pair.
    """
    G = pres.group
    P = pres.sylows[i]
    xpn = pres.x_power(pres.p**pres.n)
    members = []
    for w in P.members:
        if G.commutator(xpn, w) != 0:
            continue
        if all(
            pres.centralizer_of_base.contains(
                G.commutator(pres.x_power(t), G.inverse(w))
            )
            for t in range(1, pres.x_order + 1)
        ):
            members.append(w)
    mset = set(members)
    for a in members:
        if G.inverse(a) not in mset:
            raise SubsetNotClosed(
                f"twist pool {i} is not closed under inverse", witness=(a,)
            )
        for b in members:
            if G.multiply(a, b) not in mset:
                raise SubsetNotClosed(
                    f"twist pool {i} is not closed under products",
                    witness=(a, b),
                )
    return G.subgroup(members, validate=False)


@dataclass
class PredictedComplement:
    """The predicted complement of Inn(G) inside the Coleman automorphisms."""

    presentation: NilpotentByCyclicPresentation
    phi_specs: list[PhiSpec]
    order: int
    invariants: tuple[int, ...] | None  # (r_1 .. r_{k-1}) for abelian bases
    twist_pools: list[SubgroupHandle]
    transversals: list[tuple[int, ...]]


def _coset_transversal(
    G: FiniteGroup, members: tuple[int, ...], modulus: frozenset[int]
) -> tuple[int, ...]:
    """Canonical transversal: ascending scan, skipping covered cosets."""
    covered: set[int] = set()
    reps = []
    for w in members:
        if w in covered:
            continue
        reps.append(w)
        covered.update(G.multiply(w, m) for m in modulus)
    return tuple(reps)


def predicted_complement(
    pres: NilpotentByCyclicPresentation, descending: bool = False
) -> PredictedComplement:
    """Enumerate the predicted outer representatives.

    Exponent j_i ranges over 0..r_i-1 except at the last (largest r)
    position, which is pinned to 0; twists range over a transversal of the
    twist pool modulo Z(P_i) C_{P_i}(<x>) (extended by <h_i> at the Sylow
    p-position).  ``descending`` flips the transversal scan order; outer
    classes should not depend on the choice.
    """
    G = pres.group
    k = len(pres.sylows)
    pools = [d_subgroup(pres, i) for i in range(k)]
    p_pos = pres.p_position()
    transversals = []
    for i, (P, D) in enumerate(zip(pres.sylows, pools)):
        Pgrp, to_parent = P.as_group()
        z_members = {to_parent[m] for m in Pgrp.center().members}
        cx = {m for m in P.members if G.commutator(m, pres.x) == 0}
        modulus_members: set[int] = set()
        for z in z_members:
            for c in cx:
                modulus_members.add(G.multiply(z, c))
        if i == p_pos:
            h = pres.h[i]
            h_pows = {pres.group.power(h, e) for e in range(G.element_order(h))}
            modulus_members = {
                G.multiply(m, hp) for m in modulus_members for hp in h_pows
            }
        inter = frozenset(modulus_members) & set(D.members)
        _check_subgroup(G, inter, i)
        members = D.members if not descending else tuple(reversed(D.members))
        transversals.append(_coset_transversal(G, members, frozenset(inter)))
    ranges = [range(r) for r in pres.r[:-1]] + [range(1)]
    specs = []
    order = 1
    for rng in ranges:
        order *= len(rng)
    for t in transversals:
        order *= len(t)
    js = _product_tuples(ranges)
    ws = _product_tuples([list(t) for t in transversals])
    for j in js:
        for w in ws:
            specs.append(PhiSpec(pres, tuple(j), tuple(w)))
    invariants = None
    Ngrp, _ = pres.nilpotent_base.as_group()
    if Ngrp.is_abelian():
        invariants = tuple(pres.r[:-1])
    return PredictedComplement(
        presentation=pres,
        phi_specs=specs,
        order=order,
        invariants=invariants,
        twist_pools=pools,
        transversals=transversals,
    )


def _check_subgroup(G: FiniteGroup, members: frozenset[int], i: int) -> None:
    for a in members:
        if G.inverse(a) not in members:
            raise SubsetNotClosed(
                f"transversal modulus {i} not inverse-closed", witness=(a,)
            )
        for b in members:
            if G.multiply(a, b) not in members:
                raise SubsetNotClosed(
                    f"transversal modulus {i} not product-closed", witness=(a, b)
                )


def _product_tuples(ranges) -> list[tuple]:
    out = [()]
    for rng in ranges:
        out = [t + (v,) for t in out for v in rng]
    return out


# -- realization of a prescribed abelian outer Coleman group ---------------


def _smallest_prime_mod(modulus: int, exclude: set[int], bound: int) -> int:
    q = 2
    while q <= bound:
        if q % modulus == 1 and q not in exclude and is_prime(q):
            return q
        q += 1
    raise PrimeSearchExhausted(
        f"no prime = 1 mod {modulus} below {bound} outside {sorted(exclude)}"
    )


def _smallest_primitive_root_of_unity(order: int, q: int) -> int:
    """Smallest k whose multiplicative order mod q is exactly ``order``."""
    for k in range(2, q):
        val = 1
        good = True
        for _ in range(order - 1):
            val = (val * k) % q
            if val == 1:
                good = False
                break
        if good and (val * k) % q == 1:
            return k
    raise PrimeSearchExhausted(f"no element of order {order} mod {q}")


def dade_construct(invariants: list[int], caps: Caps | None = None) -> dict:
    """A recipe for a metabelian group whose outer Coleman group is the
    abelian group with the given cyclic invariants.

    Per prime p with exponent list r_1 <= ... <= r_n (duplicating the top
    exponent), the block is (prod C_{q_i}) : C_{p^{r_n}} where q_i is the
    smallest unused prime = 1 mod p^{r_i} and the acting generator conjugates
    the i-th base generator to its k_i-th power for the smallest primitive
    p^{r_i}-th root of unity k_i mod q_i.  Blocks for distinct primes are
    combined by direct product.
    """
    caps = caps or default_caps()
    if not invariants:
        raise ValueError("need at least one cyclic invariant")
    per_prime: dict[int, list[int]] = {}
    for m in invariants:
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"invalid cyclic order {m!r}")
        for p, e in factorize(m).items():
            per_prime.setdefault(p, []).append(e)
    if not per_prime:
        raise ValueError("the trivial group needs no realization")
    blocks = []
    for p in sorted(per_prime):
        exps = sorted(per_prime[p])
        exps.append(exps[-1])
        s = exps[-1]
        used: set[int] = set()
        qs = []
        ks = []
        for e in exps:
            q = _smallest_prime_mod(p**e, used, caps.dade_prime_bound)
            used.add(q)
            qs.append(q)
            ks.append(_smallest_primitive_root_of_unity(p**e, q))
        base_spec = {"construct": "abelian", "invariants": qs}
        base = build(base_spec, caps)
        # x^-1 y_i x = y_i^{k_i}; the multiplication rule applies the acting
        # automorphism directly, so its generator images use k_i^-1
        action = [
            base.power(g, pow(k, -1, q))
            for g, k, q in zip(base.generator_indices, ks, qs)
        ]
        blocks.append(
            {
                "construct": "semidirect",
                "base": base_spec,
                "acting": {"construct": "cyclic", "n": p**s},
                "action": [action],
            }
        )
    if len(blocks) == 1:
        return blocks[0]
    return {"construct": "direct", "factors": blocks}
