"""Immutable finite groups on indexed element sets.

A group is a list of hashable element objects (index 0 is the identity)
together with a product function on those objects.  Small groups get a full
multiplication table; larger ones multiply lazily through the objects.  All
operations are pure and every ordering is deterministic, so reports built on
top of these groups are reproducible.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .config import TABLE_CAP, Caps, default_caps
from .errors import (
    InvalidPermutation,
    NotADivisor,
    NotASubgroup,
    NotNormal,
    OrderCapExceeded,
)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; adequate below the order caps."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primes_of(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n))) if n > 1 else ()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return primes_of(n) == (n,)


def compose_perms(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Function composition p after q: (p*q)(x) = p[q[x]]."""
    return tuple(p[q[x]] for x in range(len(q)))


def invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_cycle_label(p: Sequence[int]) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def close_under_products(
    identity,
    generators: Sequence,
    mult: Callable,
    cap: int,
) -> list:
    """BFS closure of the generators, identity first, discovery order.

    Multiplies on the right by the generators in input order, so the element
    indexing is deterministic for a fixed input.
    """
    elements = [identity]
    index = {identity: 0}
    queue = [identity]
    while queue:
        nxt = []
        for x in queue:
            for g in generators:
                y = mult(x, g)
                if y not in index:
                    if len(elements) >= cap:
                        raise OrderCapExceeded(
                            f"closure exceeds construction cap {cap}"
                        )
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        queue = nxt
    return elements


class FiniteGroup:
    """A finite group over indices 0..order-1 with index 0 the identity."""

    def __init__(
        self,
        elements: Sequence,
        mult_obj: Callable,
        inv_obj: Callable | None = None,
        labels: Sequence[str] | None = None,
        generator_indices: Sequence[int] = (),
        name: str = "group",
    ):
        self._objs = list(elements)
        self.order = len(self._objs)
        if self.order == 0:
            raise ValueError("a group needs at least the identity")
        self._index = {o: i for i, o in enumerate(self._objs)}
        if len(self._index) != self.order:
            raise ValueError("duplicate element objects")
        self._mult_obj = mult_obj
        self._inv_obj = inv_obj
        self._labels = list(labels) if labels is not None else None
        self.generator_indices = tuple(generator_indices)
        self.name = name
        self.prime_set = primes_of(self.order)
        self._table: array | None = None
        self._inverse: array | None = None
        self._lazy_cache: dict[tuple[int, int], int] = {}
        self._orders: list[int] | None = None
        self._classes: list[tuple[int, ...]] | None = None
        self._class_id: list[int] | None = None
        self._gen_seq: tuple[int, ...] | None = None
        self._center: SubgroupHandle | None = None
        self._sylow: dict[int, SubgroupHandle] = {}
        self._aut_cache = None  # filled by the automorphisms module
        if self.order <= TABLE_CAP:
            self._build_table()
        else:
            if inv_obj is None:
                raise ValueError("groups above the table cap need inv_obj")
            self._check_identity_lazy()

    # -- construction ---------------------------------------------------

    @classmethod
    def from_permutations(
        cls,
        degree: int,
        generators: Iterable[Sequence[int]],
        caps: Caps | None = None,
        name: str = "perm-group",
    ) -> "FiniteGroup":
        """Closure of permutation generators under composition."""
        caps = caps or default_caps()
        if degree < 1:
            raise InvalidPermutation("degree must be positive")
        gens = []
        for g in generators:
            t = tuple(g)
            if sorted(t) != list(range(degree)):
                raise InvalidPermutation(
                    f"{list(g)} is not a permutation of 0..{degree - 1}"
                )
            gens.append(t)
        identity = tuple(range(degree))
        elements = close_under_products(
            identity, gens, compose_perms, caps.construction
        )
        index = {o: i for i, o in enumerate(elements)}
        return cls(
            elements,
            compose_perms,
            inv_obj=invert_perm,
            labels=None,
            generator_indices=tuple(index[g] for g in gens),
            name=name,
        )

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str = "table-group",
    ) -> "FiniteGroup":
        """Group given by an explicit multiplication table on 0..n-1."""
        n = len(table)
        rows = [tuple(r) for r in table]

        def mult(i, j):
            return rows[i][j]

        return cls(list(range(n)), mult, labels=labels, name=name)

    def _build_table(self):
        n = self.order
        flat = array("i", bytes(4 * n * n))
        inv = array("i", [-1]) * n
        objs = self._objs
        index = self._index
        mult = self._mult_obj
        for i in range(n):
            base = i * n
            oi = objs[i]
            for j in range(n):
                k = index[mult(oi, objs[j])]
                flat[base + j] = k
                if k == 0:
                    inv[i] = j
        self._table = flat
        self._inverse = inv
        if any(v < 0 for v in inv):
            raise ValueError("element without inverse; not a group")
        for i in range(n):
            if flat[i] != i or flat[i * n] != i:
                raise ValueError("index 0 is not a two-sided identity")

    def _check_identity_lazy(self):
        e = self._objs[0]
        for i in (0, 1, self.order - 1):
            o = self._objs[i]
            if self._mult_obj(e, o) != o or self._mult_obj(o, e) != o:
                raise ValueError("index 0 is not a two-sided identity")

    # -- basic operations -----------------------------------------------

    def multiply(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i * self.order + j]
        key = (i, j)
        k = self._lazy_cache.get(key)
        if k is None:
            k = self._index[self._mult_obj(self._objs[i], self._objs[j])]
            self._lazy_cache[key] = k
        return k

    def inverse(self, i: int) -> int:
        if self._inverse is not None:
            return self._inverse[i]
        return self._index[self._inv_obj(self._objs[i])]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(i), -k)
        acc = 0
        base = i
        while k:
            if k & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            k >>= 1
        return acc

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.multiply(self.multiply(self.inverse(g), x), g)

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        return self.multiply(
            self.multiply(self.inverse(x), self.inverse(y)),
            self.multiply(x, y),
        )

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
            self._orders[0] = 1
        o = self._orders[i]
        if o:
            return o
        n = 1
        x = i
        while x != 0:
            x = self.multiply(x, i)
            n += 1
        self._orders[i] = n
        return n

    def element(self, i: int):
        return self._objs[i]

    def index_of(self, obj) -> int:
        return self._index[obj]

    def label(self, i: int) -> str:
        if self._labels is not None:
            return self._labels[i]
        o = self._objs[i]
        if isinstance(o, tuple) and o and all(isinstance(v, int) for v in o):
            if sorted(o) == list(range(len(o))):
                return perm_cycle_label(o)
        return f"g{i}"

    # -- conjugacy ------------------------------------------------------

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes in order of their least element; identity class first."""
        if self._classes is not None:
            return self._classes
        n = self.order
        cid = [-1] * n
        classes: list[tuple[int, ...]] = []
        for x in range(n):
            if cid[x] >= 0:
                continue
            orbit = {x}
            for g in range(n):
                orbit.add(self.conjugate(x, g))
            members = tuple(sorted(orbit))
            for m in members:
                cid[m] = len(classes)
            classes.append(members)
        self._classes = classes
        self._class_id = cid
        return classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_id[i]

    # -- predicates -----------------------------------------------------

    def is_abelian(self) -> bool:
        gens = self.generating_sequence()
        return all(
            self.multiply(a, b) == self.multiply(b, a)
            for a in gens
            for b in gens
        )

    def is_p_group(self, p: int) -> bool:
        f = factorize(self.order) if self.order > 1 else {}
        return set(f) <= {p}

    def check_associativity(self, sample: int | None = None, seed: int = 0) -> bool:
        """Exhaustive for small orders; deterministic sampling above."""
        n = self.order
        if sample is None:
            triples = (
                (a, b, c)
                for a in range(n)
                for b in range(n)
                for c in range(n)
            )
        else:
            state = seed
            trips = []
            for _ in range(sample):
                state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
                a = state % n
                b = (state >> 20) % n
                c = (state >> 40) % n
                trips.append((a, b, c))
            triples = trips
        return all(
            self.multiply(a, self.multiply(b, c))
            == self.multiply(self.multiply(a, b), c)
            for a, b, c in triples
        )

    # -- subgroup machinery ----------------------------------------------

    def subgroup(self, members: Iterable[int], validate: bool = True) -> "SubgroupHandle":
        return SubgroupHandle(self, members, validate=validate)

    def generated_subgroup(self, seeds: Iterable[int]) -> "SubgroupHandle":
        """Smallest subgroup containing the seeds (empty seeds give {e})."""
        seeds = sorted(set(seeds))
        members = {0}
        queue = [0]
        while queue:
            nxt = []
            for x in queue:
                for s in seeds:
                    y = self.multiply(x, s)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            queue = nxt
        return SubgroupHandle(self, members, validate=False)

    def generating_sequence(self) -> tuple[int, ...]:
        """Greedy generators: each step maximizes the generated subgroup,
        ties broken by lowest index."""
        if self._gen_seq is not None:
            return self._gen_seq
        gens: list[int] = []
        current = self.generated_subgroup(gens)
        while current.order < self.order:
            best_g = -1
            best_size = current.order
            best = current
            for g in range(self.order):
                if current.contains(g):
                    continue
                cand = self.generated_subgroup(gens + [g])
                if cand.order > best_size:
                    best_g, best_size, best = g, cand.order, cand
                    if best_size == self.order:
                        break
            gens.append(best_g)
            current = best
        self._gen_seq = tuple(gens)
        return self._gen_seq

    def centralizer(self, xs: Iterable[int]) -> "SubgroupHandle":
        """Elements commuting with every member of xs."""
        xs = sorted(set(xs))
        members = [
            g
            for g in range(self.order)
            if all(self.multiply(g, x) == self.multiply(x, g) for x in xs)
        ]
        return SubgroupHandle(self, members, validate=False)

    def center(self) -> "SubgroupHandle":
        if self._center is None:
            self._center = self.centralizer(self.generating_sequence())
        return self._center

    def normalizer(self, handle: "SubgroupHandle") -> "SubgroupHandle":
        gens = handle.generators()
        members = []
        for g in range(self.order):
            if all(handle.contains(self.conjugate(s, g)) for s in gens):
                # generators land inside, so the whole subgroup does
                members.append(g)
        return SubgroupHandle(self, members, validate=False)

    # -- element structure -------------------------------------------------

    def primary_decomposition(self, x: int) -> "PrimaryDecomposition":
        """Split x into commuting parts of prime-power order via CRT on <x>."""
        m = self.element_order(x)
        fact = factorize(m) if m > 1 else {}
        parts: dict[int, int] = {}
        for p, a in fact.items():
            pp = p**a
            rest = m // pp
            # exponent e with e = 1 mod p^a and e = 0 mod rest
            e = rest * pow(rest, -1, pp) if rest > 1 else 1
            parts[p] = self.power(x, e)
        return PrimaryDecomposition(element=x, parts=parts)

    def __repr__(self):
        return f"<FiniteGroup {self.name!r} order {self.order}>"


class SubgroupHandle:
    """A subset of parent indices closed under the parent multiplication."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], validate: bool = True):
        self.parent = parent
        self.members = tuple(sorted(set(members))) or (0,)
        self.member_set = frozenset(self.members)
        if 0 not in self.member_set:
            raise NotASubgroup("subgroup must contain the identity")
        if validate:
            for a in self.members:
                if parent.inverse(a) not in self.member_set:
                    raise NotASubgroup(f"inverse of {a} escapes the set")
                for b in self.members:
                    if parent.multiply(a, b) not in self.member_set:
                        raise NotASubgroup(f"product {a}*{b} escapes the set")
        self._group: FiniteGroup | None = None
        self._gens: tuple[int, ...] | None = None
        self._normal: bool | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, i: int) -> bool:
        return i in self.member_set

    def generators(self) -> tuple[int, ...]:
        """A small generating set of the subgroup, in parent indices."""
        if self._gens is None:
            grp, to_parent = self.as_group()
            self._gens = tuple(to_parent[g] for g in grp.generating_sequence())
            if not self._gens:
                self._gens = (0,)
        return self._gens

    def is_normal(self) -> bool:
        if self._normal is None:
            par = self.parent
            self._normal = all(
                par.conjugate(s, g) in self.member_set
                for g in range(par.order)
                for s in self.generators()
            )
        return self._normal

    def is_p_subgroup(self, p: int) -> bool:
        return set(factorize(self.order)) <= {p} if self.order > 1 else True

    def conjugate_by(self, g: int) -> "SubgroupHandle":
        par = self.parent
        return SubgroupHandle(
            par, (par.conjugate(x, g) for x in self.members), validate=False
        )

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """The subgroup as a standalone group plus the index map to the parent."""
        if self._group is None:
            to_parent = self.members
            back = {m: i for i, m in enumerate(to_parent)}
            par = self.parent

            def mult(i, j):
                return back[par.multiply(to_parent[i], to_parent[j])]

            labels = [par.label(m) for m in to_parent]
            self._group = FiniteGroup(
                list(range(self.order)),
                mult,
                labels=labels,
                name=f"{par.name}-sub{self.order}",
            )
            self._to_parent = to_parent
        return self._group, self.members

    def restrict_map(self, images: Sequence[int]) -> tuple[int, ...]:
        """Rewrite a parent index map as a map on subgroup indices.

        Requires the map to send the subgroup onto itself.
        """
        back = {m: i for i, m in enumerate(self.members)}
        out = []
        for m in self.members:
            img = images[m]
            if img not in back:
                raise NotASubgroup(f"map sends {m} outside the subgroup")
            out.append(back[img])
        return tuple(out)

    def key(self) -> tuple[int, ...]:
        return self.members

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupHandle)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"<Subgroup order {self.order} of {self.parent.name!r}>"


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Commuting prime-power parts of one element; keys are primes."""

    element: int
    parts: dict[int, int]


class GroupHom:
    """A homomorphism recorded as an index map source -> target."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int]):
        self.source = source
        self.target = target
        self.images = tuple(images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def validate(self) -> bool:
        if self.images[0] != 0:
            return False
        n = self.source.order
        return all(
            self.images[self.source.multiply(a, b)]
            == self.target.multiply(self.images[a], self.images[b])
            for a in range(n)
            for b in range(n)
        )

    def kernel(self) -> SubgroupHandle:
        return SubgroupHandle(
            self.source,
            (i for i in range(self.source.order) if self.images[i] == 0),
            validate=False,
        )

    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order


def group_from_permutations(
    degree: int,
    generators: Iterable[Sequence[int]],
    caps: Caps | None = None,
) -> FiniteGroup:
    return FiniteGroup.from_permutations(degree, generators, caps=caps)


def subgroup_generated(G: FiniteGroup, seeds: Iterable[int]) -> SubgroupHandle:
    return G.generated_subgroup(seeds)


def quotient_group(G: FiniteGroup, N: SubgroupHandle) -> tuple[FiniteGroup, GroupHom]:
    """Coset group modulo a normal subgroup, with the canonical projection.

    Cosets are ordered by least member, which puts the identity coset at
    index 0.
    """
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal")
    n = G.order
    coset_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if coset_of[i] >= 0:
            continue
        members = sorted(G.multiply(m, i) for m in N.members)
        cid = len(reps)
        for m in members:
            coset_of[m] = cid
        reps.append(members[0])
    k = len(reps)
    table = [
        [coset_of[G.multiply(reps[a], reps[b])] for b in range(k)]
        for a in range(k)
    ]
    labels = [f"{G.label(r)}N" for r in reps]
    Q = FiniteGroup.from_table(table, labels=labels, name=f"{G.name}/N{N.order}")
    return Q, GroupHom(G, Q, coset_of)
