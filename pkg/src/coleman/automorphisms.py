"""Automorphism enumeration and classification.

An automorphism acts on element indices; the product convention is
"apply left factor first", which makes g -> conj(g) a homomorphism from the
group into its automorphism group.  Classification follows the standard
definitions: class-preserving (every conjugacy class fixed setwise), Coleman
(agrees with a conjugation on every Sylow subgroup), p-central (fixes some
Sylow p-subgroup elementwise).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .config import Caps, default_caps
from .core import FiniteGroup, SubgroupHandle, factorize
from .errors import NotADivisor, NotAnAutomorphism
from .search import all_automorphism_images
from .structure import all_sylow_subgroups, sylow_subgroup


class Automorphism:
    """A multiplication-preserving bijection on element indices."""

    __slots__ = ("group", "images", "_inner_witness", "_flags")

    def __init__(self, group: FiniteGroup, images: Sequence[int], check: bool = False):
        self.group = group
        self.images = tuple(images)
        self._inner_witness: int | None | bool = False  # False = not computed
        self._flags: dict = {}
        if check and not self._is_valid():
            raise NotAnAutomorphism("images do not define an automorphism")

    def _is_valid(self) -> bool:
        G, im = self.group, self.images
        if len(im) != G.order or im[0] != 0 or len(set(im)) != G.order:
            return False
        return all(
            im[G.multiply(a, b)] == G.multiply(im[a], im[b])
            for a in range(G.order)
            for b in range(G.order)
        )

    @classmethod
    def identity(cls, group: FiniteGroup) -> "Automorphism":
        return cls(group, range(group.order))

    @classmethod
    def conjugation(cls, group: FiniteGroup, g: int) -> "Automorphism":
        """x -> g^-1 x g."""
        return cls(group, (group.conjugate(x, g) for x in range(group.order)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self followed by other."""
        return Automorphism(
            self.group, (other.images[y] for y in self.images)
        )

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Automorphism(self.group, inv)

    def order(self) -> int:
        n = 1
        cur = self
        ident = tuple(range(self.group.order))
        while cur.images != ident:
            cur = cur.compose(self)
            n += 1
        return n

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    # -- classification ---------------------------------------------------

    def agrees_with_conjugation_on(self, members: Iterable[int], g: int) -> bool:
        G = self.group
        return all(self.images[m] == G.conjugate(m, g) for m in members)

    def _conjugation_witness(self, members: Sequence[int]) -> int | None:
        """Lowest g with self = conj(g) on the given members."""
        G = self.group
        for g in range(G.order):
            if self.agrees_with_conjugation_on(members, g):
                return g
        return None

    def inner_witness(self) -> int | None:
        if self._inner_witness is False:
            gens = self.group.generating_sequence() or (0,)
            w = self._conjugation_witness(gens)
            self._inner_witness = w
        return self._inner_witness

    def is_inner(self) -> bool:
        return self.inner_witness() is not None

    def is_class_preserving(self) -> bool:
        if "class_preserving" not in self._flags:
            G = self.group
            self._flags["class_preserving"] = all(
                G.class_of(self.images[x]) == G.class_of(x)
                for x in range(G.order)
            )
        return self._flags["class_preserving"]

    def coleman_witnesses(self) -> dict[int, int] | None:
        """Per prime p, a g with self = conj(g) on the canonical Sylow
        p-subgroup; None when some prime has no witness."""
        if "coleman" not in self._flags:
            G = self.group
            out: dict[int, int] = {}
            for p in G.prime_set:
                P = sylow_subgroup(G, p)
                w = self._conjugation_witness(P.generators())
                if w is None:
                    out = None
                    break
                out[p] = w
            self._flags["coleman"] = out
        return self._flags["coleman"]

    def is_coleman(self) -> bool:
        return self.coleman_witnesses() is not None

    def is_p_central(self, p: int) -> bool:
        """Fixes some Sylow p-subgroup elementwise."""
        if p not in self.group.prime_set:
            raise NotADivisor(f"{p} does not divide {self.group.order}")
        key = ("p_central", p)
        if key not in self._flags:
            self._flags[key] = any(
                all(self.images[m] == m for m in P.generators())
                for P in all_sylow_subgroups(self.group, p)
            )
        return self._flags[key]

    def p_central_primes(self) -> tuple[int, ...]:
        return tuple(p for p in self.group.prime_set if self.is_p_central(p))

    def restrict(self, handle: SubgroupHandle) -> "Automorphism":
        """The induced automorphism of a setwise-invariant subgroup."""
        sub, _ = handle.as_group()
        return Automorphism(sub, handle.restrict_map(self.images))

    def fixes_pointwise(self, members: Iterable[int]) -> bool:
        return all(self.images[m] == m for m in members)

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and other.group is self.group
            and other.images == self.images
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"<Automorphism of {self.group.name!r}>"


def automorphism_group(G: FiniteGroup, caps: Caps | None = None) -> list[Automorphism]:
    """Complete list of automorphisms, sorted by image tuple; cached on G."""
    if G._aut_cache is None:
        caps = caps or default_caps()
        G._aut_cache = [
            Automorphism(G, im) for im in all_automorphism_images(G, caps)
        ]
    return G._aut_cache


def inner_automorphisms(G: FiniteGroup) -> list[Automorphism]:
    """One automorphism per coset of the center, by ascending witness."""
    out = []
    seen = set()
    for g in range(G.order):
        sigma = Automorphism.conjugation(G, g)
        if sigma.images not in seen:
            seen.add(sigma.images)
            sigma._inner_witness = g
            out.append(sigma)
    return out


def aut_col(G: FiniteGroup, caps: Caps | None = None) -> list[Automorphism]:
    return [s for s in automorphism_group(G, caps) if s.is_coleman()]


def aut_c(G: FiniteGroup, caps: Caps | None = None) -> list[Automorphism]:
    return [s for s in automorphism_group(G, caps) if s.is_class_preserving()]


def aut_c_and_col(G: FiniteGroup, caps: Caps | None = None) -> list[Automorphism]:
    return [
        s
        for s in automorphism_group(G, caps)
        if s.is_coleman() and s.is_class_preserving()
    ]


class OuterQuotient:
    """A subgroup of Aut(G) containing Inn(G), modulo Inn(G).

    Keeps one canonical representative per coset (least image tuple) and the
    coset multiplication table as a FiniteGroup whose identity is the coset
    of the inner automorphisms.
    """

    def __init__(self, ambient: list[Automorphism], name: str):
        self.ambient = ambient
        self.name = name
        reps: list[Automorphism] = []
        for sigma in sorted(ambient, key=lambda s: s.images):
            if not any(
                sigma.compose(rho.inverse()).is_inner() for rho in reps
            ):
                reps.append(sigma)
        # identity coset first, the others keep their sorted order
        reps.sort(key=lambda s: (not s.is_inner(), s.images))
        self.representatives = reps
        k = len(reps)
        table = []
        for a in range(k):
            row = []
            for b in range(k):
                prod = reps[a].compose(reps[b])
                row.append(self._coset_index(prod))
            table.append(row)
        self.cosets = FiniteGroup.from_table(
            table,
            labels=[f"[{i}]" for i in range(k)],
            name=name,
        )

    def _coset_index(self, sigma: Automorphism) -> int:
        for i, rho in enumerate(self.representatives):
            if sigma.compose(rho.inverse()).is_inner():
                return i
        raise NotAnAutomorphism("ambient list is not closed modulo inners")

    @property
    def order(self) -> int:
        return len(self.representatives)

    def is_trivial(self) -> bool:
        return self.order == 1

    def abelian_invariants(self) -> list[int] | None:
        if not self.cosets.is_abelian():
            return None
        return abelian_invariants(self.cosets)

    def coset_table(self) -> list[list[int]]:
        k = self.cosets.order
        return [
            [self.cosets.multiply(a, b) for b in range(k)] for a in range(k)
        ]


def out_col(G: FiniteGroup, caps: Caps | None = None) -> OuterQuotient:
    return OuterQuotient(aut_col(G, caps), name=f"out_col({G.name})")


def out_c(G: FiniteGroup, caps: Caps | None = None) -> OuterQuotient:
    return OuterQuotient(aut_c(G, caps), name=f"out_c({G.name})")


def out_c_cap_out_col(G: FiniteGroup, caps: Caps | None = None) -> OuterQuotient:
    return OuterQuotient(aut_c_and_col(G, caps), name=f"out_c_col({G.name})")


def _diagonalize(mat: list[list[int]], n: int) -> list[int]:
    """Diagonal of an integer matrix after row/column gcd elimination.

    Matrices here are tiny (relations of outer quotients), so the plain
    euclidean sweep is plenty.
    """
    diag: list[int] = []
    top = 0
    col = 0
    while top < len(mat) and col < n:
        pivot = None
        for i in range(top, len(mat)):
            for j in range(col, n):
                if mat[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        mat[top], mat[pi] = mat[pi], mat[top]
        if pj != col:
            for row in mat:
                row[col], row[pj] = row[pj], row[col]
        while True:
            for i in range(top + 1, len(mat)):
                while mat[i][col]:
                    q = mat[i][col] // mat[top][col]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col]:
                        mat[top], mat[i] = mat[i], mat[top]
            for j in range(col + 1, n):
                while mat[top][j]:
                    q = mat[top][j] // mat[top][col]
                    for row in mat:
                        row[j] -= q * row[col]
                    if mat[top][j]:
                        for row in mat:
                            row[col], row[j] = row[j], row[col]
            if all(
                mat[i][col] == 0 for i in range(top + 1, len(mat))
            ) and all(mat[top][j] == 0 for j in range(col + 1, n)):
                break
        diag.append(abs(mat[top][col]))
        top += 1
        col += 1
    return diag


def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... of an abelian group.

    Built by gcd reduction of the relation matrix e_a + e_b = e_{a*b} over
    the full element set; any diagonal presentation is then folded into a
    divisibility chain with gcd/lcm swaps.
    """
    if G.order == 1:
        return []
    n = G.order
    rows = []
    seen = set()
    for a in range(n):
        for b in range(a, n):
            row = [0] * n
            row[a] += 1
            row[b] += 1
            row[G.multiply(a, b)] -= 1
            key = tuple(row)
            if key not in seen and any(row):
                seen.add(key)
                rows.append(row)
    row = [0] * n
    row[0] = 1
    rows.append(row)  # the identity generator is a relation
    diag = [d for d in _diagonalize(rows, n) if d != 0]
    diag.sort()
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g = math.gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
        diag.sort()
    return [d for d in diag if d > 1]
