"""Backtracking search for isomorphisms between small groups.

The same engine enumerates Aut(G) (all isomorphisms G -> G) and decides
isomorphism (first hit wins).  A fixed generating sequence of the source is
mapped onto candidate targets filtered by a conjugacy fingerprint; partial
assignments are validated by closing the graph of the would-be homomorphism,
which also proves multiplicativity when the closure completes without
conflict.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .config import Caps, default_caps
from .core import FiniteGroup, GroupHom
from .errors import OrderCapExceeded


def class_fingerprint(G: FiniteGroup, x: int) -> tuple:
    """(order, class size, orders of the prime-power images).

    Invariant under every automorphism, cheap, and canonical.
    """
    cls = G.conjugacy_classes()[G.class_of(x)]
    powers = tuple(G.element_order(G.power(x, p)) for p in G.prime_set)
    return (G.element_order(x), len(cls), powers)


def _fingerprint_census(G: FiniteGroup) -> Counter:
    return Counter(class_fingerprint(G, x) for x in range(G.order))


def _pair_closure(
    G: FiniteGroup,
    H: FiniteGroup,
    gens: tuple[int, ...],
    images: tuple[int, ...],
) -> list[int] | None:
    """Close the relation {(g, h)} under right multiplication.

    Returns the total map on the subgroup generated by ``gens`` (entries -1
    outside it), or None when the relation is not an injective function,
    i.e. the assignment extends to no isomorphism.
    """
    n = G.order
    fwd = [-1] * n
    fwd[0] = 0
    used = [False] * H.order
    used[0] = True
    queue = [0]
    while queue:
        nxt = []
        for x in queue:
            y = fwd[x]
            for g, h in zip(gens, images):
                xg = G.multiply(x, g)
                yh = H.multiply(y, h)
                cur = fwd[xg]
                if cur == -1:
                    if used[yh]:
                        return None
                    fwd[xg] = yh
                    used[yh] = True
                    nxt.append(xg)
                elif cur != yh:
                    return None
        queue = nxt
    return fwd


def iter_isomorphisms(
    G: FiniteGroup,
    H: FiniteGroup,
    caps: Caps | None = None,
    cap_field: str = "isomorphism",
) -> Iterator[tuple[int, ...]]:
    """Yield all isomorphisms G -> H as image tuples, in search order."""
    caps = caps or default_caps()
    cap = getattr(caps, cap_field)
    if min(G.order, H.order) > cap:
        raise OrderCapExceeded(
            f"{cap_field} search needs order <= {cap}, got {G.order}"
        )
    if G.order != H.order:
        return
    if _fingerprint_census(G) != _fingerprint_census(H):
        return
    gens = G.generating_sequence()
    k = len(gens)
    if k == 0:
        yield (0,)
        return
    candidates = [
        [h for h in range(H.order) if class_fingerprint(H, h) == class_fingerprint(G, g)]
        for g in gens
    ]
    chosen = [0] * k

    def extend(level: int) -> Iterator[tuple[int, ...]]:
        for cand in candidates[level]:
            ok = True
            for t in range(level):
                prod_order = G.element_order(G.multiply(gens[t], gens[level]))
                if H.element_order(H.multiply(chosen[t], cand)) != prod_order:
                    ok = False
                    break
            if not ok:
                continue
            chosen[level] = cand
            fwd = _pair_closure(
                G, H, gens[: level + 1], tuple(chosen[: level + 1])
            )
            if fwd is None:
                continue
            if level + 1 == k:
                yield tuple(fwd)
            else:
                yield from extend(level + 1)

    yield from extend(0)


def find_isomorphism(
    G: FiniteGroup, H: FiniteGroup, caps: Caps | None = None
) -> GroupHom | None:
    """A witness isomorphism, or None."""
    for images in iter_isomorphisms(G, H, caps):
        return GroupHom(G, H, images)
    return None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, caps: Caps | None = None) -> bool:
    return find_isomorphism(G, H, caps) is not None


def all_automorphism_images(
    G: FiniteGroup, caps: Caps | None = None
) -> list[tuple[int, ...]]:
    """Every automorphism of G as an image tuple, sorted."""
    return sorted(iter_isomorphisms(G, G, caps, cap_field="automorphism"))


def extend_generator_map(
    G: FiniteGroup,
    H: FiniteGroup,
    gens: tuple[int, ...],
    images: tuple[int, ...],
) -> tuple[int, ...] | None:
    """Total injective homomorphism on <gens> determined by the images,
    or None if the assignment extends to none."""
    fwd = _pair_closure(G, H, gens, images)
    if fwd is None:
        return None
    return tuple(fwd)
