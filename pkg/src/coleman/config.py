"""Order caps that keep worst-case searches tractable at desk scale.

The caps are artifact policy, not mathematics: the underlying theory has no
size bounds.  ``COLEMAN_MAX_ORDER`` in the environment overrides the
automorphism/isomorphism search cap, which is the binding one in practice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

# Above this order the multiplication table is not materialized and products
# are computed lazily from the underlying element objects.
TABLE_CAP = 4096

ENV_MAX_ORDER = "COLEMAN_MAX_ORDER"


@dataclass(frozen=True)
class Caps:
    construction: int = 20000       # closure size during group construction
    automorphism: int = 512         # |G| bound for Aut(G) enumeration
    isomorphism: int = 512          # min(|G|,|H|) bound for isomorphism search
    subgroup_search: int = 2000     # |G| bound for normal-subgroup enumeration
    dade_prime_bound: int = 100000  # trial-division bound for prime search

    def with_max_order(self, max_order: int | None) -> "Caps":
        if max_order is None:
            return self
        return replace(self, automorphism=max_order, isomorphism=max_order)


def default_caps() -> Caps:
    caps = Caps()
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw:
        caps = caps.with_max_order(int(raw))
    return caps
