"""Coleman automorphisms of small finite groups.

Core library, verification harness, HTTP service and CLI for computing
Coleman, class-preserving and p-central automorphisms and checking the
structural statements about them on constructed instances.
"""

from .config import Caps, default_caps
from .core import (
    FiniteGroup,
    GroupHom,
    PrimaryDecomposition,
    SubgroupHandle,
    group_from_permutations,
    quotient_group,
    subgroup_generated,
)
from .automorphisms import (
    Automorphism,
    OuterQuotient,
    abelian_invariants,
    aut_c,
    aut_col,
    automorphism_group,
    inner_automorphisms,
    out_c,
    out_c_cap_out_col,
    out_col,
)
from .constructors import build, standard_catalog
from .search import find_isomorphism, is_isomorphic
from .structure import (
    all_sylow_subgroups,
    classify,
    core_subgroups,
    layer,
    normal_subgroups,
    sylow_subgroup,
)

__all__ = [
    "Automorphism",
    "Caps",
    "FiniteGroup",
    "GroupHom",
    "OuterQuotient",
    "PrimaryDecomposition",
    "SubgroupHandle",
    "abelian_invariants",
    "all_sylow_subgroups",
    "aut_c",
    "aut_col",
    "automorphism_group",
    "build",
    "classify",
    "core_subgroups",
    "default_caps",
    "find_isomorphism",
    "group_from_permutations",
    "inner_automorphisms",
    "is_isomorphic",
    "layer",
    "normal_subgroups",
    "out_c",
    "out_c_cap_out_col",
    "out_col",
    "quotient_group",
    "standard_catalog",
    "subgroup_generated",
    "sylow_subgroup",
]

__version__ = "0.1.0"
