"""Group construction from serializable recipes.

Recipe JSON, with exact keys:

    {"construct": "perm", "degree": n, "generators": [[...0-indexed images...]]}
    {"construct": "cyclic", "n": k}
    {"construct": "abelian", "invariants": [n1, n2, ...]}
    {"construct": "symmetric" | "alternating" | "dihedral", "n": k}
        (dihedral n = total order, even)
    {"construct": "direct", "factors": [spec, ...]}
    {"construct": "semidirect", "base": spec, "acting": spec,
     "action": [[base-generator-images per acting generator]]}
    {"construct": "wreath", "base": spec, "top": spec}
    {"construct": "holomorph", "base": spec}

The semidirect multiplication is (a, b)(a', b') = (a * b(a'), b b'), so an
action entry lists, for one acting generator, the images of the base group's
defining generators under the automorphism that the multiplication rule
applies.  Wreath products use the regular action of the top group on the
coordinate set; holomorphs act by evaluating automorphisms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .automorphisms import automorphism_group
from .config import Caps, default_caps
from .core import FiniteGroup, SubgroupHandle, close_under_products
from .errors import InvalidAction, InvalidSpec, OrderCapExceeded
from .search import extend_generator_map

CONSTRUCTS = (
    "perm",
    "cyclic",
    "abelian",
    "symmetric",
    "alternating",
    "dihedral",
    "direct",
    "semidirect",
    "wreath",
    "holomorph",
)


@dataclass
class BuildInfo:
    """Distinguished subgroups recorded while constructing a group."""

    spec: dict
    base: SubgroupHandle | None = None
    acting: SubgroupHandle | None = None
    copies: list[SubgroupHandle] = field(default_factory=list)


def canonical_spec(spec: dict) -> str:
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


_BUILD_CACHE: dict[str, FiniteGroup] = {}


def build(spec: dict, caps: Caps | None = None) -> FiniteGroup:
    """Construct the group described by the recipe; results are cached."""
    caps = caps or default_caps()
    if not isinstance(spec, dict) or "construct" not in spec:
        raise InvalidSpec("spec must be an object with a 'construct' key")
    key = canonical_spec(spec)
    if key in _BUILD_CACHE:
        return _BUILD_CACHE[key]
    kind = spec["construct"]
    if kind not in CONSTRUCTS:
        raise InvalidSpec(f"unknown construct {kind!r}")
    G = _BUILDERS[kind](spec, caps)
    if not hasattr(G, "build_info"):
        G.build_info = BuildInfo(spec=spec)
    _BUILD_CACHE[key] = G
    return G


def _require(spec: dict, key: str, typ) -> object:
    if key not in spec:
        raise InvalidSpec(f"{spec.get('construct')} spec needs {key!r}")
    val = spec[key]
    if not isinstance(val, typ):
        raise InvalidSpec(f"{key!r} must be {typ}")
    return val


def _build_perm(spec: dict, caps: Caps) -> FiniteGroup:
    degree = _require(spec, "degree", int)
    gens = _require(spec, "generators", list)
    return FiniteGroup.from_permutations(degree, gens, caps=caps, name="perm")


def _cycle(n: int) -> tuple[int, ...]:
    return tuple((i + 1) % n for i in range(n))


def _build_cyclic(spec: dict, caps: Caps) -> FiniteGroup:
    n = _require(spec, "n", int)
    if n < 1:
        raise InvalidSpec("cyclic order must be positive")
    gens = [] if n == 1 else [_cycle(n)]
    return FiniteGroup.from_permutations(max(n, 1), gens, caps=caps, name=f"C{n}")


def _build_abelian(spec: dict, caps: Caps) -> FiniteGroup:
    invs = [k for k in _require(spec, "invariants", list) if k != 1]
    if any(not isinstance(k, int) or k < 1 for k in invs):
        raise InvalidSpec("abelian invariants must be positive integers")
    if not invs:
        return _build_cyclic({"construct": "cyclic", "n": 1}, caps)
    degree = sum(invs)
    gens = []
    offset = 0
    for k in invs:
        block = list(range(degree))
        for i in range(k):
            block[offset + i] = offset + (i + 1) % k
        gens.append(tuple(block))
        offset += k
    name = "x".join(f"C{k}" for k in invs)
    return FiniteGroup.from_permutations(degree, gens, caps=caps, name=name)


def _build_symmetric(spec: dict, caps: Caps) -> FiniteGroup:
    n = _require(spec, "n", int)
    if n < 1:
        raise InvalidSpec("symmetric degree must be positive")
    if n == 1:
        return FiniteGroup.from_permutations(1, [], caps=caps, name="S1")
    swap = tuple([1, 0] + list(range(2, n)))
    gens = [swap] if n == 2 else [swap, _cycle(n)]
    return FiniteGroup.from_permutations(n, gens, caps=caps, name=f"S{n}")


def _build_alternating(spec: dict, caps: Caps) -> FiniteGroup:
    n = _require(spec, "n", int)
    if n < 1:
        raise InvalidSpec("alternating degree must be positive")
    if n <= 2:
        return FiniteGroup.from_permutations(max(n, 1), [], caps=caps, name=f"A{n}")
    gens = []
    for k in range(2, n):
        cyc = list(range(n))
        cyc[0], cyc[1], cyc[k] = cyc[1], cyc[k], cyc[0]
        gens.append(tuple(cyc))
    return FiniteGroup.from_permutations(n, gens, caps=caps, name=f"A{n}")


def _build_dihedral(spec: dict, caps: Caps) -> FiniteGroup:
    n = _require(spec, "n", int)
    if n < 2 or n % 2 != 0:
        raise InvalidSpec("dihedral order must be an even integer >= 2")
    m = n // 2
    if m == 1:
        return _build_cyclic({"construct": "cyclic", "n": 2}, caps)
    if m == 2:
        return _build_abelian({"construct": "abelian", "invariants": [2, 2]}, caps)
    rotation = _cycle(m)
    reflection = tuple((m - i) % m for i in range(m))
    return FiniteGroup.from_permutations(
        m, [rotation, reflection], caps=caps, name=f"D{n}"
    )


def _pair_mult_factory(base, acting, act_maps):
    base_mult = base.multiply
    act_mult = acting.multiply

    def mult(x, y):
        a1, b1 = x
        a2, b2 = y
        return (base_mult(a1, act_maps[b1][a2]), act_mult(b1, b2))

    return mult


def _pair_inv_factory(base, acting, act_maps):
    def inv(x):
        a, b = x
        bi = acting.inverse(b)
        return (act_maps[bi][base.inverse(a)], bi)

    return inv


def _semidirect_core(
    base: FiniteGroup,
    acting: FiniteGroup,
    act_maps: list[tuple[int, ...]],
    caps: Caps,
    name: str,
    spec: dict,
) -> FiniteGroup:
    """Pairs (a, b) with (a, b)(a', b') = (a * act[b](a'), b b')."""
    mult = _pair_mult_factory(base, acting, act_maps)
    inv = _pair_inv_factory(base, acting, act_maps)
    gens = [(g, 0) for g in base.generator_indices] + [
        (0, h) for h in acting.generator_indices
    ]
    elements = close_under_products((0, 0), gens, mult, caps.construction)
    if len(elements) != base.order * acting.order:
        raise InvalidAction(
            "semidirect closure does not reach |base| * |acting| elements"
        )
    labels = [f"({base.label(a)};{acting.label(b)})" for a, b in elements]
    index = {o: i for i, o in enumerate(elements)}
    G = FiniteGroup(
        elements,
        mult,
        inv_obj=inv,
        labels=labels,
        generator_indices=tuple(index[g] for g in gens),
        name=name,
    )
    G.build_info = BuildInfo(
        spec=spec,
        base=G.subgroup(
            (i for i, (a, b) in enumerate(elements) if b == 0), validate=False
        ),
        acting=G.subgroup(
            (i for i, (a, b) in enumerate(elements) if a == 0), validate=False
        ),
    )
    return G


def _generator_map_to_automorphism(base: FiniteGroup, images: list[int]) -> tuple[int, ...]:
    if len(images) != len(base.generator_indices):
        raise InvalidAction(
            f"action entry needs {len(base.generator_indices)} generator images"
        )
    for i in images:
        if not isinstance(i, int) or not 0 <= i < base.order:
            raise InvalidAction(f"generator image {i!r} is not an element index")
    fwd = extend_generator_map(
        base, base, base.generator_indices, tuple(images)
    )
    if fwd is None or -1 in fwd:
        raise InvalidAction("generator images do not define an automorphism")
    return fwd


def _extend_action(
    acting: FiniteGroup, gen_maps: list[tuple[int, ...]], base_order: int
) -> list[tuple[int, ...]]:
    """Action maps for every acting element, BFS along generator words.

    Rediscovering an element with a different map means the assignment is
    not a homomorphism into Aut(base).
    """
    identity = tuple(range(base_order))
    if not gen_maps:
        return [identity] * acting.order
    maps: list[tuple[int, ...] | None] = [None] * acting.order
    maps[0] = identity
    queue = [0]
    while queue:
        nxt = []
        for b in queue:
            mb = maps[b]
            for t, g in enumerate(acting.generator_indices):
                b2 = acting.multiply(b, g)
                m2 = tuple(mb[v] for v in gen_maps[t])
                if maps[b2] is None:
                    maps[b2] = m2
                    nxt.append(b2)
                elif maps[b2] != m2:
                    raise InvalidAction(
                        "action does not respect the acting group's relations"
                    )
        queue = nxt
    return maps  # type: ignore[return-value]


def _build_semidirect(spec: dict, caps: Caps) -> FiniteGroup:
    base = build(_require(spec, "base", dict), caps)
    acting = build(_require(spec, "acting", dict), caps)
    action = _require(spec, "action", list)
    if len(action) != len(acting.generator_indices):
        raise InvalidAction(
            f"action needs one entry per acting generator "
            f"({len(acting.generator_indices)}), got {len(action)}"
        )
    gen_maps = [_generator_map_to_automorphism(base, entry) for entry in action]
    act_maps = _extend_action(acting, gen_maps, base.order)
    name = f"{base.name}:{acting.name}"
    return _semidirect_core(base, acting, act_maps, caps, name, spec)


def _build_direct(spec: dict, caps: Caps) -> FiniteGroup:
    factor_specs = _require(spec, "factors", list)
    if not factor_specs:
        return _build_cyclic({"construct": "cyclic", "n": 1}, caps)
    factors = [build(fs, caps) for fs in factor_specs]
    return _direct_of_groups(factors, caps, spec)


def _direct_of_groups(
    factors: list[FiniteGroup], caps: Caps, spec: dict
) -> FiniteGroup:
    k = len(factors)

    def mult(x, y):
        return tuple(f.multiply(a, b) for f, a, b in zip(factors, x, y))

    def inv(x):
        return tuple(f.inverse(a) for f, a in zip(factors, x))

    identity = (0,) * k
    gens = []
    for pos, f in enumerate(factors):
        for g in f.generator_indices:
            t = list(identity)
            t[pos] = g
            gens.append(tuple(t))
    elements = close_under_products(identity, gens, mult, caps.construction)
    index = {o: i for i, o in enumerate(elements)}
    labels = [
        "(" + ",".join(f.label(a) for f, a in zip(factors, obj)) + ")"
        for obj in elements
    ]
    name = "x".join(f.name for f in factors)
    G = FiniteGroup(
        elements,
        mult,
        inv_obj=inv,
        labels=labels,
        generator_indices=tuple(index[g] for g in gens),
        name=name,
    )
    copies = []
    for pos in range(k):
        copies.append(
            G.subgroup(
                (
                    i
                    for i, obj in enumerate(elements)
                    if all(v == 0 for j, v in enumerate(obj) if j != pos)
                ),
                validate=False,
            )
        )
    G.build_info = BuildInfo(spec=spec, copies=copies)
    return G


def _build_wreath(spec: dict, caps: Caps) -> FiniteGroup:
    base = build(_require(spec, "base", dict), caps)
    top = build(_require(spec, "top", dict), caps)
    k = top.order
    if base.order**k * k > caps.construction:
        raise OrderCapExceeded(
            f"wreath order {base.order ** k * k} exceeds cap {caps.construction}"
        )
    power = _direct_of_groups([base] * k, caps, {"construct": "direct"})
    # top element h moves coordinate i to h*i (regular action); as a map on
    # power elements: result[j] = t[h^-1 * j]
    act_maps = []
    for h in range(k):
        hinv = top.inverse(h)
        perm = [top.multiply(hinv, j) for j in range(k)]
        images = []
        for obj in (power.element(i) for i in range(power.order)):
            images.append(power.index_of(tuple(obj[perm[j]] for j in range(k))))
        act_maps.append(tuple(images))
    name = f"{base.name}wr{top.name}"
    G = _semidirect_core(power, top, act_maps, caps, name, spec)
    # coordinate embeddings of the base copies, as subgroups of the wreath
    elements = [G.element(i) for i in range(G.order)]
    copies = []
    for pos in range(k):
        copies.append(
            G.subgroup(
                (
                    i
                    for i, (a, b) in enumerate(elements)
                    if b == 0
                    and all(
                        v == 0
                        for j, v in enumerate(power.element(a))
                        if j != pos
                    )
                ),
                validate=False,
            )
        )
    G.build_info.copies = copies
    return G


def _build_holomorph(spec: dict, caps: Caps) -> FiniteGroup:
    base = build(_require(spec, "base", dict), caps)
    auts = automorphism_group(base, caps)
    identity = tuple(range(base.order))
    tuples = sorted(a.images for a in auts)
    tuples.remove(identity)
    tuples.insert(0, identity)

    def compose(s, t):
        return tuple(s[t[x]] for x in range(base.order))

    def invert(s):
        out = [0] * len(s)
        for i, j in enumerate(s):
            out[j] = i
        return tuple(out)

    acting = FiniteGroup(
        tuples,
        compose,
        inv_obj=invert,
        labels=[f"a{i}" for i in range(len(tuples))],
        generator_indices=(),
        name=f"Aut({base.name})",
    )
    acting.generator_indices = acting.generating_sequence()
    act_maps = [tuples[i] for i in range(acting.order)]
    name = f"Hol({base.name})"
    return _semidirect_core(base, acting, act_maps, caps, name, spec)


_BUILDERS = {
    "perm": _build_perm,
    "cyclic": _build_cyclic,
    "abelian": _build_abelian,
    "symmetric": _build_symmetric,
    "alternating": _build_alternating,
    "dihedral": _build_dihedral,
    "direct": _build_direct,
    "semidirect": _build_semidirect,
    "wreath": _build_wreath,
    "holomorph": _build_holomorph,
}


# -- action helpers used by the catalog and the realization construction ----


def power_action(base_spec: dict, exponents: list[int], caps: Caps | None = None) -> list[int]:
    """Images g_i -> g_i^{e_i} of the base generators, as element indices."""
    base = build(base_spec, caps)
    if len(exponents) != len(base.generator_indices):
        raise InvalidSpec("one exponent per base generator")
    return [
        base.power(g, e) for g, e in zip(base.generator_indices, exponents)
    ]


def inversion_action(base_spec: dict, caps: Caps | None = None) -> list[int]:
    base = build(base_spec, caps)
    return [base.inverse(g) for g in base.generator_indices]


# -- the regression catalog --------------------------------------------------


def _q8_spec() -> dict:
    # left-multiplication permutations of i and j on (1, i, j, -1, k, -k, -i, -j)
    return {
        "construct": "perm",
        "degree": 8,
        "generators": [
            [2, 3, 1, 0, 6, 7, 5, 4],
            [4, 5, 7, 6, 1, 0, 2, 3],
        ],
    }


def _cyclic(n: int) -> dict:
    return {"construct": "cyclic", "n": n}


def _abelian(*invs: int) -> dict:
    return {"construct": "abelian", "invariants": list(invs)}


def _semidirect(base: dict, acting: dict, action: list[list[int]]) -> dict:
    return {
        "construct": "semidirect",
        "base": base,
        "acting": acting,
        "action": action,
    }


def _catalog_entries() -> list[tuple[str, int, dict]]:
    entries: list[tuple[str, int, dict]] = []

    def add(name: str, order: int, spec: dict):
        entries.append((name, order, spec))

    for n in (1, 2, 3, 4, 5, 6, 8, 12, 15):
        add(f"C{n}", n, _cyclic(n))
    add("C2xC2", 4, _abelian(2, 2))
    add("C2xC4", 8, _abelian(2, 4))
    add("C2xC2xC2", 8, _abelian(2, 2, 2))
    add("C3xC3", 9, _abelian(3, 3))
    for n in (8, 10, 12, 16, 24, 30):
        add(f"D{n}", n, {"construct": "dihedral", "n": n})
    add("Q8", 8, _q8_spec())
    add("S3", 6, {"construct": "symmetric", "n": 3})
    add("S4", 24, {"construct": "symmetric", "n": 4})
    add("S5", 120, {"construct": "symmetric", "n": 5})
    add("A4", 12, {"construct": "alternating", "n": 4})
    add("A5", 60, {"construct": "alternating", "n": 5})
    add(
        "C2wrC2",
        8,
        {"construct": "wreath", "base": _cyclic(2), "top": _cyclic(2)},
    )
    add(
        "S3wrS2",
        72,
        {
            "construct": "wreath",
            "base": {"construct": "symmetric", "n": 3},
            "top": {"construct": "symmetric", "n": 2},
        },
    )
    for n, order in ((2, 2), (3, 6), (5, 20), (7, 42), (8, 32), (9, 54)):
        add(
            f"HolC{n}",
            order,
            {"construct": "holomorph", "base": _cyclic(n)},
        )
    add(
        "D30semi",
        30,
        _semidirect(_abelian(3, 5), _cyclic(2), [inversion_action(_abelian(3, 5))]),
    )
    add(
        "C12:C2",
        24,
        _semidirect(_abelian(4, 3), _cyclic(2), [inversion_action(_abelian(4, 3))]),
    )
    add(
        "C15:C4",
        60,
        _semidirect(
            _abelian(3, 5), _cyclic(4), [power_action(_abelian(3, 5), [2, 2])]
        ),
    )
    add(
        "C105:C2",
        210,
        _semidirect(
            _abelian(3, 5, 7),
            _cyclic(2),
            [inversion_action(_abelian(3, 5, 7))],
        ),
    )
    add(
        "C91:C3",
        273,
        _semidirect(
            _abelian(7, 13), _cyclic(3), [power_action(_abelian(7, 13), [2, 3])]
        ),
    )
    add(
        "C65:C4",
        260,
        _semidirect(
            _abelian(5, 13), _cyclic(4), [power_action(_abelian(5, 13), [2, 5])]
        ),
    )
    q8 = build(_q8_spec())
    i_gen, j_gen = q8.generator_indices
    add(
        "Q8:C4",
        32,
        _semidirect(
            _q8_spec(), _cyclic(4), [[j_gen, q8.inverse(i_gen)]]
        ),
    )
    q8c3 = {"construct": "direct", "factors": [_q8_spec(), _cyclic(3)]}
    prod = build(q8c3)
    g0, g1, g2 = prod.generator_indices
    add(
        "Q8xC3:C2",
        48,
        _semidirect(q8c3, _cyclic(2), [[g1, g0, prod.inverse(g2)]]),
    )
    add(
        "A5xC2",
        120,
        {
            "construct": "direct",
            "factors": [{"construct": "alternating", "n": 5}, _cyclic(2)],
        },
    )
    return entries


def standard_catalog(max_order: int) -> list[tuple[str, dict]]:
    """Deterministic regression corpus, filtered by order."""
    if max_order < 1:
        raise InvalidSpec("max_order must be >= 1")
    return [
        (name, spec)
        for name, order, spec in _catalog_entries()
        if order <= max_order
    ]
