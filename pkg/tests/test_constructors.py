"""Construction recipes, their invariants, and the regression catalog."""

import json

import pytest

from coleman import build, standard_catalog
from coleman.constructors import (
    _catalog_entries,
    canonical_spec,
    inversion_action,
)
from coleman.errors import InvalidAction, InvalidSpec, OrderCapExceeded
from coleman.search import is_isomorphic


def test_basic_orders(q8_spec):
    cases = [
        ({"construct": "cyclic", "n": 7}, 7),
        ({"construct": "abelian", "invariants": [2, 4]}, 8),
        ({"construct": "abelian", "invariants": [1, 3]}, 3),
        ({"construct": "symmetric", "n": 4}, 24),
        ({"construct": "alternating", "n": 4}, 12),
        ({"construct": "dihedral", "n": 16}, 16),
        (q8_spec, 8),
        ({"construct": "direct", "factors": [{"construct": "cyclic", "n": 3}, {"construct": "cyclic", "n": 4}]}, 12),
        ({"construct": "wreath", "base": {"construct": "cyclic", "n": 2}, "top": {"construct": "cyclic", "n": 2}}, 8),
        ({"construct": "holomorph", "base": {"construct": "cyclic", "n": 3}}, 6),
        ({"construct": "holomorph", "base": {"construct": "cyclic", "n": 5}}, 20),
    ]
    for spec, order in cases:
        assert build(spec).order == order, spec


def test_dihedral_edges():
    assert build({"construct": "dihedral", "n": 2}).order == 2
    V = build({"construct": "dihedral", "n": 4})
    assert V.order == 4 and V.is_abelian()
    with pytest.raises(InvalidSpec):
        build({"construct": "dihedral", "n": 7})
    D30 = build({"construct": "dihedral", "n": 30})
    assert D30.order == 30 and not D30.is_abelian()


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        build({"construct": "nope"})
    with pytest.raises(InvalidSpec):
        build({"no_construct": 1})
    with pytest.raises(InvalidSpec):
        build({"construct": "cyclic"})


def test_semidirect_handles_and_relations():
    base = {"construct": "abelian", "invariants": [3, 5]}
    spec = {
        "construct": "semidirect",
        "base": base,
        "acting": {"construct": "cyclic", "n": 2},
        "action": [inversion_action(base)],
    }
    G = build(spec)
    assert G.order == 30
    info = G.build_info
    assert info.base.order == 15 and info.base.is_normal()
    assert info.acting.order == 2
    assert info.base.member_set & info.acting.member_set == {0}
    assert is_isomorphic(G, build({"construct": "dihedral", "n": 30}))
    # x^-1 a x = a^-1 for base members
    x = next(i for i in info.acting.members if i != 0)
    for a in info.base.members:
        assert G.conjugate(a, x) == G.inverse(a)


def test_invalid_actions():
    base = {"construct": "cyclic", "n": 5}
    with pytest.raises(InvalidAction):
        # g -> g^0 is not a bijection-preserving assignment
        build(
            {
                "construct": "semidirect",
                "base": base,
                "acting": {"construct": "cyclic", "n": 2},
                "action": [[0]],
            }
        )
    with pytest.raises(InvalidAction):
        # order-4 action from a C2 acting group breaks the relations
        g = build(base)
        img = g.power(g.generator_indices[0], 2)  # order-4 automorphism of C5
        build(
            {
                "construct": "semidirect",
                "base": base,
                "acting": {"construct": "cyclic", "n": 2},
                "action": [[img]],
            }
        )
    with pytest.raises(InvalidAction):
        build(
            {
                "construct": "semidirect",
                "base": base,
                "acting": {"construct": "cyclic", "n": 2},
                "action": [],
            }
        )


def test_wreath_structure():
    spec = {
        "construct": "wreath",
        "base": {"construct": "symmetric", "n": 3},
        "top": {"construct": "symmetric", "n": 2},
    }
    G = build(spec)
    assert G.order == 72
    info = G.build_info
    assert info.base.order == 36 and info.base.is_normal()
    assert len(info.copies) == 2
    S3 = build({"construct": "symmetric", "n": 3})
    for copy in info.copies:
        sub, _ = copy.as_group()
        assert is_isomorphic(sub, S3)
    # the copies commute elementwise
    c0, c1 = info.copies
    assert all(
        G.multiply(a, b) == G.multiply(b, a)
        for a in c0.members
        for b in c1.members
    )


def test_wreath_cap():
    with pytest.raises(OrderCapExceeded):
        build(
            {
                "construct": "wreath",
                "base": {"construct": "symmetric", "n": 4},
                "top": {"construct": "symmetric", "n": 3},
            }
        )


def test_holomorph_structure():
    H = build({"construct": "holomorph", "base": {"construct": "cyclic", "n": 3}})
    assert H.order == 6 and not H.is_abelian()
    assert is_isomorphic(H, build({"construct": "symmetric", "n": 3}))

    # centerless base: the centralizer of base + inner part is trivial
    HS3 = build({"construct": "holomorph", "base": {"construct": "symmetric", "n": 3}})
    assert HS3.order == 36
    base = HS3.build_info.base
    inner_part = set(base.members)
    S3 = build({"construct": "symmetric", "n": 3})
    acting = HS3.build_info.acting
    # all automorphisms of S3 are inner, so base * acting is the whole thing
    both = HS3.generated_subgroup(set(base.members) | set(acting.members))
    assert both.order == 36
    assert HS3.centralizer(both.generators()).order == 1


def test_catalog_views():
    only_trivial = standard_catalog(1)
    assert [n for n, _ in only_trivial] == ["C1"]
    upto30 = dict(standard_catalog(30))
    assert "D30" in upto30 and "D30semi" in upto30
    upto130 = dict(standard_catalog(130))
    assert {"S4", "A5", "S5"} <= set(upto130)
    assert "C105:C2" not in upto130
    assert standard_catalog(300) == standard_catalog(300)
    with pytest.raises(InvalidSpec):
        standard_catalog(0)


def test_catalog_orders_and_roundtrip():
    for name, order, spec in _catalog_entries():
        rebuilt = json.loads(json.dumps(spec))
        G = build(rebuilt)
        assert G.order == order, name
        assert canonical_spec(rebuilt) == canonical_spec(spec)


def test_semidirect_invariants_across_catalog():
    for name, order, spec in _catalog_entries():
        if spec.get("construct") not in ("semidirect", "wreath", "holomorph"):
            continue
        G = build(spec)
        info = G.build_info
        assert info.base.is_normal(), name
        assert info.base.member_set & info.acting.member_set == {0}, name
        assert info.base.order * info.acting.order == G.order, name


def test_associativity_catalog():
    for name, order, spec in _catalog_entries():
        G = build(spec)
        if G.order <= 200:
            assert G.check_associativity(), name
        else:
            assert G.check_associativity(sample=100_000, seed=7), name
