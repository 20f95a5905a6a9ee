"""Automorphism enumeration, classification and outer quotients."""

import pytest
from hypothesis import given, settings, strategies as st

from coleman import build
from coleman.automorphisms import (
    Automorphism,
    abelian_invariants,
    aut_c_and_col,
    aut_col,
    automorphism_group,
    inner_automorphisms,
    out_c,
    out_c_cap_out_col,
    out_col,
)
from coleman.config import Caps
from coleman.core import FiniteGroup
from coleman.errors import OrderCapExceeded
from coleman.structure import all_sylow_subgroups, sylow_subgroup


def conj_by_perm(G, t):
    """Conjugation of a permutation group by an outside permutation t."""
    ti = tuple(sorted(range(len(t)), key=lambda i: t[i]))
    images = []
    for i in range(G.order):
        p = G.element(i)
        images.append(G.index_of(tuple(t[p[ti[x]]] for x in range(len(t)))))
    return Automorphism(G, images, check=True)


def test_aut_counts(q8_spec):
    assert len(automorphism_group(build({"construct": "cyclic", "n": 5}))) == 4
    assert len(automorphism_group(build({"construct": "abelian", "invariants": [2, 2]}))) == 6
    S3 = build({"construct": "symmetric", "n": 3})
    auts = automorphism_group(S3)
    assert len(auts) == 6
    assert all(s.is_inner() for s in auts)
    assert len(automorphism_group(build(q8_spec))) == 24
    assert len(automorphism_group(build({"construct": "abelian", "invariants": [2, 2, 2]}))) == 168


def test_inner_automorphisms(q8_spec):
    S3 = build({"construct": "symmetric", "n": 3})
    assert len(inner_automorphisms(S3)) == 6
    Q8 = build(q8_spec)
    inns = inner_automorphisms(Q8)
    assert len(inns) == 4
    ident = Automorphism.identity(Q8)
    assert ident.is_inner() and ident.inner_witness() == 0
    for s in inns:
        assert s.is_inner()
    assert len({s.images for s in inns}) == 4


def test_aut_is_a_group():
    S4 = build({"construct": "symmetric", "n": 4})
    auts = automorphism_group(S4)
    assert len(auts) == 24
    byimg = {s.images for s in auts}
    for a in auts[:6]:
        assert a.inverse().images in byimg
        for b in auts[:6]:
            assert a.compose(b).images in byimg
    # inner automorphisms form a normal subgroup
    inns = {s.images for s in auts if s.is_inner()}
    for a in auts[:8]:
        for i in inns:
            conj = a.inverse().compose(Automorphism(S4, i)).compose(a)
            assert conj.images in inns


def test_class_preserving():
    C3 = build({"construct": "cyclic", "n": 3})
    inversion = Automorphism(C3, [0, C3.inverse(1), C3.inverse(2)], check=True)
    assert not inversion.is_class_preserving()
    A4 = build({"construct": "alternating", "n": 4})
    outer = conj_by_perm(A4, (1, 0, 2, 3))
    assert not outer.is_class_preserving()
    for s in inner_automorphisms(A4):
        assert s.is_class_preserving()


def test_coleman_flags():
    C3 = build({"construct": "cyclic", "n": 3})
    inversion = Automorphism(C3, [0, C3.inverse(1), C3.inverse(2)], check=True)
    assert not inversion.is_coleman()
    S4 = build({"construct": "symmetric", "n": 4})
    for s in inner_automorphisms(S4)[:5]:
        w = s.coleman_witnesses()
        assert w is not None and set(w) == {2, 3}


def test_p_central():
    A5 = build({"construct": "alternating", "n": 5})
    ident = Automorphism.identity(A5)
    assert ident.p_central_primes() == (2, 3, 5)
    outer = conj_by_perm(A5, (1, 0, 2, 3, 4))
    assert not outer.is_p_central(2)
    assert outer.is_p_central(3)  # (0 1) centralizes a Sylow 3-subgroup
    # conjugation by a central element of a Sylow subgroup is p-central
    Q8 = build(
        {
            "construct": "perm",
            "degree": 8,
            "generators": [[2, 3, 1, 0, 6, 7, 5, 4], [4, 5, 7, 6, 1, 0, 2, 3]],
        }
    )
    z = next(i for i in range(1, 8) if Q8.element_order(i) == 2)
    assert Automorphism.conjugation(Q8, z).is_p_central(2)


def test_out_quotients(q8_spec):
    Q8 = build(q8_spec)
    assert out_col(Q8).is_trivial()
    assert out_c(Q8).is_trivial()
    S4 = build({"construct": "symmetric", "n": 4})
    assert out_col(S4).is_trivial()
    assert out_c(S4).is_trivial()
    C12 = build({"construct": "cyclic", "n": 12})
    assert out_c(C12).is_trivial()
    D30 = build({"construct": "dihedral", "n": 30})
    oc = out_col(D30)
    assert oc.order == 2
    assert oc.abelian_invariants() == [2]
    inter = out_c_cap_out_col(D30)
    assert oc.order % inter.order == 0
    assert out_c(D30).order % inter.order == 0


def test_coleman_closed_under_composition():
    D30 = build({"construct": "dihedral", "n": 30})
    col = aut_col(D30)
    byimg = {s.images for s in col}
    inns = inner_automorphisms(D30)
    assert all(s.images in byimg for s in inns)
    for a in col[:10]:
        assert a.inverse().images in byimg
        for b in col[:10]:
            assert a.compose(b).images in byimg


def test_aut_cap():
    small = Caps(automorphism=20, isomorphism=20)
    G = build({"construct": "symmetric", "n": 4})
    G._aut_cache = None
    with pytest.raises(OrderCapExceeded):
        automorphism_group(G, small)
    assert len(automorphism_group(G)) == 24


def test_abelian_invariants():
    assert abelian_invariants(build({"construct": "cyclic", "n": 6})) == [6]
    assert abelian_invariants(build({"construct": "abelian", "invariants": [2, 4]})) == [2, 4]
    assert abelian_invariants(build({"construct": "abelian", "invariants": [2, 2, 2]})) == [2, 2, 2]
    assert abelian_invariants(build({"construct": "cyclic", "n": 1})) == []
    assert abelian_invariants(build({"construct": "abelian", "invariants": [6, 4]})) == [2, 12]


def test_abelian_invariants_against_order_census():
    # oracle: the invariant factors determine and are determined by the
    # census of element orders; compare reconstructed group orders
    import math

    for invs in ([2, 4], [3, 9], [2, 2, 3], [5], [2, 6]):
        G = build({"construct": "abelian", "invariants": invs})
        ds = abelian_invariants(G)
        assert math.prod(ds) == G.order
        H = build({"construct": "abelian", "invariants": ds})
        census_g = sorted(G.element_order(i) for i in range(G.order))
        census_h = sorted(H.element_order(i) for i in range(H.order))
        assert census_g == census_h


@st.composite
def small_perm_groups(draw):
    degree = draw(st.integers(min_value=2, max_value=4))
    perms = []
    for _ in range(draw(st.integers(min_value=1, max_value=2))):
        perm = draw(st.permutations(range(degree)))
        perms.append(tuple(perm))
    return degree, perms


@settings(max_examples=20, deadline=None)
@given(small_perm_groups())
def test_property_inner_count(data):
    degree, perms = data
    from coleman import group_from_permutations

    G = group_from_permutations(degree, perms)
    inns = inner_automorphisms(G)
    assert len(inns) == G.order // G.center().order
    auts = automorphism_group(G)
    assert len(auts) % len(inns) == 0
    byimg = {s.images for s in auts}
    assert all(s.images in byimg for s in inns)
