"""Sylow subgroups, the normal lattice and derived invariants."""

import pytest

from coleman import build
from coleman.core import factorize
from coleman.errors import NotADivisor
from coleman.search import is_isomorphic
from coleman.structure import (
    all_sylow_subgroups,
    chief_factor_orders,
    classify,
    core_subgroups,
    has_cyclic_chief_factor,
    layer,
    minimal_normal_subgroups,
    normal_subgroups,
    sylow_subgroup,
)


def test_sylow_orders():
    S4 = build({"construct": "symmetric", "n": 4})
    assert sylow_subgroup(S4, 2).order == 8
    assert sylow_subgroup(S4, 3).order == 3
    C12 = build({"construct": "cyclic", "n": 12})
    P = sylow_subgroup(C12, 2)
    assert P.order == 4
    assert len(all_sylow_subgroups(C12, 2)) == 1
    with pytest.raises(NotADivisor):
        sylow_subgroup(S4, 5)


def test_all_sylow_counts_and_conjugacy():
    S4 = build({"construct": "symmetric", "n": 4})
    threes = all_sylow_subgroups(S4, 3)
    assert len(threes) == 4
    S3 = build({"construct": "symmetric", "n": 3})
    twos = all_sylow_subgroups(S3, 2)
    assert len(twos) == 3
    base = twos[0]
    for other in twos[1:]:
        assert any(
            base.conjugate_by(g).members == other.members for g in range(6)
        )
    for G, p in ((S4, 2), (S4, 3), (S3, 2), (S3, 3)):
        assert len(all_sylow_subgroups(G, p)) % p == 1


def test_normal_subgroups():
    A5 = build({"construct": "alternating", "n": 5})
    assert [H.order for H in normal_subgroups(A5)] == [1, 60]
    S4 = build({"construct": "symmetric", "n": 4})
    assert [H.order for H in normal_subgroups(S4)] == [1, 4, 12, 24]
    C6 = build({"construct": "cyclic", "n": 6})
    assert len(normal_subgroups(C6)) == 4


def test_core_subgroups():
    S4 = build({"construct": "symmetric", "n": 4})
    cores = core_subgroups(S4, 2)
    assert cores.o_p.order == 4
    assert cores.o_p_prime.order == 1
    assert cores.fitting.order == 4

    A5 = build({"construct": "alternating", "n": 5})
    for p in (2, 3, 5):
        c = core_subgroups(A5, p)
        assert c.o_p.order == 1
        assert c.o_p_prime.order == 1
    assert core_subgroups(A5, 2).fitting.order == 1

    C12 = build({"construct": "cyclic", "n": 12})
    c = core_subgroups(C12, 2)
    assert c.o_p.order == 4
    assert c.o_p_prime.order == 3
    assert c.fitting.order == 12

    # a prime outside the order is fine: O_p trivial, O_p' everything
    c7 = core_subgroups(S4, 7)
    assert c7.o_p.order == 1
    assert c7.o_p_prime.order == 24


def test_o_p_containment_and_intersection():
    for spec in (
        {"construct": "symmetric", "n": 4},
        {"construct": "cyclic", "n": 12},
        {"construct": "dihedral", "n": 12},
    ):
        G = build(spec)
        for p in G.prime_set:
            cores = core_subgroups(G, p)
            for P in all_sylow_subgroups(G, p):
                assert cores.o_p.member_set <= P.member_set
            both = cores.o_p.member_set & cores.o_p_prime.member_set
            assert both == {0}


def test_layer():
    S5 = build({"construct": "symmetric", "n": 5})
    assert layer(S5).order == 60
    S4 = build({"construct": "symmetric", "n": 4})
    assert layer(S4).order == 1
    A5C2 = build(
        {
            "construct": "direct",
            "factors": [
                {"construct": "alternating", "n": 5},
                {"construct": "cyclic", "n": 2},
            ],
        }
    )
    assert layer(A5C2).order == 60


def test_layer_commutes_with_fitting():
    for spec in (
        {"construct": "symmetric", "n": 4},
        {"construct": "symmetric", "n": 5},
        {
            "construct": "direct",
            "factors": [
                {"construct": "alternating", "n": 5},
                {"construct": "cyclic", "n": 2},
            ],
        },
    ):
        G = build(spec)
        E = layer(G)
        F = core_subgroups(G, G.prime_set[0]).fitting
        assert all(
            G.multiply(e, f) == G.multiply(f, e)
            for e in E.generators()
            for f in F.generators()
        )


def test_classify(q8_spec):
    Q8 = build(q8_spec)
    flags = classify(Q8)
    assert flags.is_nilpotent and flags.p_group_prime == 2 and not flags.is_simple
    A5 = build({"construct": "alternating", "n": 5})
    flags = classify(A5)
    assert flags.is_simple and not flags.is_nilpotent
    S3 = build({"construct": "symmetric", "n": 3})
    assert not classify(S3).is_nilpotent


def test_chief_factors():
    S4 = build({"construct": "symmetric", "n": 4})
    assert chief_factor_orders(S4) == [4, 3, 2]
    assert has_cyclic_chief_factor(S4, 2)
    assert has_cyclic_chief_factor(S4, 3)
    A5 = build({"construct": "alternating", "n": 5})
    assert chief_factor_orders(A5) == [60]
    assert not has_cyclic_chief_factor(A5, 2)


def test_minimal_normal_subgroups():
    S4 = build({"construct": "symmetric", "n": 4})
    mins = minimal_normal_subgroups(S4)
    assert [H.order for H in mins] == [4]
    A5 = build({"construct": "alternating", "n": 5})
    assert [H.order for H in minimal_normal_subgroups(A5)] == [60]


def test_is_isomorphic(q8_spec):
    C4 = build({"construct": "cyclic", "n": 4})
    V4 = build({"construct": "abelian", "invariants": [2, 2]})
    assert not is_isomorphic(C4, V4)
    D8 = build({"construct": "dihedral", "n": 8})
    Q8 = build(q8_spec)
    assert not is_isomorphic(D8, Q8)
    assert is_isomorphic(D8, D8)
    # involution counts differ: 5 in D8, 1 in Q8
    assert sum(1 for i in range(8) if D8.element_order(i) == 2) == 5
    assert sum(1 for i in range(8) if Q8.element_order(i) == 2) == 1


def test_sylow_is_p_part():
    for spec in (
        {"construct": "symmetric", "n": 4},
        {"construct": "dihedral", "n": 30},
        {"construct": "cyclic", "n": 12},
    ):
        G = build(spec)
        fact = factorize(G.order)
        for p, e in fact.items():
            assert sylow_subgroup(G, p).order == p**e
