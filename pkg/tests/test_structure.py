"""Solubility, Sylow/Hall machinery, cores, quotients, and isomorphism."""

from __future__ import annotations

import pytest

from classgraph.construct import (alternating, cyclic, dihedral, direct_product,
                                  elementary_abelian, generalized_quaternion,
                                  symmetric)
from classgraph.errors import NotASubgroup, NotNormal, IsoCapExceeded
from classgraph.numtheory import p_part, prime_factors
from classgraph.perm import center, conjugacy_classes, make_group, parse_cycle_string
from classgraph.structure import (HallSearchConfig, derived_subgroup, hall_subgroup,
                                  is_isomorphic, is_p_separable, is_soluble,
                                  normal_closure, normal_subgroups, p_complement,
                                  p_core, p_prime_core, pi_core, quotient, sylow)
from oracles import naive_derived_subgroup, naive_is_normal


def test_soluble_s3():
    ok, cert = is_soluble(symmetric(3))
    assert ok
    assert [t.order for t in cert.terms] == [6, 3, 1]
    assert cert.kind == "derived_series"


def test_soluble_a5_false():
    ok, cert = is_soluble(alternating(5))
    assert not ok
    assert cert.terms[-1].order == 60  # the series stalls at A5 itself


def test_soluble_abelian():
    ok, _ = is_soluble(cyclic(12))
    assert ok


def test_derived_subgroup_matches_naive():
    s4 = symmetric(4)
    assert derived_subgroup(s4).element_set() == \
        frozenset(naive_derived_subgroup(s4.elements))


def test_derived_series_terms_normal(atlas_groups):
    G = atlas_groups["C3:C4"]
    _, cert = is_soluble(G)
    for term in cert.terms[1:]:
        assert naive_is_normal(G.elements, term.elements)


def test_sylow_examples(atlas_groups):
    assert sylow(symmetric(3), 3).order == 3
    assert sylow(atlas_groups["GammaL(1,8)"], 7).order == 7
    assert sylow(symmetric(3), 5).order == 1  # p not dividing
    q8 = generalized_quaternion(8)
    assert sylow(q8, 2).element_set() == q8.element_set()


def test_sylow_orders_across_atlas(atlas_groups):
    for G in atlas_groups.values():
        for p in prime_factors(G.order):
            assert sylow(G, p).order == p_part(G.order, p)


def test_p_core_examples(atlas_groups):
    assert p_core(atlas_groups["E25:Sigma3"], 5).order == 25
    assert p_core(symmetric(3), 2).order == 1
    e9 = elementary_abelian(3, 2)
    assert p_core(e9, 3).element_set() == e9.element_set()


def test_p_core_properties(atlas_groups):
    G = atlas_groups["C2x(Q8:C9)"]
    for p in (2, 3):
        core = p_core(G, p)
        assert naive_is_normal(G.elements, core.elements)
        assert quotient(G, core) and p_core(quotient(G, core).group, p).order == 1
        assert core.element_set() <= sylow(G, p).element_set()


def test_p_core_agrees_with_pi_core(atlas_groups):
    for name in ["Sigma3", "A4", "C7:C6", "E25:Sigma3", "Q8:C9"]:
        G = atlas_groups[name]
        for p in prime_factors(G.order):
            assert p_core(G, p).element_set() == \
                pi_core(G, frozenset({p})).element_set()


def test_p_prime_core_examples(atlas_groups):
    assert p_prime_core(atlas_groups["C7:C6"], 2).order == 21
    assert p_prime_core(generalized_quaternion(8), 2).order == 1
    c6 = direct_product(cyclic(2), cyclic(3))
    assert p_prime_core(c6, 2).order == 3


def test_p_separable(atlas_groups):
    for name in ["Sigma3", "A4", "GammaL(1,8)", "ES27:Q8"]:
        G = atlas_groups[name]
        for p in (2, 3, 5, 7):
            ok, cert = is_p_separable(G, p)
            assert ok
            assert cert.terms[0].order == G.order
            assert cert.terms[-1].order == 1
            assert all(lbl in ("p-group", "p'-group") for lbl in cert.step_labels)
            # factors alternate after the first step
            for a, b in zip(cert.step_labels, cert.step_labels[1:]):
                assert a != b
    a5 = alternating(5)
    for p in (2, 3, 5):
        ok, _ = is_p_separable(a5, p)
        assert not ok
    triv = make_group([], "1", degree=1)
    assert is_p_separable(triv, 5)[0]


def test_soluble_implies_separable(atlas_groups):
    for G in atlas_groups.values():
        assert is_soluble(G)[0]
        for p in (2, 3, 5, 7):
            assert is_p_separable(G, p)[0]


def test_p_complement_examples(atlas_groups):
    assert p_complement(symmetric(3), 3).order == 2
    h = p_complement(atlas_groups["GammaL(1,8)"], 7)
    assert h.order == 24
    c12 = cyclic(12)
    assert p_complement(c12, 2).order == 3


def test_p_complement_involution_class_sizes(atlas_groups):
    # one distinguished involution has class length 3 in H and 7 in G
    G = atlas_groups["GammaL(1,8)"]
    H = p_complement(G, 7)
    from classgraph.perm import class_of
    found = False
    for cls in conjugacy_classes(H):
        if cls.element_order == 2 and cls.size == 3:
            assert class_of(G, cls.representative).size == 7
            found = True
    assert found


def test_hall_search_is_deterministic(atlas_groups):
    G = atlas_groups["GammaL(1,8)"]
    cfg = HallSearchConfig(seed=123)
    a = p_complement(G, 7, cfg)
    b = p_complement(G, 7, cfg)
    assert a.element_set() == b.element_set()


def test_hall_subgroup_general(atlas_groups):
    G = atlas_groups["GammaL(1,8)"]
    h = hall_subgroup(G, frozenset({2, 7}))
    assert h.order == 56


def test_sylow_times_complement(atlas_groups):
    for G in atlas_groups.values():
        for p in prime_factors(G.order):
            if not is_p_separable(G, p)[0]:
                continue
            assert sylow(G, p).order * p_complement(G, p).order == G.order


def test_quotient_examples(atlas_groups):
    G = atlas_groups["E25:Sigma3"]
    Q, proj = quotient(G, p_core(G, 5))
    assert Q.order == 6
    assert is_isomorphic(Q, symmetric(3))
    # trivial kernel: the regular image
    s3 = symmetric(3)
    triv = make_group([], "1", degree=3)
    Q2, _ = quotient(s3, triv)
    assert Q2.order == 6 and Q2.degree == 6
    # full kernel: the trivial group
    Q3, _ = quotient(s3, s3)
    assert Q3.order == 1


def test_quotient_projection_is_homomorphism():
    s4 = symmetric(4)
    v4 = make_group([parse_cycle_string("(1,2)(3,4)", 4),
                     parse_cycle_string("(1,3)(2,4)", 4)], "V4")
    Q, proj = quotient(s4, v4)
    assert Q.order == 6
    for a in s4.elements:
        for b in s4.generators:
            assert proj[a * b] == proj[a] * proj[b]


def test_quotient_rejects_bad_inputs():
    s3 = symmetric(3)
    c2 = make_group([parse_cycle_string("(1,2)", 3)], "C2")
    with pytest.raises(NotNormal):
        quotient(s3, c2)
    with pytest.raises(NotASubgroup):
        quotient(s3, cyclic(2))  # wrong degree


def test_normal_closure_minimal():
    s3 = symmetric(3)
    t = parse_cycle_string("(1,2,3)", 3)
    assert normal_closure(s3, [t], "A3").order == 3
    assert normal_closure(s3, [parse_cycle_string("(1,2)", 3)], "all").order == 6


def test_normal_subgroups_examples(atlas_groups):
    s3 = symmetric(3)
    assert [N.order for N in normal_subgroups(s3)] == [1, 3, 6]
    q8 = atlas_groups["Q8"]
    assert [N.order for N in normal_subgroups(q8)] == [1, 2, 4, 4, 4, 8]
    a5 = alternating(5)
    assert [N.order for N in normal_subgroups(a5)] == [1, 60]


def test_normal_subgroups_are_normal(atlas_groups):
    G = atlas_groups["C2x(Q8:C9)"]
    for N in normal_subgroups(G):
        assert naive_is_normal(G.elements, N.elements)


def test_is_isomorphic_examples(atlas_groups):
    assert not is_isomorphic(cyclic(4), elementary_abelian(2, 2))
    assert is_isomorphic(atlas_groups["A4"], alternating(4))
    assert is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
    assert not is_isomorphic(dihedral(12), atlas_groups["C3:C4"])
    assert is_isomorphic(dihedral(12), direct_product(symmetric(3), cyclic(2)))


def test_is_isomorphic_reflexive_symmetric(atlas_groups):
    small = [G for G in atlas_groups.values() if G.order <= 72]
    for G in small:
        assert is_isomorphic(G, G)
    for A in small[:5]:
        for B in small[:5]:
            assert is_isomorphic(A, B) == is_isomorphic(B, A)


def test_iso_cap():
    with pytest.raises(IsoCapExceeded):
        is_isomorphic(cyclic(3), cyclic(3), cap=2)


def test_center_quotient_of_q8():
    q8 = generalized_quaternion(8)
    Q, _ = quotient(q8, center(q8))
    assert is_isomorphic(Q, elementary_abelian(2, 2))
