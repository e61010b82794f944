"""Graph construction, shape classification, triangles, diameter, spans."""

from __future__ import annotations

import math

import pytest

from classgraph.construct import cyclic, generalized_quaternion
from classgraph.errors import NoVertices
from classgraph.graph import (build_graph, central_p_prime_part, coprime_class_span,
                              diameter, is_triangle_free, p_regular_classes, to_dot)
from classgraph.perm import conjugacy_classes
from oracles import naive_diameter, naive_is_triangle_free


def test_p_regular_classes_c7c6(atlas_groups):
    g = atlas_groups["C7:C6"]
    regs = p_regular_classes(g, 2)
    assert sorted(c.element_order for c in regs) == [1, 3, 3, 7]
    removed = [c for c in conjugacy_classes(g) if c not in regs]
    assert sorted(c.element_order for c in removed) == [2, 6, 6]


def test_p_regular_classes_p_not_dividing(atlas_groups):
    g = atlas_groups["Sigma3"]
    assert p_regular_classes(g, 5) == conjugacy_classes(g)


def test_p_regular_classes_p_group():
    q8 = generalized_quaternion(8)
    regs = p_regular_classes(q8, 2)
    assert len(regs) == 1 and regs[0].is_central


def test_build_graph_shapes(atlas_groups):
    expectations = [
        ("Sigma3", None, (2, 3), 0, "a"),
        ("C7:C6", 2, (6, 7, 7), 1, "b"),
        ("C3:C4", 5, (2, 2, 3, 3), 2, "c"),
        ("ES27:Q8", 2, (24,), 0, "d"),
        ("C2x(Q8:C9)", 3, (6, 6), 1, "e"),
        ("(C5xC5):SL(2,3)", 3, (24, 25, 150), 2, "f"),
    ]
    for name, p, sizes, n_edges, shape in expectations:
        g = build_graph(atlas_groups[name], p)
        assert g.vertex_sizes() == sizes, name
        assert len(g.edges) == n_edges, name
        assert g.shape == shape, name


def test_graph_without_prime_equals_nondividing_prime(atlas_groups):
    for name in ["Sigma3", "A4", "C7:C6", "Q8"]:
        G = atlas_groups[name]
        q = 2
        while G.order % q == 0:
            q += 1
        import classgraph.numtheory as nt
        while not nt.is_prime(q):
            q += 1
        plain = build_graph(G)
        at_q = build_graph(G, q)
        assert plain.vertex_sizes() == at_q.vertex_sizes()
        assert plain.edges == at_q.edges
        assert plain.shape == at_q.shape


def test_edges_match_prime_support(atlas_groups):
    g = build_graph(atlas_groups["Sigma4"])
    for i in range(len(g.vertices)):
        for j in range(i + 1, len(g.vertices)):
            shares = bool(g.vertices[i].prime_support & g.vertices[j].prime_support)
            gcd_edge = math.gcd(g.vertices[i].size, g.vertices[j].size) > 1
            assert shares == gcd_edge == ((i, j) in g.edges)


def test_triangle_free(atlas_groups):
    assert is_triangle_free(build_graph(atlas_groups["(C5xC5):SL(2,3)"], 3))
    s4 = build_graph(atlas_groups["Sigma4"])
    assert not is_triangle_free(s4)
    assert not naive_is_triangle_free([v.size for v in s4.vertices])
    empty = build_graph(generalized_quaternion(8), 2)
    assert len(empty.vertices) == 0
    assert is_triangle_free(empty)


def test_triangle_free_matches_naive(atlas_groups):
    for name, entry in atlas_groups.items():
        for p in (2, 3, 5, None):
            g = build_graph(entry, p)
            assert is_triangle_free(g) == naive_is_triangle_free(
                [v.size for v in g.vertices]), (name, p)


def test_diameter(atlas_groups):
    f_graph = build_graph(atlas_groups["(C5xC5):SL(2,3)"], 3)
    assert diameter(f_graph) == 2
    a_graph = build_graph(atlas_groups["Sigma3"], 5)
    assert diameter(a_graph) is None
    d_graph = build_graph(atlas_groups["ES27:Q8"], 2)
    assert diameter(d_graph) == 0


def test_diameter_matches_naive(atlas_groups):
    for name in ["Sigma4", "GammaL(1,8)", "E16:C15", "(C5xC5):Q8"]:
        g = build_graph(atlas_groups[name], 2)
        assert diameter(g) == naive_diameter(len(g.vertices), g.edges), name


def test_components_partition(atlas_groups):
    g = build_graph(atlas_groups["C3:C4"], 5)
    assert sorted(v for comp in g.components for v in comp) == [0, 1, 2, 3]
    assert len(g.components) == 2


def test_coprime_span_c7c6(atlas_groups):
    span = coprime_class_span(atlas_groups["C7:C6"], 2)
    assert span.max_class.size == 7
    assert span.span.order == 7
    assert span.span.is_abelian()


def test_coprime_span_contains_central_part(atlas_groups):
    # all non-central sizes share a prime, so the span is exactly Z(G)_{p'}
    G = atlas_groups["C2x(Q8:C9)"]
    span = coprime_class_span(G, 3)
    zp = central_p_prime_part(G, 3)
    assert span.span.element_set() == zp.element_set()
    assert span.span.order == 4


def test_coprime_span_e25_sigma3(atlas_groups):
    G = atlas_groups["E25:Sigma3"]
    span = coprime_class_span(G, 5).span
    assert span.is_abelian()
    assert math.gcd(span.order, 5) == 1
    for s in span.generators:
        for g in G.generators:
            assert s.conjugate(g) in span


def test_coprime_span_no_vertices():
    with pytest.raises(NoVertices):
        coprime_class_span(generalized_quaternion(8), 2)
    with pytest.raises(NoVertices):
        coprime_class_span(cyclic(6), 5)


def test_dot_export_golden(atlas_groups):
    g = build_graph(atlas_groups["C7:C6"], 2)
    expected = (
        'graph gamma {\n'
        '  "v6_0" [label="size=6, ord=7"];\n'
        '  "v7_1" [label="size=7, ord=3"];\n'
        '  "v7_2" [label="size=7, ord=3"];\n'
        '  "v7_1" -- "v7_2";\n'
        '}\n'
    )
    assert to_dot(g) == expected


def test_dot_export_stable(atlas_groups):
    g1 = to_dot(build_graph(atlas_groups["Sigma4"]))
    g2 = to_dot(build_graph(atlas_groups["Sigma4"]))
    assert g1 == g2
    assert g1.startswith("graph gamma {")
