#!/usr/bin/env python3
"""A tour of the six triangle-free graph shapes.

For one (group, prime) pair per shape, build the graph on non-central
p-regular conjugacy classes, print its vertices and edges, and show which
structural case the p-complement lands in.
"""

from classgraph import (atlas_group, build_graph, diameter, p_complement,
                        complement_case, to_dot)

TOUR = [
    ("a", "Sigma3", 5, "two isolated vertices"),
    ("b", "C7:C6", 2, "three vertices, one edge"),
    ("c", "C3:C4", 5, "two disjoint edges"),
    ("d", "ES27:Q8", 2, "a single vertex"),
    ("e", "C2x(Q8:C9)", 3, "one edge on two vertices"),
    ("f", "(C5xC5):SL(2,3)", 3, "a path on three vertices"),
]


def main():
    for shape, name, p, blurb in TOUR:
        G = atlas_group(name)
        graph = build_graph(G, p)
        case = complement_case(G, p)
        H = p_complement(G, p)
        print(f"shape ({shape}) - {blurb}")
        print(f"  group {G.name}, order {G.order}, prime p = {p}")
        print(f"  vertex sizes {list(graph.vertex_sizes())}, "
              f"{len(graph.edges)} edge(s), diameter {diameter(graph)}")
        print(f"  p-complement order {H.order}; structural case {case.case} "
              f"with details {case.details}")
        print()
    print("DOT export of the shape-(f) graph:")
    print(to_dot(build_graph(atlas_group("(C5xC5):SL(2,3)"), 3)))


if __name__ == "__main__":
    main()
