#!/usr/bin/env python3
"""Constructing groups from scratch and running the verifier on them.

Builds a Frobenius group E49 : C8 by hand (an order-8 fixed-point-free
matrix action on a 7x7 elementary abelian group), then runs the full
check battery on it at several primes.
"""

from classgraph import (ActionSpec, build_graph, cyclic, elementary_abelian,
                        semidirect_product, verify_pair)


def matrix_action(E, q, m):
    """ActionSpec images for a 2x2 matrix acting on E_{q^2} by columns."""
    a, b, c, d = m
    x, y = E.generators
    return {x: (x ** a) * (y ** c), y: (x ** b) * (y ** d)}


def main():
    e49 = elementary_abelian(7, 2)
    c8 = cyclic(8)
    # multiplication by 2+2i on GF(49) = GF(7)[i]: an order-8 matrix whose
    # nontrivial powers are all fixed-point-free
    act = ActionSpec({c8.generators[0]: matrix_action(e49, 7, (2, 5, 2, 2))})
    G = semidirect_product(e49, c8, act, "E49:C8")
    print(f"built {G.name} of order {G.order} on {G.degree} points")

    for p in (2, 7, 3):
        report = verify_pair(G, p)
        counts = report.counts()
        g = report.graph_summary
        print(f"p={p}: shape {g['shape']}, vertex sizes {g['vertex_sizes']}, "
              f"{counts['pass']} pass / {counts['fail']} fail / "
              f"{counts['skipped']} skipped")
    print()
    print("graph at p = 2:")
    graph = build_graph(G, 2)
    for v in graph.vertices:
        print(f"  class of size {v.size}, element order {v.element_order}")


if __name__ == "__main__":
    main()
