#!/usr/bin/env python3
"""
Test script for chromatic and near-chromatic symmetric functions
"""

import sys
import os
from fractions import Fraction

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import networkx as nx

from gamma.algebra import PExpansion, omega, specialize
from gamma.chromatic import (SimpleGraph, all_graphs, chromatic_sweep, chromatic_sym,
                             coloring_monomial, complete_graph, disjoint_edge_pairs, disjoint_union,
                             family_graph, gamma_membership_classify, is_star_or_triangle_with_null,
                             near_chromatic, near_star_closed_form, null_graph, parse_graph,
                             path_graph, spanning_component_sizes, star, star_closed_form, triangle,
                             y_basis_check)
from gamma.errors import GraphSyntaxError, GuardError


def test_triangle_constants():
    x = chromatic_sym(triangle())
    assert x == PExpansion({(1, 1, 1): 1, (2, 1): -3, (3,): 2}), f"Got {x}"
    assert str(x) == "p[1,1,1] − 3·p[2,1] + 2·p[3]"
    y = near_chromatic(triangle())
    assert y == PExpansion({(1, 1, 1): 1, (3,): 2}), f"Got {y}"
    print("Triangle constants: ok")


def test_star_closed_forms():
    for n in range(1, 11):
        assert chromatic_sym(star(n)) == star_closed_form(n), f"X(S_{n}) differs from the closed form"
        assert near_chromatic(star(n)) == near_star_closed_form(n), f"Y(S_{n}) differs from the closed form"
    print("Star closed forms: ok")


def test_spanning_components():
    assert spanning_component_sizes(5, [(0, 1), (1, 2), (0, 2)]) == (3, 1, 1)
    assert spanning_component_sizes(4, []) == (1, 1, 1, 1)
    assert spanning_component_sizes(4, [(0, 1), (2, 3)]) == (2, 2)
    print("Spanning components: ok")


def test_disjoint_unions():
    for g, h in ((triangle(), triangle()), (path_graph(3), star(3)), (null_graph(1), triangle())):
        union = disjoint_union(g, h)
        assert chromatic_sym(union) == chromatic_sym(g) * chromatic_sym(h), f"X is not multiplicative on {union}"
    pair = disjoint_union(triangle(), triangle())
    assert near_chromatic(pair) != near_chromatic(triangle()) ** 2, "Y of two triangles is not Y_C3 squared"
    print("Disjoint unions: ok")


def test_coloring_oracle():
    for g in (triangle(), path_graph(4), star(4), complete_graph(3)):
        k = g.n
        assert coloring_monomial(g, k).as_poly() == specialize(chromatic_sym(g), k), f"Colourings differ for {g}"
    print("Colouring oracle: ok")


def test_membership():
    assert gamma_membership_classify(null_graph(3))["x_in_gamma"]
    verdict = gamma_membership_classify(path_graph(4))
    assert not verdict["x_in_gamma"] and not verdict["y_in_gamma"]
    assert not verdict["structural"]
    assert verdict["witness"] is not None
    verdict = gamma_membership_classify(disjoint_union(triangle(), null_graph(2)))
    assert verdict["y_in_gamma"] and verdict["structural"]
    assert is_star_or_triangle_with_null(star(5))
    assert not is_star_or_triangle_with_null(disjoint_union(star(2), star(2)))
    assert disjoint_edge_pairs(path_graph(4)) == 1
    assert disjoint_edge_pairs(complete_graph(4)) == 3
    # omega(X_G) is p-positive
    assert all(c >= 0 for c in omega(chromatic_sym(complete_graph(4))).terms.values())
    print("Membership: ok")


def test_parse_graph():
    g = parse_graph("union:triangle,null:2")
    assert g.n == 5 and len(g.edges) == 3
    assert parse_graph("n=3;edges=0-1,1-2") == path_graph(3)
    assert str(parse_graph("star:3")) == "n=3;edges=0-1,0-2"
    for bad in ("bogus", "star:x", "n=2;edges=0-5", "union:n=2;edges=0-1", "", "n=2;0-1"):
        try:
            parse_graph(bad)
            assert False, f"'{bad}' should not parse"
        except GraphSyntaxError:
            pass
    assert SimpleGraph.from_networkx(nx.cycle_graph(3)) == triangle()
    try:
        chromatic_sym(complete_graph(8))
        assert False, "28 edges exceed the default guard"
    except GuardError:
        pass
    print("Graph parsing: ok")


def test_basis_families():
    assert family_graph("b1", 3) == triangle()
    assert family_graph("b2", 3) == star(3)
    for family in ("b1", "b2"):
        for n in range(1, 9):
            report = y_basis_check(family, n)
            assert report["is_basis"], f"Y({family}) is not a basis in degree {n}: {report}"
    try:
        family_graph("b3", 1)
        assert False, "Unknown family"
    except GraphSyntaxError:
        pass
    print("Basis families: ok")


def test_sweep():
    assert len(all_graphs(4)) == 1 + 2 + 4 + 11
    assert len(all_graphs(3, up_to_isomorphism=False)) == 1 + 2 + 8
    report = chromatic_sweep(5)
    assert report["ok"], f"Sweep failures: {report['failures']}"
    assert report["counts"]["graphs"] == 52
    coefficient = near_chromatic(path_graph(4)).coefficient((2, 2))
    assert coefficient == Fraction(1)
    print("Sweep: ok")


if __name__ == "__main__":
    test_triangle_constants()
    test_star_closed_forms()
    test_spanning_components()
    test_disjoint_unions()
    test_coloring_oracle()
    test_membership()
    test_parse_graph()
    test_basis_families()
    test_sweep()
    print("\nAll tests passed!")
