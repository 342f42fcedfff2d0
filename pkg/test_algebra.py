#!/usr/bin/env python3
"""
Test script for power-sum arithmetic, q-functions and ribbon Schur Q-functions
"""

import sys
import os
import tempfile
from fractions import Fraction

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import sympy

from gamma import algebra
from gamma.algebra import (PExpansion, is_in_gamma, non_odd_support, omega, q_basis_rank, q_p_expansion,
                           q_product, q_relation_sum, ribbon_det, ribbon_p_expansion, ribbon_q_polynomial,
                           scalar_product, schur_hook_p, schur_onerow_p, specialize, variables)
from gamma.combinat import compositions_of, odd_partitions, partitions, z_of
from gamma.errors import PartitionError


def test_q_expansions():
    assert q_p_expansion(0) == PExpansion.one()
    assert q_p_expansion(1) == PExpansion({(1,): 2})
    assert q_p_expansion(2) == PExpansion({(1, 1): 2})
    q3 = q_p_expansion(3)
    assert q3 == PExpansion({(1, 1, 1): Fraction(4, 3), (3,): Fraction(2, 3)}), f"Got {q3}"
    assert q_p_expansion(4) == PExpansion({(1, 1, 1, 1): Fraction(2, 3), (3, 1): Fraction(4, 3)})
    try:
        q_p_expansion(-1)
        assert False, "q_n needs n >= 0"
    except PartitionError:
        pass
    print("q expansions: ok")


def test_arithmetic():
    p1 = PExpansion.power_sum((1,))
    p2 = PExpansion.power_sum((2,))
    assert (p1 * p1) == PExpansion.power_sum((1, 1))
    assert (p1 ** 3).coefficient((1, 1, 1)) == 1
    assert (p2 - p2).is_zero()
    assert str(PExpansion.zero()) == "0"
    assert str(PExpansion.one()) == "1"
    assert omega(p2) == -p2
    assert omega(omega(q_p_expansion(5))) == q_p_expansion(5)
    try:
        p1 + p2
        assert False, "Adding different degrees must fail"
    except PartitionError:
        pass
    try:
        p1 ** -1
        assert False, "Negative powers must fail"
    except PartitionError:
        pass
    for la in partitions(5):
        f = PExpansion.power_sum(la)
        assert scalar_product(f, f) == z_of(la), f"<p_la, p_la> != z_la for {la}"
    print("Arithmetic: ok")


def test_ribbon_expansion_text():
    f = ribbon_p_expansion((1, 2))
    assert str(f) == "8/3·p[1,1,1] − 2/3·p[3]", f"Got '{f}'"
    q = ribbon_q_polynomial((1, 2))
    assert str(q) == "q[2,1] − q[3]", f"Got '{q}'"
    assert ribbon_p_expansion((1, 1, 2)) == PExpansion({(1, 1, 1, 1): 2})
    assert ribbon_p_expansion((1, 1, 1)) == q_p_expansion(3)
    assert f.to_json() == {"3": "-2/3", "1,1,1": "8/3"}
    print("Ribbon expansion text: ok")


def test_identities_small():
    for n in range(1, 11):
        assert q_relation_sum(n).is_zero(), f"Alternating q relation fails at n={n}"
    for n in range(1, 7):
        for alpha in compositions_of(n):
            f = ribbon_p_expansion(alpha)
            assert ribbon_det(alpha) == f, f"Determinant differs for {alpha}"
            assert sum(f.terms.values(), Fraction(0)) == 2, f"Coefficient sum of r({alpha}) is not 2"
            assert is_in_gamma(f), f"r({alpha}) left Gamma"
    for n in range(1, 9):
        assert q_basis_rank(n) == len(odd_partitions(n)), f"q-products are not a basis at n={n}"
    assert q_product((2, 1)) == q_p_expansion(2) * q_p_expansion(1)
    print("Small identities: ok")


def test_schur_and_membership():
    s2 = schur_onerow_p(2)
    assert s2 == PExpansion({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert non_odd_support(s2) == (2,)
    assert not is_in_gamma(s2)
    assert scalar_product(q_p_expansion(3), schur_onerow_p(3)) == 2, "<q_3, s_(3)> is 2"
    assert schur_hook_p(2) == PExpansion({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    try:
        schur_hook_p(1)
        assert False, "s_(n-1,1) needs n >= 2"
    except PartitionError:
        pass
    print("Schur functions and membership: ok")


def test_specialize():
    x1, x2 = variables(2)
    poly = specialize(q_p_expansion(1), 2)
    assert poly == sympy.Poly(2 * x1 + 2 * x2, x1, x2, domain="QQ"), f"Got {poly}"
    poly = specialize(ribbon_p_expansion((1, 2)), 1)
    (x,) = variables(1)
    assert poly == sympy.Poly(2 * x ** 3, x, domain="QQ"), f"Got {poly}"
    print("Specialization: ok")


def test_q_cache_round_trip():
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "q.json")
        written = algebra.save_q_cache(path, max_n=8)
        assert written >= 9
        assert not algebra.q_cache_dirty(), "Saving clears the dirty flag"
        loaded = algebra.load_q_cache(path)
        assert loaded == written
        assert q_p_expansion(7) == algebra._compute_q(7)
    print("q cache: ok")


if __name__ == "__main__":
    test_q_expansions()
    test_arithmetic()
    test_ribbon_expansion_text()
    test_identities_small()
    test_schur_and_membership()
    test_specialize()
    test_q_cache_round_trip()
    print("\nAll tests passed!")
