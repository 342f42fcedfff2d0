"""Sweeps of the algebraic identities satisfied by q-functions and ribbons.

Each check returns the list of inputs where the identity failed; an empty
list means it held everywhere in range.
"""

from fractions import Fraction
import logging

from scipy.special import comb

from gamma.algebra import (PExpansion, q_p_expansion, q_product, q_relation_sum, ribbon_det,
                           ribbon_p_expansion, scalar_product)
from gamma.combinat import compositions_of, is_refinement, odd_partitions, partitions, z_of
from gamma.diagram import concat, near_concat, rotate, transpose, triangle


def relation_failures(max_n):
    """Σ_r (-1)^r q_r q_{n-r} = 0 for 1 <= n <= max_n."""
    return [n for n in range(1, max_n + 1) if not q_relation_sum(n).is_zero()]


def symmetry_failures(max_n):
    """r_α = r_{αᵗ} = r_{α°}."""
    failures = []
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            f = ribbon_p_expansion(alpha)
            if f != ribbon_p_expansion(transpose(alpha)) or f != ribbon_p_expansion(rotate(alpha)):
                failures.append(alpha)
    return failures


def determinant_failures(max_n):
    """The coarsening sum agrees with det A(α)."""
    return [alpha for n in range(1, max_n + 1) for alpha in compositions_of(n)
            if ribbon_det(alpha) != ribbon_p_expansion(alpha)]


def product_failures(max_n):
    """r_α r_β = r_{α·β} + r_{α⊙β}."""
    failures = []
    ribbons = [alpha for n in range(1, max_n + 1) for alpha in compositions_of(n)]
    for alpha in ribbons:
        for beta in ribbons:
            left = ribbon_p_expansion(alpha) * ribbon_p_expansion(beta)
            right = ribbon_p_expansion(concat(alpha, beta)) + ribbon_p_expansion(near_concat(alpha, beta))
            if left != right:
                failures.append((alpha, beta))
    return failures


def square_failures(max_n):
    """r_α² = 2 r_{α·αᵗ} = 2 r_{α⊙αᵗ}."""
    failures = []
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            square = ribbon_p_expansion(alpha) ** 2
            t = transpose(alpha)
            if (square != ribbon_p_expansion(concat(alpha, t)).scale(2)
                    or square != ribbon_p_expansion(near_concat(alpha, t)).scale(2)):
                failures.append(alpha)
    return failures


def triangle_q_form(n, k):
    """Σ_{i=0}^{k-1} (-1)^{k+i-1} q_{n-i} q_i."""
    total = PExpansion.zero(n)
    for i in range(k):
        term = q_p_expansion(n - i) * q_p_expansion(i)
        total = total + term if (k + i - 1) % 2 == 0 else total - term
    return total


def triangle_failures(max_n):
    """The q-form of r_{△_{n,k}} and the symmetry △_{n,k} ~ △_{n,n-k+1}."""
    failures = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            f = ribbon_p_expansion(triangle(n, k))
            if f != triangle_q_form(n, k):
                failures.append((n, k, "q-form"))
            if f != ribbon_p_expansion(triangle(n, n - k + 1)):
                failures.append((n, k, "reflection"))
    return failures


def refinement_failures(max_n):
    """⟨p_λ, q_μ⟩ = 0 whenever the odd partition λ does not refine μ."""
    failures = []
    for n in range(1, max_n + 1):
        for la in odd_partitions(n):
            p_la = PExpansion.power_sum(la)
            for mu in partitions(n):
                if not is_refinement(la, mu) and scalar_product(p_la, q_product(mu)) != 0:
                    failures.append((la, mu))
    return failures


def closed_form_coefficient(la, k):
    """Coefficient of p_λ in r_{△_{n,1}} (k = 1) or r_{△_{n,3}} (k = 3)."""
    base = Fraction(2 ** len(la), z_of(la))
    if k == 1:
        return base
    ones = la.multiplicity(1)
    if ones == 0:
        return base
    if ones <= 2:
        return Fraction(0)
    return comb(ones - 1, 2, exact=True) * base


def closed_form_failures(max_n):
    failures = []
    for n in range(1, max_n + 1):
        for k in (1, 3):
            if k > n:
                continue
            f = ribbon_p_expansion(triangle(n, k))
            for la in odd_partitions(n):
                if f.coefficient(la) != closed_form_coefficient(la, k):
                    failures.append((n, k, la))
    return failures


CHECKS = {
    "q relation": relation_failures,
    "transpose/rotation": symmetry_failures,
    "determinant": determinant_failures,
    "products": product_failures,
    "squares": square_failures,
    "triangles": triangle_failures,
    "refinement vanishing": refinement_failures,
    "closed forms": closed_form_failures,
}


def run_all(limits):
    """Run every check with its own size limit; returns {name: failures}."""
    results = {}
    for name, check in CHECKS.items():
        results[name] = check(limits[name])
        logging.info(f"Identity check '{name}' up to {limits[name]}: {len(results[name])} failure(s)")
    return results
