"""Skew Schur Q-functions straight from marked shifted tableaux.

Letters of the alphabet 1' < 1 < 2' < 2 < ... are coded as integers:
value v marked is 2v-1, unmarked is 2v, so integer order is alphabet order.
The p-expansion of Q_{λ/μ} is recovered from tableau counts by an exact
linear solve, independently of the algebra module.
"""

from fractions import Fraction
from functools import lru_cache
import logging

import sympy

from gamma import linalg
from gamma.algebra import PExpansion, coefficient_rows, ribbon_p_expansion, variables
from gamma.combinat import compositions_of, odd_partitions, partitions, strict_partitions
from gamma.diagram import ShiftedSkewShape, diagonal_witness, ribbon_shape
from gamma.errors import InconsistentSystemError, ShapeError


def encode_letter(value, marked):
    return 2 * value - 1 if marked else 2 * value


def decode_letter(code):
    return (code + 1) // 2, code % 2 == 1


class MarkedShiftedTableau:
    def __init__(self, shape, filling):
        self.shape = shape
        self.filling = dict(filling)

    def letter(self, box):
        return decode_letter(self.filling[box])

    def content(self, k=None):
        top = max((decode_letter(c)[0] for c in self.filling.values()), default=0)
        counts = [0] * max(top, k or 0)
        for code in self.filling.values():
            counts[decode_letter(code)[0] - 1] += 1
        return tuple(counts)

    def is_valid(self):
        return all(_allowed(self.filling, box, code) for box, code in self.filling.items())

    def __str__(self):
        lines = []
        for i, cols in self.shape.rows().items():
            cells = []
            for j in cols:
                value, marked = self.letter((i, j))
                cells.append(f"{value}'" if marked else f"{value}")
            lines.append(f"{i}: " + " ".join(cells))
        return "\n".join(lines)


def _allowed(filling, box, code):
    i, j = box
    left = filling.get((i, j - 1))
    above = filling.get((i - 1, j))
    if left is not None and (code < left or (code == left and code % 2 == 1)):
        return False
    if above is not None and (code < above or (code == above and code % 2 == 0)):
        return False
    return True


def enumerate_tableaux(shape, max_value, content=None):
    """Yield every marked shifted tableau of the shape with values <= max_value.

    Boxes are filled row by row. When ``content`` is given only tableaux with
    exactly that many letters of each value are produced.
    """
    boxes = sorted(shape.boxes)
    remaining = None
    if content is not None:
        remaining = list(content) + [0] * max(0, max_value - len(content))
        if sum(remaining) != len(boxes):
            return
    filling = {}

    def fill(index):
        if index == len(boxes):
            yield MarkedShiftedTableau(shape, filling)
            return
        box = boxes[index]
        for code in range(1, 2 * max_value + 1):
            value = (code + 1) // 2
            if remaining is not None and remaining[value - 1] == 0:
                continue
            if not _allowed(filling, box, code):
                continue
            filling[box] = code
            if remaining is not None:
                remaining[value - 1] -= 1
            yield from fill(index + 1)
            if remaining is not None:
                remaining[value - 1] += 1
            del filling[box]

    yield from fill(0)


def _strip_markings(strip):
    """2^(components) markings when every box has at most one of left/below in the strip."""
    free = 0
    for i, j in strip:
        has_left = (i, j - 1) in strip
        has_below = (i + 1, j) in strip
        if has_left and has_below:
            return 0
        if not has_left and not has_below:
            free += 1
    return 2 ** free


def _addable(shape_boxes, filled, box):
    i, j = box
    for neighbour in ((i, j - 1), (i - 1, j)):
        if neighbour in shape_boxes and neighbour not in filled:
            return False
    return True


def _strips(shape_boxes, filled, size):
    """All box sets S of the given size with filled ∪ S an order ideal of the shape."""
    found = set()
    seen = set()

    def grow(current):
        if current in seen:
            return
        seen.add(current)
        if len(current) == size:
            found.add(current)
            return
        taken = filled | current
        for box in shape_boxes - taken:
            if _addable(shape_boxes, taken, box):
                grow(current | {box})

    grow(frozenset())
    return found


def count_tableaux(shape, content):
    """Number of marked shifted tableaux of the shape with the given content.

    The boxes holding value v form a border strip added to an order ideal; a
    strip with c components admits 2^c markings.
    """
    shape_boxes = shape.boxes
    content = tuple(content)
    if sum(content) != len(shape_boxes):
        return 0

    @lru_cache(maxsize=None)
    def count(filled, index):
        if index == len(content):
            return 1
        total = 0
        for strip in _strips(shape_boxes, filled, content[index]):
            weight = _strip_markings(strip)
            if weight:
                total += weight * count(filled | strip, index + 1)
        return total

    return count(frozenset(), 0)


class MonomialPolynomial:
    """Sparse polynomial in k variables: exponent vector -> rational."""

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {}
        for exponents, coef in (terms or {}).items():
            exponents = tuple(exponents) + (0,) * (k - len(exponents))
            if len(exponents) != k:
                raise ShapeError(f"Exponent vector {exponents} has more than {k} entries")
            if coef:
                self.terms[exponents] = self.terms.get(exponents, 0) + Fraction(coef)

    def coefficient(self, exponents):
        exponents = tuple(exponents) + (0,) * (self.k - len(exponents))
        return self.terms.get(exponents, Fraction(0))

    def degrees(self):
        return {sum(e) for e in self.terms}

    def is_symmetric_under(self, a, b):
        def swap(e):
            e = list(e)
            e[a], e[b] = e[b], e[a]
            return tuple(e)

        return all(self.terms.get(swap(e), 0) == c for e, c in self.terms.items())

    def as_poly(self):
        xs = variables(self.k)
        expression = sympy.Integer(0)
        for exponents, coef in self.terms.items():
            monomial = sympy.Integer(1)
            for x, e in zip(xs, exponents):
                monomial *= x ** e
            expression += sympy.Rational(coef.numerator, coef.denominator) * monomial
        return sympy.Poly(expression, *xs, domain="QQ")


def q_function_monomial(shape, k):
    """Q_{λ/μ}(x_1, ..., x_k) = Σ_T x^{c(T)} by explicit enumeration."""
    terms = {}
    for tableau in enumerate_tableaux(shape, k):
        exponents = tableau.content(k)
        terms[exponents] = terms.get(exponents, 0) + 1
    return MonomialPolynomial(k, terms)


def power_sum_monomial_coefficient(la, mu):
    """Coefficient of x^μ in p_λ: ways to drop the parts of λ into bins with sums μ."""
    la = tuple(la)

    @lru_cache(maxsize=None)
    def ways(index, room):
        if index == len(la):
            return 1 if not any(room) else 0
        total = 0
        for j, space in enumerate(room):
            if space >= la[index]:
                total += ways(index + 1, room[:j] + (space - la[index],) + room[j + 1:])
        return total

    return ways(0, tuple(mu))


def p_expansion_from_monomial(poly, n):
    """Solve Σ_{λ ∈ OP(n)} a_λ [x^μ] p_λ = [x^μ] poly over the dominant monomials μ ⊢ n."""
    basis = odd_partitions(n)
    rows = [mu for mu in partitions(n) if len(mu) <= poly.k]
    matrix = [[power_sum_monomial_coefficient(la, mu) for la in basis] for mu in rows]
    rhs = [poly.coefficient(mu) for mu in rows]
    try:
        solution = linalg.solve(matrix, rhs)
    except InconsistentSystemError as e:
        logging.error(f"Error recovering the p-expansion in degree {n}: {str(e)}")
        raise
    return PExpansion(dict(zip(basis, solution)), n)


def dominant_counts(shape):
    """Tableau counts for every partition content μ ⊢ |shape|."""
    return {mu: count_tableaux(shape, mu) for mu in partitions(shape.size)}


def skew_Q(shape):
    """Q_{λ/μ} in the power-sum basis, from tableau counts with k = n variables."""
    n = shape.size
    if n == 0:
        return PExpansion.one()
    poly = MonomialPolynomial(n, dominant_counts(shape))
    result = p_expansion_from_monomial(poly, n)
    logging.debug(f"skew_Q({shape}) = {result}")
    return result


def schur_q_basis_rank(n):
    """Rank of {Q_λ : λ ∈ SP(n)} over {p_λ : λ ∈ OP(n)}."""
    basis = odd_partitions(n)
    expansions = [skew_Q(ShiftedSkewShape(la)) for la in strict_partitions(n)]
    return linalg.rank(coefficient_rows(expansions, basis))


def non_ribbon_shapes(max_n, outer_slack=3):
    """Distinct shifted skew shapes of size 3..max_n holding a diagonal triple.

    Outer partitions range over strict λ with |λ| <= max_n + outer_slack;
    shapes equal up to translation are listed once.
    """
    seen = set()
    shapes = []
    for total in range(3, max_n + outer_slack + 1):
        for outer in strict_partitions(total):
            for inner_total in range(max(0, total - max_n), total - 2):
                for inner in strict_partitions(inner_total):
                    if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
                        continue
                    shape = ShiftedSkewShape(outer, inner)
                    if diagonal_witness(shape.boxes) is None:
                        continue
                    top = min(i for i, _ in shape.boxes)
                    left = min(j for _, j in shape.boxes)
                    key = frozenset((i - top, j - left) for i, j in shape.boxes)
                    if key not in seen:
                        seen.add(key)
                        shapes.append(shape)
    return shapes


def oracle_sweep(max_n, outer_slack=3):
    """Tableau oracle against the coarsening formula, plus the non-ribbon checks.

    Every composition of size <= max_n is realized as a shifted ribbon and its
    tableau-derived Q-function compared with ribbon_p_expansion. Every
    non-ribbon shape must have coefficient sum 0 and a negative coefficient.
    """
    ribbon_failures = []
    checked = 0
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            checked += 1
            if skew_Q(ribbon_shape(alpha)) != ribbon_p_expansion(alpha):
                ribbon_failures.append(alpha)
    shape_failures = []
    shapes = non_ribbon_shapes(max_n, outer_slack)
    for shape in shapes:
        q = skew_Q(shape)
        if sum(q.terms.values(), Fraction(0)) != 0 or all(c >= 0 for c in q.terms.values()):
            shape_failures.append(str(shape))
    logging.info(f"Oracle sweep up to {max_n}: {checked} ribbons, {len(shapes)} non-ribbon shapes")
    return {
        "max_n": max_n,
        "ribbons_checked": checked,
        "ribbon_failures": ribbon_failures,
        "shapes_checked": len(shapes),
        "shape_failures": shape_failures,
        "ok": not ribbon_failures and not shape_failures,
    }
