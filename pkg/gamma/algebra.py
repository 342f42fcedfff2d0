"""Exact symmetric-function arithmetic in the power-sum basis.

A PExpansion is a sparse map partition -> Fraction read as Σ c_λ p_λ. The
q-functions, ribbon Schur Q-functions (by the signed coarsening sum and by the
determinant), the two Schur specializations and the Γ-membership test all
produce and consume PExpansions.
"""

from fractions import Fraction
from functools import lru_cache
import json
import logging
import threading

import sympy

from gamma import linalg
from gamma.combinat import (Partition, coarsenings, odd_partitions, partitions,
                            sort_to_partition, z_of)
from gamma.errors import PartitionError
from gamma.textio import render_terms, terms_from_json, terms_to_json


class PExpansion:
    """Σ c_λ p_λ, homogeneous of one degree, with no zero coefficients stored."""

    __slots__ = ("degree", "_terms")

    def __init__(self, terms=None, degree=None):
        clean = {}
        for key, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef != 0:
                key = key if isinstance(key, Partition) else sort_to_partition(key)
                clean[key] = clean.get(key, 0) + coef
        clean = {k: v for k, v in clean.items() if v != 0}
        sizes = {sum(k) for k in clean}
        if len(sizes) > 1:
            raise PartitionError(f"Terms of mixed degree {sorted(sizes)} in one expansion")
        if sizes:
            found = sizes.pop()
            if degree is not None and degree != found:
                raise PartitionError(f"Terms have degree {found}, expected {degree}")
            degree = found
        self.degree = degree or 0
        self._terms = clean

    @classmethod
    def zero(cls, degree=0):
        return cls({}, degree)

    @classmethod
    def one(cls):
        return cls({Partition(): 1}, 0)

    @classmethod
    def power_sum(cls, la):
        la = sort_to_partition(la)
        return cls({la: 1}, sum(la))

    @property
    def terms(self):
        """Terms in canonical (descending lexicographic) key order."""
        return {key: self._terms[key] for key in sorted(self._terms, reverse=True)}

    def items(self):
        return self.terms.items()

    def coefficient(self, la):
        return self._terms.get(sort_to_partition(la), Fraction(0))

    def support(self):
        return sorted(self._terms, reverse=True)

    def is_zero(self):
        return not self._terms

    def _check_degree(self, other):
        if not self.is_zero() and not other.is_zero() and self.degree != other.degree:
            raise PartitionError(f"Cannot add degree {self.degree} to degree {other.degree}")
        return self.degree if not self.is_zero() else other.degree

    def __add__(self, other):
        degree = self._check_degree(other)
        merged = dict(self._terms)
        for key, coef in other._terms.items():
            merged[key] = merged.get(key, 0) + coef
        return PExpansion(merged, degree)

    def __neg__(self):
        return PExpansion({k: -v for k, v in self._terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        return PExpansion({k: v * factor for k, v in self._terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, PExpansion):
            return p_multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise PartitionError(f"Expansions have no negative powers, got exponent {exponent}")
        result = PExpansion.one()
        for _ in range(exponent):
            result = p_multiply(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, PExpansion):
            return NotImplemented
        return self._terms == other._terms and (self.is_zero() or self.degree == other.degree)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return render_terms(self._terms, "p")

    def __repr__(self):
        return f"PExpansion({str(self)})"

    def to_json(self):
        return terms_to_json(self._terms)


class QPolynomial:
    """Σ c_λ q_λ with integer coefficients, q_λ = ∏ q_{λ_i}."""

    def __init__(self, terms=None, degree=0):
        self.degree = degree
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def to_p(self):
        result = PExpansion.zero(self.degree)
        for key, coef in self.terms.items():
            result = result + q_product(key).scale(coef)
        return result

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.terms == other.terms

    def __str__(self):
        return render_terms(self.terms, "q")

    def __repr__(self):
        return f"QPolynomial({str(self)})"


def p_multiply(f, g):
    """p_λ·p_μ = p_{λ∪μ}, extended bilinearly."""
    product = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            key = sort_to_partition(a + b)
            product[key] = product.get(key, 0) + ca * cb
    return PExpansion(product, f.degree + g.degree)


_q_table = {}
_q_fresh = set()
_q_lock = threading.Lock()


def _compute_q(n):
    terms = {la: Fraction(2 ** len(la), z_of(la)) for la in odd_partitions(n)}
    return PExpansion(terms, n)


def q_p_expansion(n):
    """q_n = Σ_{λ ∈ OP(n)} 2^{ℓ(λ)} z_λ^{-1} p_λ, with q_0 = 1."""
    if n < 0:
        raise PartitionError(f"q_n needs n >= 0, got {n}")
    cached = _q_table.get(n)
    if cached is not None:
        return cached
    value = _compute_q(n)
    with _q_lock:
        if n not in _q_table:
            _q_fresh.add(n)
        cached = _q_table.setdefault(n, value)
    logging.debug(f"q_{n} computed with {len(value.terms)} terms")
    return cached


@lru_cache(maxsize=None)
def _q_product(key):
    result = PExpansion.one()
    for part in key:
        result = p_multiply(result, q_p_expansion(part))
    return result


def q_product(la):
    """q_λ = ∏ q_{λ_i}."""
    return _q_product(tuple(sorted(la, reverse=True)))


def q_cache_dirty():
    return bool(_q_fresh)


def load_q_cache(path):
    """Fill the q table from a JSON cache file. Returns the number of degrees loaded."""
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    loaded = 0
    for degree_text, terms in data.items():
        degree = int(degree_text)
        value = PExpansion(terms_from_json(terms), degree)
        with _q_lock:
            _q_table.setdefault(degree, value)
        loaded += 1
    logging.info(f"Loaded {loaded} q-expansions from {path}")
    return loaded


def save_q_cache(path, max_n=None):
    """Write every known q_n (and q_0..q_max_n when given) to a JSON cache file."""
    if max_n is not None:
        for n in range(max_n + 1):
            q_p_expansion(n)
    with _q_lock:
        snapshot = dict(_q_table)
        _q_fresh.clear()
    data = {str(n): snapshot[n].to_json() for n in sorted(snapshot)}
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
    logging.info(f"Saved {len(data)} q-expansions to {path}")
    return len(data)


def omega(f):
    """ω(p_r) = (-1)^{r-1} p_r, so p_λ picks up (-1)^{|λ|-ℓ(λ)}."""
    return PExpansion({k: v if (sum(k) - len(k)) % 2 == 0 else -v for k, v in f._terms.items()}, f.degree)


def scalar_product(f, g):
    """⟨f, g⟩ = Σ f_λ g_λ z_λ; zero between different degrees."""
    if f.degree != g.degree:
        return Fraction(0)
    total = Fraction(0)
    for key, coef in f._terms.items():
        other = g._terms.get(key)
        if other:
            total += coef * other * z_of(key)
    return total


def ribbon_q_polynomial(alpha):
    """r_α = (-1)^{ℓ(α)} Σ_{γ ≽ α} (-1)^{ℓ(γ)} q_{λ(γ)}, collected on sorted keys."""
    terms = {}
    length = len(alpha)
    for gamma in coarsenings(alpha):
        key = sort_to_partition(gamma)
        sign = 1 if (length + len(gamma)) % 2 == 0 else -1
        terms[key] = terms.get(key, 0) + sign
    return QPolynomial(terms, sum(alpha))


@lru_cache(maxsize=None)
def _ribbon_p(alpha):
    return ribbon_q_polynomial(alpha).to_p()


def ribbon_p_expansion(alpha):
    return _ribbon_p(tuple(alpha))


def _det(matrix):
    """Cofactor expansion along the first column; None entries are zero."""
    size = len(matrix)
    minors = {}

    # a minor keeps the listed rows and the last len(rows) columns
    def minor_det(rows):
        if not rows:
            return PExpansion.one()
        if rows in minors:
            return minors[rows]
        col = size - len(rows)
        total = PExpansion.zero()
        for position, row in enumerate(rows):
            entry = matrix[row][col]
            if entry is None:
                continue
            term = p_multiply(entry, minor_det(rows[:position] + rows[position + 1:]))
            total = total - term if position % 2 else total + term
        minors[rows] = total
        return total

    return minor_det(tuple(range(size)))


def ribbon_det(alpha):
    """det A(α): q_{α_i+...+α_j} on and above the diagonal, q_0 = 1 just below it."""
    length = len(alpha)
    matrix = []
    for i in range(length):
        row = []
        for j in range(length):
            if i <= j:
                row.append(q_p_expansion(sum(alpha[i:j + 1])))
            elif i - j == 1:
                row.append(PExpansion.one())
            else:
                row.append(None)
        matrix.append(row)
    return _det(matrix)


def schur_onerow_p(n):
    """s_(n) = Σ_{λ ⊢ n} z_λ^{-1} p_λ."""
    return PExpansion({la: Fraction(1, z_of(la)) for la in partitions(n)}, n)


def schur_hook_p(n):
    """s_(n-1,1) = Σ_{λ ⊢ n} z_λ^{-1} (m_1(λ) - 1) p_λ."""
    if n < 2:
        raise PartitionError(f"s_(n-1,1) needs n >= 2, got {n}")
    return PExpansion({la: Fraction(la.multiplicity(1) - 1, z_of(la)) for la in partitions(n)}, n)


def variables(k):
    return sympy.symbols(f"x1:{k + 1}")


def specialize(f, k):
    """f with p_r ↦ x_1^r + ... + x_k^r, as an exact sympy polynomial."""
    if k < 1:
        raise PartitionError(f"specialize needs k >= 1 variables, got {k}")
    xs = variables(k)
    power_sums = {}
    expression = sympy.Integer(0)
    for key, coef in f._terms.items():
        monomial = sympy.Integer(1)
        for part in key:
            if part not in power_sums:
                power_sums[part] = sum(x ** part for x in xs)
            monomial *= power_sums[part]
        expression += sympy.Rational(coef.numerator, coef.denominator) * monomial
    return sympy.Poly(sympy.expand(expression), *xs, domain="QQ")


def non_odd_support(f):
    """The first support partition (canonical order) with an even part, or None."""
    for key in f.support():
        if not key.is_odd():
            return key
    return None


def is_in_gamma(f):
    return non_odd_support(f) is None


def q_relation_sum(n):
    """Σ_{r=0}^{n} (-1)^r q_r q_{n-r}."""
    total = PExpansion.zero(n)
    for r in range(n + 1):
        term = p_multiply(q_p_expansion(r), q_p_expansion(n - r))
        total = total + term if r % 2 == 0 else total - term
    return total


def coefficient_rows(expansions, basis):
    return [[f.coefficient(la) for la in basis] for f in expansions]


def q_basis_rank(n):
    """Rank of {q_λ : λ ∈ OP(n)} in the coordinates {p_λ : λ ∈ OP(n)}."""
    basis = odd_partitions(n)
    return linalg.rank(coefficient_rows([q_product(la) for la in basis], basis))
