"""p-positivity of ribbon Schur Q-functions and the verifiers built on it.

Ribbons related by transpose and rotation share one Q-function, so every
sweep works on canonical representatives (the lexicographic minimum of the
four-element orbit).
"""

from fractions import Fraction
import itertools
import logging
import time

from gamma.algebra import PExpansion, ribbon_p_expansion
from gamma.combinat import composition_from_mask, partitions
from gamma.diagram import (Ribbon, basic_blocks, comp_transpose, corners, head_length,
                           rotate, tail_length, transpose, triangle)
from gamma.errors import ShapeError, check_guard
from gamma.parallel import batched, run_chunks, split_range
from gamma.textio import format_parts, format_rational

RIBBON_GUARD = 16
TRIANGLE_GUARD = 16
CONJECTURE_GUARD = 14
DISCONNECTED_GUARD = 10

DOUBLERS = (Ribbon((2,)), Ribbon((1, 1)))


def orbit(r):
    r = Ribbon(r)
    t = transpose(r)
    return {r, t, rotate(r), rotate(t)}


def canonical_ribbon(r):
    return min(orbit(r))


def first_negative(f):
    """(partition, coefficient) of the first negative term in canonical order, or None."""
    for key, coef in f.items():
        if coef < 0:
            return key, coef
    return None


class PositivityReport:
    def __init__(self, ribbon, witness, canonical_form):
        self.ribbon = ribbon
        self.witness = witness
        self.canonical_form = canonical_form

    @property
    def verdict(self):
        return "negative" if self.witness else "positive"

    @property
    def positive(self):
        return self.witness is None

    def to_dict(self):
        return {
            "ribbon": format_parts(self.ribbon),
            "verdict": self.verdict,
            "witness": None if self.witness is None else {
                "partition": format_parts(self.witness[0]),
                "coefficient": format_rational(self.witness[1]),
            },
            "canonical_form": format_parts(self.canonical_form),
        }


def is_p_positive(r, max_n=RIBBON_GUARD):
    r = Ribbon(r)
    check_guard("ribbon size", r.size, max_n)
    witness = first_negative(ribbon_p_expansion(r))
    return PositivityReport(r, witness, canonical_ribbon(r))


def predicted_triangle_positive(n, k):
    """The case split of the triangle classification."""
    if not 1 <= k <= n:
        raise ShapeError(f"triangle needs 1 <= k <= n, got n={n}, k={k}")
    if n <= 2:
        return True
    if n % 2:
        return k in (1, 3, n - 2, n)
    return k in (1, 3, n // 2, n // 2 + 1, n - 2, n)


def classify_triangle(n, k, max_n=TRIANGLE_GUARD):
    check_guard("triangle size", n, max_n)
    predicted = predicted_triangle_positive(n, k)
    computed = is_p_positive(triangle(n, k), max_n).positive
    return {"n": n, "k": k, "predicted": predicted, "computed": computed, "agree": predicted == computed}


def triangle_sweep(max_n, only_n=None, guard=TRIANGLE_GUARD):
    sizes = [only_n] if only_n else range(1, max_n + 1)
    rows = []
    for n in sizes:
        for k in range(1, n + 1):
            rows.append(classify_triangle(n, k, guard))
    disagreements = [row for row in rows if not row["agree"]]
    logging.info(f"Triangle sweep: {len(rows)} triangles, {len(disagreements)} disagreements")
    return {"rows": rows, "disagreements": disagreements, "ok": not disagreements}


def constructible_derivations(n):
    """Every (D, B, αs) with D = α_k • ... • α_1 • B, B ∈ 𝔅_m, m·2^k = n, k >= 1."""
    derivations = []
    k = 1
    while n % (2 ** k) == 0:
        m = n // 2 ** k
        for block in sorted(basic_blocks(m)):
            for sequence in itertools.product(DOUBLERS, repeat=k):
                d = block
                for alpha in sequence:
                    d = comp_transpose(alpha, d)
                derivations.append((d, block, sequence))
        k += 1
    return derivations


def constructible_set(n):
    return {canonical_ribbon(d) for d, _, _ in constructible_derivations(n)}


def predicted_positive_set(n):
    return {canonical_ribbon(b) for b in basic_blocks(n)} | constructible_set(n)


def power_identity_check(n):
    """r_D = 2^{-k} (r_B)^{2^k} for every derivation of size n; returns failures."""
    failures = []
    for d, block, sequence in constructible_derivations(n):
        k = len(sequence)
        expected = (ribbon_p_expansion(block) ** (2 ** k)).scale(Fraction(1, 2 ** k))
        if ribbon_p_expansion(d) != expected:
            failures.append((d, block, sequence))
    return failures


class ConjectureReport:
    def __init__(self, n, p_positive_set, predicted_set, elapsed_ms):
        self.n = n
        self.p_positive_set = p_positive_set
        self.predicted_set = predicted_set
        self.elapsed_ms = elapsed_ms

    @property
    def missing(self):
        return sorted(self.predicted_set - self.p_positive_set)

    @property
    def extra(self):
        return sorted(self.p_positive_set - self.predicted_set)

    @property
    def counterexamples(self):
        return self.missing + self.extra

    @property
    def match(self):
        return not self.missing and not self.extra

    def to_dict(self):
        return {
            "n": self.n,
            "match": self.match,
            "p_positive": [format_parts(r) for r in sorted(self.p_positive_set)],
            "predicted": [format_parts(r) for r in sorted(self.predicted_set)],
            "missing": [format_parts(r) for r in self.missing],
            "extra": [format_parts(r) for r in self.extra],
            "elapsed_ms": self.elapsed_ms,
        }


def _positive_canonicals(task):
    n, lo, hi = task
    found = set()
    for mask in range(lo, hi):
        alpha = Ribbon(composition_from_mask(n, mask))
        if canonical_ribbon(alpha) != alpha:
            continue
        if first_negative(ribbon_p_expansion(alpha)) is None:
            found.add(alpha)
    return found


def verify_conjecture(n, workers=1, progress=False, max_n=CONJECTURE_GUARD):
    """Compare the p-positive canonical ribbons of size n with 𝔅_n ∪ constructible."""
    check_guard("conjecture size", n, max_n)
    started = time.monotonic()
    chunks = [(n, lo, hi) for lo, hi in split_range(0, 2 ** (n - 1), max(1, workers) * 8)]
    positive = set()
    for found in run_chunks(_positive_canonicals, chunks, workers, progress, f"conjecture n={n}"):
        positive |= found
    elapsed_ms = int((time.monotonic() - started) * 1000)
    report = ConjectureReport(n, positive, predicted_positive_set(n), elapsed_ms)
    logging.info(f"Conjecture n={n}: {len(positive)} positive canonical ribbons, match={report.match}")
    return report


def _m1_sum(f):
    return sum((key.multiplicity(1) * coef for key, coef in f.items()), Fraction(0))


def corner_identity_check(r):
    """The coefficient-sum, c_(n) and corner-count identities of a connected ribbon."""
    r = Ribbon(r)
    f = ribbon_p_expansion(r)
    n, length, c = r.size, len(r), corners(r)
    checks = {}
    total = sum(f.terms.values(), Fraction(0))
    checks["sum"] = {"applicable": True, "value": total, "expected": Fraction(2)}
    if n % 2:
        expected = Fraction(2 * (-1) ** (length + 1), n)
        checks["c_n"] = {"applicable": True, "value": f.coefficient((n,)), "expected": expected}
    else:
        checks["c_n"] = {"applicable": False}
    if r[0] == 1 and r[-1] > 1:
        checks["m1_sum"] = {"applicable": True, "value": _m1_sum(f), "expected": Fraction(8 * c), "case": "last row long"}
    elif r[0] == 1 and r[-1] == 1 and n >= 2:
        checks["m1_sum"] = {"applicable": True, "value": _m1_sum(f), "expected": Fraction(8 * c - 4), "case": "last row single"}
    else:
        checks["m1_sum"] = {"applicable": False}
    for check in checks.values():
        if check["applicable"]:
            check["holds"] = check["value"] == check["expected"]
    ok = all(check.get("holds", True) for check in checks.values())
    return {"ribbon": r, "corners": c, "checks": checks, "ok": ok}


def many_corners_check(r, max_n=RIBBON_GUARD):
    """c(D) > 1/2 + n/4 forces a negative coefficient; vacuous otherwise."""
    r = Ribbon(r)
    hypothesis = corners(r) > Fraction(1, 2) + Fraction(r.size, 4)
    if not hypothesis:
        return {"ribbon": r, "hypothesis": False, "holds": True}
    report = is_p_positive(r, max_n)
    return {"ribbon": r, "hypothesis": True, "verdict": report.verdict, "holds": not report.positive}


def odd_size_case(r):
    """Which negativity case covers an odd-size ribbon with a single top box, or None."""
    if len(r) % 2 == 0:
        return "even length"
    k, m = head_length(r), tail_length(r)
    if r[-1] > 1 and k % 2 == 0:
        return "long last row, even head"
    if r[-1] > 1 and k % 2 == 1 and m % 2 == 0:
        return "long last row, odd head, even tail"
    if r[-1] == 1 and k == m:
        return "single last box, head equals tail"
    return None


def odd_size_theorems_check(r, max_n=RIBBON_GUARD):
    r = Ribbon(r)
    if r.size % 2 == 0:
        raise ShapeError(f"odd-size checks need an odd number of boxes, got {r.size}")
    if r[0] != 1:
        raise ShapeError(f"odd-size checks need a single box in the first row, got {r}")
    report = is_p_positive(r, max_n)
    if r in basic_blocks(r.size):
        return {"ribbon": r, "in_blocks": True, "case": None, "asserted": False,
                "verdict": report.verdict, "holds": True}
    case = odd_size_case(r)
    asserted = case is not None
    holds = not report.positive if asserted else True
    return {"ribbon": r, "in_blocks": False, "case": case, "asserted": asserted,
            "verdict": report.verdict, "holds": holds}


def canonical_ribbons(n):
    return sorted({canonical_ribbon(composition_from_mask(n, mask)) for mask in range(2 ** (n - 1))})


def component_multisets(max_n):
    """Multisets of at least two canonical ribbons with total size <= max_n."""
    by_size = {s: canonical_ribbons(s) for s in range(1, max_n + 1)}
    results = []
    for total in range(2, max_n + 1):
        for sizes in partitions(total):
            if len(sizes) < 2:
                continue
            pools = []
            for size, count in sorted(sizes.multiplicities().items()):
                pools.append(list(itertools.combinations_with_replacement(by_size[size], count)))
            for choice in itertools.product(*pools):
                results.append(tuple(r for group in choice for r in group))
    return results


def _disconnected_chunk(multisets):
    rows = []
    for components in multisets:
        product = PExpansion.one()
        factors_positive = True
        for r in components:
            f = ribbon_p_expansion(r)
            factors_positive = factors_positive and first_negative(f) is None
            product = product * f
        product_positive = first_negative(product) is None
        rows.append((components, factors_positive, product_positive))
    return rows


def verify_disconnected_conjecture(max_n, workers=1, progress=False, guard=DISCONNECTED_GUARD):
    """Product of ribbon Q-functions is p-positive iff every factor is."""
    check_guard("disconnected total size", max_n, guard)
    multisets = component_multisets(max_n)
    logging.info(f"Disconnected sweep over {len(multisets)} multisets of total size <= {max_n}")
    checked = 0
    counterexamples = []
    for rows in run_chunks(_disconnected_chunk, batched(multisets, 200), workers, progress, "disconnected"):
        for components, factors_positive, product_positive in rows:
            checked += 1
            if factors_positive != product_positive:
                counterexamples.append(components)
    counterexamples.sort()
    if counterexamples:
        logging.warning(f"Disconnected conjecture: {len(counterexamples)} counterexample(s) up to {max_n}")
    return {
        "max_n": max_n,
        "checked": checked,
        "counterexamples": [[format_parts(r) for r in c] for c in counterexamples],
        "ok": not counterexamples,
    }


def single_top_ribbons(max_n):
    for n in range(1, max_n + 1):
        for mask in range(2 ** (n - 1)):
            alpha = Ribbon(composition_from_mask(n, mask))
            if alpha[0] == 1:
                yield alpha


def corner_sweep(max_n):
    """Ribbons with a single top box where a corner identity or the corner bound fails."""
    failures = []
    for alpha in single_top_ribbons(max_n):
        if not corner_identity_check(alpha)["ok"]:
            failures.append((alpha, "corner identities"))
        if not many_corners_check(alpha, None)["holds"]:
            failures.append((alpha, "many corners"))
    return failures


def odd_size_sweep(max_n):
    """(failures, uncovered) over odd-size ribbons with a single top box.

    ``uncovered`` lists ribbons outside the blocks that no case reaches,
    with their verdicts; they are reported, never asserted.
    """
    failures = []
    uncovered = []
    for alpha in single_top_ribbons(max_n):
        if alpha.size % 2 == 0:
            continue
        report = odd_size_theorems_check(alpha, None)
        if not report["holds"]:
            failures.append(alpha)
        elif not report["in_blocks"] and not report["asserted"]:
            uncovered.append((alpha, report["verdict"]))
    return failures, uncovered