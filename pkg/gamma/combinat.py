"""Integer partitions and compositions: statistics, orders and enumeration.

Partitions are weakly decreasing tuples of positive integers and compositions
are arbitrary tuples of positive integers. Both are plain tuple subclasses so
they hash, compare and sort like tuples; the canonical order for partition
keyed maps is descending lexicographic (``sorted(..., reverse=True)``).
"""

from collections import Counter
from functools import lru_cache
import logging

from scipy.special import factorial

from gamma.errors import PartitionError


def _parse_parts(text):
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise PartitionError(f"Cannot read parts from '{text}': expected comma-separated integers")


class Partition(tuple):
    """A weakly decreasing sequence of positive integers (possibly empty)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"Partition parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"Partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _make(cls, parts):
        # Caller guarantees a sorted tuple of positive ints.
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        return cls(_parse_parts(text))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicity(self, part):
        return self.count(part)

    def multiplicities(self):
        return Counter(self)

    def is_odd(self):
        return all(p % 2 == 1 for p in self)

    def is_strict(self):
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"Composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        return cls(_parse_parts(text))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)})"


def z_of(la):
    """z_λ = ∏_i i^{m_i} m_i!, the size of the centralizer of a permutation of cycle type λ."""
    result = 1
    for part, mult in Counter(la).items():
        result *= part ** mult * int(factorial(mult, exact=True))
    return result


@lru_cache(maxsize=None)
def _partitions(n, max_part, odd_only, strict):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        if odd_only and first % 2 == 0:
            continue
        next_max = first - 1 if strict else first
        for rest in _partitions(n - first, next_max, odd_only, strict):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n):
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise PartitionError(f"Cannot enumerate partitions of negative n={n}")
    return [Partition._make(p) for p in _partitions(n, n, False, False)]


def odd_partitions(n):
    """OP(n): partitions of n with every part odd, descending lexicographic."""
    if n < 0:
        raise PartitionError(f"Cannot enumerate partitions of negative n={n}")
    return [Partition._make(p) for p in _partitions(n, n, True, False)]


def strict_partitions(n):
    """SP(n): partitions of n into distinct parts, descending lexicographic."""
    if n < 0:
        raise PartitionError(f"Cannot enumerate partitions of negative n={n}")
    return [Partition._make(p) for p in _partitions(n, n, False, True)]


def sort_to_partition(alpha):
    return Partition._make(tuple(sorted(alpha, reverse=True)))


def coarsenings(alpha):
    """Every γ ≽ α: all ways of merging runs of consecutive parts.

    Listed from α itself (no merges) down to the one-part composition.
    """
    alpha = tuple(alpha)
    if not alpha:
        raise PartitionError("coarsenings needs a nonempty composition")
    gaps = len(alpha) - 1
    result = []
    # bit i of mask set: keep the break between part i and part i+1
    for mask in range((1 << gaps) - 1, -1, -1):
        parts = []
        run = alpha[0]
        for i in range(gaps):
            if mask >> i & 1:
                parts.append(run)
                run = alpha[i + 1]
            else:
                run += alpha[i + 1]
        parts.append(run)
        result.append(Composition(parts))
    return result


def composition_from_mask(n, mask):
    """Decode an (n-1)-bit gap mask; bit i set means a break after box i+1."""
    if n < 1:
        raise PartitionError(f"Compositions need n >= 1, got {n}")
    parts = []
    run = 1
    for i in range(n - 1):
        if mask >> i & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(parts)


def composition_mask(alpha):
    mask = 0
    position = 0
    for part in alpha[:-1]:
        position += part
        mask |= 1 << (position - 1)
    return mask


def compositions_of(n, start=0, stop=None):
    """Yield the compositions of n for masks in [start, stop), default all 2^(n-1)."""
    if n < 1:
        raise PartitionError(f"Compositions need n >= 1, got {n}")
    total = 1 << (n - 1)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield composition_from_mask(n, mask)


def is_refinement(la, mu):
    """True when the parts of λ split into blocks summing to the parts of μ."""
    la = sorted(la, reverse=True)
    mu = list(mu)
    if sum(la) != sum(mu):
        return False

    def place(index, remaining):
        if index == len(la):
            return all(r == 0 for r in remaining)
        part = la[index]
        tried = set()
        for j, room in enumerate(remaining):
            if room >= part and room not in tried:
                tried.add(room)
                remaining[j] -= part
                if place(index + 1, remaining):
                    remaining[j] += part
                    return True
                remaining[j] += part
        return False

    found = place(0, mu)
    logging.debug(f"is_refinement({la}, {tuple(mu)}) = {found}")
    return found
