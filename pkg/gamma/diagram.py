"""Ribbons (border strips) and shifted skew diagrams.

A ribbon is stored as its row composition, top row first. Box sets use the
English convention: row 1 is the top row, columns grow to the right, and each
row ends directly below the first box of the row above it.
"""

import logging

import networkx as nx

from gamma.combinat import Composition, Partition
from gamma.errors import PartitionError, ShapeError

SAME_ROW = "⊙"
NEW_ROW = "·"


class Ribbon(Composition):
    """A connected border strip, identified with its row composition."""

    def __new__(cls, parts=()):
        self = super().__new__(cls, parts)
        if not self:
            raise ShapeError("A ribbon needs at least one box")
        return self


def star_word(r):
    """The gap word between consecutive boxes, e.g. (1,3) -> '·⊙⊙'."""
    word = []
    for i, part in enumerate(r):
        if i:
            word.append(NEW_ROW)
        word.extend(SAME_ROW * (part - 1))
    return "".join(word)


def from_star_word(word):
    parts = [1]
    for symbol in word:
        if symbol == SAME_ROW:
            parts[-1] += 1
        elif symbol == NEW_ROW:
            parts.append(1)
        else:
            raise ShapeError(f"Unknown symbol '{symbol}' in star word")
    return Ribbon(parts)


_SWAP = {SAME_ROW: NEW_ROW, NEW_ROW: SAME_ROW}


def transpose(r):
    """Reflection in the main diagonal: reverse the star word and swap its symbols."""
    return from_star_word("".join(_SWAP[s] for s in reversed(star_word(r))))


def rotate(r):
    """Antipodal (180 degree) rotation."""
    return Ribbon(tuple(reversed(r)))


def concat(a, b):
    return Ribbon(tuple(a) + tuple(b))


def near_concat(a, b):
    return Ribbon(tuple(a[:-1]) + (a[-1] + b[0],) + tuple(b[1:]))


def comp_transpose(alpha, d):
    """α•D: D and Dᵗ alternate along α's star word, joined by its · and ⊙."""
    d = Ribbon(d)
    dt = transpose(d)
    result = d
    for index, symbol in enumerate(star_word(alpha), start=1):
        piece = d if index % 2 == 0 else dt
        result = concat(result, piece) if symbol == NEW_ROW else near_concat(result, piece)
    return result


def triangle(n, k):
    """△_{n,k} = (1^{k-1}, n-k+1)."""
    if not 1 <= k <= n:
        raise ShapeError(f"triangle needs 1 <= k <= n, got n={n}, k={k}")
    return Ribbon((1,) * (k - 1) + (n - k + 1,))


def basic_blocks(n):
    """𝔅_n: the one-row ribbon, its transpose, and △_{n,3} under transpose and rotation."""
    if n < 1:
        raise ShapeError(f"basic blocks need n >= 1, got {n}")
    row = triangle(n, 1)
    blocks = {row, transpose(row)}
    if n >= 3:
        t3 = triangle(n, 3)
        t3t = transpose(t3)
        blocks.update({t3, t3t, rotate(t3), rotate(t3t)})
    return frozenset(blocks)


def ribbon_boxes(r):
    """Box set {(row, col)} of the ribbon, rows numbered from 1 at the top."""
    boxes = set()
    start = 1
    for row in range(len(r), 0, -1):
        part = r[row - 1]
        for col in range(start, start + part):
            boxes.add((row, col))
        start = start + part - 1
    return frozenset(boxes)


def _rows_of(boxes):
    rows = {}
    for i, j in boxes:
        rows.setdefault(i, []).append(j)
    return {i: sorted(cols) for i, cols in sorted(rows.items())}


def ribbon_from_boxes(boxes):
    """Read a connected border strip back into its composition."""
    rows = _rows_of(boxes)
    if not rows:
        raise ShapeError("Empty box set is not a ribbon")
    indices = list(rows)
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise ShapeError(f"Rows {indices} are not consecutive")
    for i, cols in rows.items():
        if cols != list(range(cols[0], cols[0] + len(cols))):
            raise ShapeError(f"Row {i} has a gap: columns {cols}")
    for upper, lower in zip(indices, indices[1:]):
        if rows[upper][0] != rows[lower][-1]:
            raise ShapeError(f"Rows {upper} and {lower} do not meet in a single column")
    return Ribbon(len(rows[i]) for i in indices)


def _normalize(boxes):
    top = min(i for i, _ in boxes)
    left = min(j for _, j in boxes)
    return frozenset((i - top + 1, j - left + 1) for i, j in boxes)


def reflect_boxes(boxes):
    return _normalize({(j, i) for i, j in boxes})


def rotate_boxes(boxes):
    return _normalize({(-i, -j) for i, j in boxes})


def corners(r):
    """Boxes with a box directly above and none directly below."""
    boxes = ribbon_boxes(r)
    return sum(1 for i, j in boxes if (i - 1, j) in boxes and (i + 1, j) not in boxes)


def head_length(r):
    for index, part in enumerate(r, start=1):
        if part >= 2:
            return index
    raise ShapeError(f"head length is undefined for the one-column ribbon {r}")


def tail_length(r):
    if r[-1] > 1:
        return r[-1]
    length = len(r)
    for j in range(1, length + 1):
        if r[length - j] >= 2:
            return j
    raise ShapeError(f"tail length is undefined for the one-column ribbon {r}")


class ShiftedSkewShape:
    """The (shifted or plain) skew diagram λ/μ.

    Row i of the shifted diagram occupies columns i+μ_i .. i+λ_i-1; the plain
    diagram occupies μ_i+1 .. λ_i.
    """

    def __init__(self, outer, inner=(), shifted=True):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        self.shifted = shifted
        if shifted and not (self.outer.is_strict() and self.inner.is_strict()):
            raise ShapeError(f"Shifted shapes need strict partitions, got {self.outer}/{self.inner}")
        if len(self.inner) > len(self.outer) or any(m > l for m, l in zip(self.inner, self.outer)):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")
        self.boxes = self._build_boxes()

    @classmethod
    def parse(cls, text, shifted=True):
        outer, _, inner = text.partition("/")
        try:
            return cls(Partition.parse(outer), Partition.parse(inner), shifted=shifted)
        except PartitionError as e:
            raise ShapeError(f"Cannot read shape '{text}': {str(e)}")

    def _build_boxes(self):
        boxes = set()
        for i, top in enumerate(self.outer, start=1):
            low = self.inner[i - 1] if i <= len(self.inner) else 0
            if self.shifted:
                cols = range(i + low, i + top)
            else:
                cols = range(low + 1, top + 1)
            boxes.update((i, j) for j in cols)
        return frozenset(boxes)

    @property
    def size(self):
        return len(self.boxes)

    def rows(self):
        return _rows_of(self.boxes)

    def __eq__(self, other):
        return isinstance(other, ShiftedSkewShape) and self.boxes == other.boxes

    def __hash__(self):
        return hash(self.boxes)

    def __str__(self):
        prefix = "" if self.shifted else "unshifted "
        return f"{prefix}{self.outer}/{self.inner}"

    def __repr__(self):
        return f"ShiftedSkewShape({tuple(self.outer)}, {tuple(self.inner)}, shifted={self.shifted})"


def _box_graph(boxes):
    graph = nx.Graph()
    graph.add_nodes_from(boxes)
    for i, j in boxes:
        for neighbour in ((i + 1, j), (i, j + 1)):
            if neighbour in boxes:
                graph.add_edge((i, j), neighbour)
    return graph


def diagonal_witness(boxes):
    """First triple (i,j),(i,j+1),(i+1,j+1) in the box set, or None."""
    for i, j in sorted(boxes):
        if (i + 1, j + 1) in boxes and (i, j + 1) in boxes:
            return ((i, j), (i, j + 1), (i + 1, j + 1))
    return None


def shape_ops(shape):
    """Connectivity, components, ribbon reading and the diagonal witness of a shape."""
    boxes = shape.boxes
    graph = _box_graph(boxes)
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    connected = len(components) == 1
    witness = diagonal_witness(boxes)
    as_ribbon = None
    if connected and witness is None:
        as_ribbon = ribbon_from_boxes(boxes)
    logging.debug(f"shape_ops({shape}): {len(components)} component(s), ribbon={as_ribbon}")
    return {
        "is_connected": connected,
        "components": components,
        "as_ribbon": as_ribbon,
        "has_2x2_witness": witness,
    }


def ribbon_shape(r):
    """Shifted realization of a ribbon: λ_i = α_i + ... + α_ℓ, μ = (λ_2, ..., λ_ℓ)."""
    return stacked_shape([r])


def stacked_shape(ribbons):
    """One shifted skew shape holding the ribbons as separate components.

    Each ribbon sits strictly north-east of the next, sharing no row or column.
    """
    if not ribbons:
        raise ShapeError("stacked_shape needs at least one ribbon")
    rows = []
    for r in ribbons:
        r = Ribbon(r)
        rows.extend((part, index == len(r) - 1) for index, part in enumerate(r))
    outer = []
    inner = []
    below = 0
    # build from the bottom row up; a one-column gap separates components
    for position in range(len(rows) - 1, -1, -1):
        part, ends_component = rows[position]
        gap = 1 if ends_component and position != len(rows) - 1 else 0
        low = below + gap
        inner.append(low)
        outer.append(low + part)
        below = low + part
    outer.reverse()
    inner.reverse()
    return ShiftedSkewShape(outer, [m for m in inner if m > 0])
