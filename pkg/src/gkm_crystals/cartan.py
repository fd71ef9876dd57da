"""Borcherds-Cartan data, weights written as ``lambda - alpha`` and quivers with loops.

Indices are referred to internally by their position ``0..n-1`` in the index
set; the string labels are only used for input and output.  Every public
function that takes an index also accepts a label string.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidQuiver,
    NonDominantWeight,
    NotSymmetric,
    OddOrPositiveDiagonal,
    PositiveOffDiagonal,
    UnknownIndex,
)


@dataclass(frozen=True)
class BorcherdsCartanDatum:
    """A validated symmetric even integral Borcherds-Cartan matrix.

    Build instances with :func:`validate_datum` (or :func:`cartan_from_quiver`);
    the constructor itself does not check the matrix.
    """

    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def indices(self) -> range:
        return range(self.rank)

    @property
    def real_indices(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.matrix[i][i] == 2)

    @property
    def imaginary_indices(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.matrix[i][i] <= 0)

    def is_real(self, i: int) -> bool:
        return self.matrix[i][i] == 2

    def is_imaginary(self, i: int) -> bool:
        return self.matrix[i][i] <= 0

    def a(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def index(self, i: int | str) -> int:
        """Return the position of ``i``, given either as a position or a label."""
        if isinstance(i, str):
            try:
                return self.labels.index(i)
            except ValueError:
                raise UnknownIndex(f"unknown index label {i!r}") from None
        if isinstance(i, int) and not isinstance(i, bool) and 0 <= i < self.rank:
            return i
        raise UnknownIndex(f"unknown index {i!r}")

    def label(self, i: int) -> str:
        return self.labels[i]

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [list(row) for row in self.matrix],
            "real": [self.labels[i] for i in self.real_indices],
            "imaginary": [self.labels[i] for i in self.imaginary_indices],
        }


def validate_datum(matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> BorcherdsCartanDatum:
    """Check the Borcherds-Cartan conditions and return the datum.

    >>> validate_datum([[2, -1], [-1, 2]]).real_indices
    (0, 1)
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("Cartan matrix must be square")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"Cartan matrix entries must be integers, got {v!r}")
    if labels is None:
        labels = [str(k + 1) for k in range(n)]
    labels = tuple(str(x) for x in labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError("labels must be distinct and one per row")
    for i in range(n):
        d = rows[i][i]
        if d > 2 or d % 2 != 0:
            raise OddOrPositiveDiagonal(f"a_{labels[i]}{labels[i]} = {d} is not in {{2, 0, -2, ...}}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"a_{labels[i]}{labels[j]} = {rows[i][j]} but a_{labels[j]}{labels[i]} = {rows[j][i]}")
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(f"a_{labels[i]}{labels[j]} = {rows[i][j]} > 0")
    return BorcherdsCartanDatum(tuple(tuple(r) for r in rows), labels)


@dataclass(frozen=True)
class Weight:
    """The weight ``lambda - sum_j k_j alpha_j``.

    ``base`` holds the pairings ``<h_i, lambda>`` of a dominant weight and
    ``root`` the coefficients ``k_j``.  Elementary letters use negative ``k_j``
    for positive multiples of a simple root.
    """

    base: tuple[int, ...]
    root: tuple[int, ...]

    def __post_init__(self):
        if len(self.base) != len(self.root):
            raise ValueError("base and root part must have the same length")
        if any(v < 0 for v in self.base):
            raise NonDominantWeight(f"base weight {self.base} is not dominant")

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank, (0,) * rank)

    @classmethod
    def dominant(cls, pairings: Sequence[int]) -> Weight:
        return cls(tuple(pairings), (0,) * len(pairings))

    def __add__(self, other: Weight) -> Weight:
        return Weight(
            tuple(a + b for a, b in zip(self.base, other.base)),
            tuple(a + b for a, b in zip(self.root, other.root)),
        )

    def minus_root(self, i: int, times: int = 1) -> Weight:
        root = list(self.root)
        root[i] += times
        return Weight(self.base, tuple(root))

    def plus_root(self, i: int, times: int = 1) -> Weight:
        return self.minus_root(i, -times)

    @property
    def height(self) -> int:
        return sum(self.root)


def pair(datum: BorcherdsCartanDatum, w: Weight, i: int | str) -> int:
    """``<h_i, lambda - alpha>`` for ``w = lambda - alpha``."""
    i = datum.index(i)
    row = datum.matrix[i]
    return w.base[i] - sum(a * k for a, k in zip(row, w.root))


def dominant_weight(datum: BorcherdsCartanDatum, values: Mapping[str, int] | Sequence[int]) -> Weight:
    """Build a dominant base weight from ``{label: <h_i, lambda>}`` or a list of pairings."""
    if isinstance(values, Mapping):
        pairings = [0] * datum.rank
        for key, v in values.items():
            pairings[datum.index(str(key))] = v
    else:
        pairings = list(values)
        if len(pairings) != datum.rank:
            raise ValueError(f"expected {datum.rank} pairings, got {len(pairings)}")
    for v in pairings:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"weight pairings must be integers, got {v!r}")
    if any(v < 0 for v in pairings):
        raise NonDominantWeight(f"weight {pairings} is not dominant")
    return Weight.dominant(pairings)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class QuiverPresentation:
    """A quiver ``(I, H)`` with a fixed-point-free involution and orientation.

    Arrows are listed once per pair: each ``h`` in ``orientation`` has a
    reversed partner ``bar[h]``.  Parallel arrows are allowed since arrows
    carry their own ids.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    bar: Mapping[str, str] = field(hash=False)
    orientation: frozenset[str]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidQuiver("duplicate vertex ids")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise InvalidQuiver("duplicate arrow ids")
        by_id = {a.id: a for a in self.arrows}
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidQuiver(f"arrow {a.id} has an endpoint outside the vertex set")
            hb = self.bar.get(a.id)
            if hb is None or hb not in by_id:
                raise InvalidQuiver(f"arrow {a.id} has no partner")
            if hb == a.id:
                raise InvalidQuiver(f"arrow {a.id} is its own partner")
            if self.bar.get(hb) != a.id:
                raise InvalidQuiver(f"pairing of {a.id} is not an involution")
            partner = by_id[hb]
            if partner.source != a.target or partner.target != a.source:
                raise InvalidQuiver(f"partner of {a.id} does not reverse it")
        omega = set(self.orientation)
        if not omega <= set(ids):
            raise InvalidQuiver("orientation names unknown arrows")
        for h in ids:
            if (h in omega) == (self.bar[h] in omega):
                raise InvalidQuiver(f"orientation must contain exactly one of {h}, {self.bar[h]}")

    @classmethod
    def from_pairs(cls, vertices: Iterable, pairs: Iterable[tuple[str, str, str]]) -> QuiverPresentation:
        """Build from ``(id, from, to)`` triples, one per arrow of the orientation.

        The reversed arrow of ``id`` gets the id ``id + "_bar"``.
        """
        vertices = tuple(str(v) for v in vertices)
        arrows, bar, omega = [], {}, set()
        for hid, src, tgt in pairs:
            hid, src, tgt = str(hid), str(src), str(tgt)
            hb = hid + "_bar"
            arrows.append(Arrow(hid, src, tgt))
            arrows.append(Arrow(hb, tgt, src))
            bar[hid], bar[hb] = hb, hid
            omega.add(hid)
        return cls(vertices, tuple(arrows), bar, frozenset(omega))

    @classmethod
    def from_json(cls, doc: Mapping) -> QuiverPresentation:
        try:
            vertices = doc["vertices"]
            pairs = [(p["id"], p["from"], p["to"]) for p in doc.get("arrow_pairs", [])]
        except (KeyError, TypeError) as exc:
            raise InvalidQuiver(f"malformed quiver document: {exc}") from None
        return cls.from_pairs(vertices, pairs)

    def arrow(self, hid: str) -> Arrow:
        for a in self.arrows:
            if a.id == hid:
                return a
        raise InvalidQuiver(f"unknown arrow {hid!r}")

    def sign(self, hid: str) -> int:
        """``+1`` on the orientation, ``-1`` on its reverse."""
        return 1 if hid in self.orientation else -1

    def loops_at(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.is_loop and a.source == v]

    def arrow_counts(self) -> Counter:
        return Counter((a.source, a.target) for a in self.arrows)


def cartan_from_quiver(q: QuiverPresentation) -> BorcherdsCartanDatum:
    """``a_ii = 2 - #loops at i`` and ``a_ij = -#arrows i -> j`` over all of ``H``."""
    counts = q.arrow_counts()
    matrix = []
    for v in q.vertices:
        row = []
        for w in q.vertices:
            c = counts.get((v, w), 0)
            row.append(2 - c if v == w else -c)
        matrix.append(row)
    return validate_datum(matrix, labels=q.vertices)
