"""The abstract crystal interface, axiom and morphism checkers, component generation.

An element of a crystal is any hashable immutable value with a
``sort_key()`` method returning a tuple; ``None`` plays the role of the
absorbing element ``0`` in ``B ⊔ {0}``.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping

from .cartan import BorcherdsCartanDatum, Weight, pair
from .extint import NEG_INF, ExtendedInt

Element = Hashable


class Crystal(ABC):
    """Abstract crystal over a fixed Borcherds-Cartan datum.

    Subclasses implement ``wt``, ``epsilon``, ``phi``, ``e`` and ``f``.
    ``e`` and ``f`` return ``None`` for the zero element.
    """

    def __init__(self, datum: BorcherdsCartanDatum):
        self.datum = datum

    @abstractmethod
    def wt(self, b) -> Weight: ...

    @abstractmethod
    def epsilon(self, i: int, b) -> ExtendedInt: ...

    @abstractmethod
    def phi(self, i: int, b) -> ExtendedInt: ...

    @abstractmethod
    def e(self, i: int, b): ...

    @abstractmethod
    def f(self, i: int, b): ...

    def wt_i(self, i: int, b) -> int:
        return pair(self.datum, self.wt(b), i)

    def stats(self, i: int, b) -> tuple[Weight, ExtendedInt, ExtendedInt]:
        return self.wt(b), self.epsilon(i, b), self.phi(i, b)

    def serialize(self, b) -> str:
        """Canonical string form of an element, used as node id."""
        return str(b)

    def element_to_json(self, b) -> Any:
        return self.serialize(b)


def sort_key(b) -> tuple:
    return b.sort_key()


# ---------------------------------------------------------------- axioms


@dataclass
class Violation:
    axiom: str
    element: Any
    index: int
    detail: str

    def __str__(self):
        return f"axiom {self.axiom} at index {self.index}: {self.detail} [{self.element!r}]"


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, b, i, detail):
        self.violations.append(Violation(axiom, b, i, detail))

    def __bool__(self):
        return self.ok


def check_axioms(crystal: Crystal, fragment: Iterable, indices: Iterable[int] | None = None) -> AxiomReport:
    """Check the seven crystal axioms on every element of ``fragment``.

    Conditions that involve ``e_i b`` or ``f_i b`` are only evaluated when that
    partner belongs to the fragment; the others are counted in
    ``report.skipped``.
    """
    datum = crystal.datum
    members = set(fragment)
    indices = list(datum.indices if indices is None else indices)
    report = AxiomReport()
    for b in sorted(members, key=sort_key):
        w = crystal.wt(b)
        for i in indices:
            real = datum.is_real(i)
            aii = datum.a(i, i)
            eps, ph = crystal.epsilon(i, b), crystal.phi(i, b)
            report.checked += 1

            # (iii)
            wi = pair(datum, w, i)
            if ph != eps + wi:
                report.add("iii", b, i, f"phi={ph} but eps + wt_i = {eps} + {wi}")

            e, f = crystal.e(i, b), crystal.f(i, b)

            # (vii)
            if ph is NEG_INF and (e is not None or f is not None):
                report.add("vii", b, i, "phi = -inf but an operator is nonzero")

            if e is not None:
                if e not in members:
                    report.skipped += 1
                else:
                    if crystal.wt(e) != w.plus_root(i):
                        report.add("i", b, i, f"wt(e b) = {crystal.wt(e)} != wt b + alpha_i")
                    if crystal.f(i, e) != b:
                        report.add("iv", b, i, "f(e b) != b")
                    de = (-1, 1) if real else (0, aii)
                    got = (crystal.epsilon(i, e), crystal.phi(i, e))
                    want = (eps + de[0], ph + de[1])
                    if got != want:
                        report.add("v(a)" if real else "v(b)", b, i, f"(eps, phi)(e b) = {got}, expected {want}")
            if f is not None:
                if f not in members:
                    report.skipped += 1
                else:
                    if crystal.wt(f) != w.minus_root(i):
                        report.add("ii", b, i, f"wt(f b) = {crystal.wt(f)} != wt b - alpha_i")
                    if crystal.e(i, f) != b:
                        report.add("iv", b, i, "e(f b) != b")
                    df = (1, -1) if real else (0, -aii)
                    got = (crystal.epsilon(i, f), crystal.phi(i, f))
                    want = (eps + df[0], ph + df[1])
                    if got != want:
                        report.add("vi(a)" if real else "vi(b)", b, i, f"(eps, phi)(f b) = {got}, expected {want}")
    return report


# --------------------------------------------------------------- morphisms


@dataclass
class MorphismReport:
    violations: list[str] = field(default_factory=list)
    injective: bool = True
    skipped: int = 0

    @property
    def strict(self) -> bool:
        return not self.violations

    @property
    def strict_embedding(self) -> bool:
        return self.strict and self.injective


def _apply(psi, b):
    if b is None:
        return None
    if isinstance(psi, Mapping):
        return psi[b]
    return psi(b)


def check_strict_morphism(psi: Callable | Mapping, fragment: Iterable, source: Crystal, target: Crystal) -> MorphismReport:
    """Check that ``psi`` preserves wt/eps/phi and commutes with every ``e_i``, ``f_i``.

    ``psi(0) = 0`` is built in.  When ``psi`` is a mapping and an operator leaves
    the fragment, that commutation test is skipped and counted.
    """
    report = MorphismReport()
    indices = list(source.datum.indices)
    images = {}
    for b in sorted(set(fragment), key=sort_key):
        c = _apply(psi, b)
        images.setdefault(c, []).append(b)
        if source.wt(b) != target.wt(c):
            report.violations.append(f"wt not preserved at {b!r}")
        for i in indices:
            if source.epsilon(i, b) != target.epsilon(i, c) or source.phi(i, b) != target.phi(i, c):
                report.violations.append(f"eps/phi_{i} not preserved at {b!r}")
            for name in ("e", "f"):
                image = getattr(source, name)(i, b)
                try:
                    lhs = _apply(psi, image)
                except KeyError:
                    report.skipped += 1
                    continue
                rhs = getattr(target, name)(i, c)
                if lhs != rhs:
                    report.violations.append(f"psi({name}_{i} b) != {name}_{i} psi(b) at {b!r}")
    report.injective = all(len(v) == 1 for v in images.values())
    return report


# ----------------------------------------------------------- graph generation


@dataclass
class NodeData:
    wt: Weight
    eps: tuple
    phi: tuple


@dataclass
class CrystalGraph:
    """Finite piece of a crystal graph; an edge ``(b, i, b')`` means ``f_i b = b'``."""

    datum: BorcherdsCartanDatum
    seed: Any
    depth_bound: int
    nodes: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    truncated_frontier: set = field(default_factory=set)
    crystal: Any = None
    meta: dict = field(default_factory=dict)

    def node_id(self, b) -> str:
        return self.crystal.serialize(b) if self.crystal is not None else str(b)

    def sorted_nodes(self) -> list:
        return sorted(self.nodes, key=sort_key)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (e[0].sort_key(), e[1], e[2].sort_key()))

    def successors(self, b) -> list:
        return [(i, t) for s, i, t in self.edges if s == b]

    @property
    def truncated(self) -> bool:
        return bool(self.truncated_frontier)

    def depth_of(self, b) -> int:
        return self.nodes[b].wt.height - self.nodes[self.seed].wt.height

    def interior(self) -> set:
        """Nodes whose every ``e_i``/``f_i`` neighbour was materialized."""
        return {b for b in self.nodes if b not in self.truncated_frontier and self.depth_of(b) < self.depth_bound}


def node_data(crystal: Crystal, b) -> NodeData:
    idx = crystal.datum.indices
    return NodeData(crystal.wt(b), tuple(crystal.epsilon(i, b) for i in idx), tuple(crystal.phi(i, b) for i in idx))


def generate_component(crystal: Crystal, seed, depth: int) -> CrystalGraph:
    """Breadth-first closure of ``seed`` under all ``f_i``, down to ``depth`` steps.

    Every ``f_i`` lowers the root height by one, so ``depth`` bounds the
    height ``|alpha|`` relative to the seed.  Nodes at the bound that still
    have a nonzero ``f_i`` are recorded in ``truncated_frontier``.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    g = CrystalGraph(crystal.datum, seed, depth, crystal=crystal)
    g.nodes[seed] = node_data(crystal, seed)
    layer = [seed]
    for level in range(depth + 1):
        nxt = {}
        for b in layer:
            for i in crystal.datum.indices:
                t = crystal.f(i, b)
                if t is None:
                    continue
                if level == depth:
                    g.truncated_frontier.add(b)
                    continue
                g.edges.append((b, i, t))
                if t not in g.nodes and t not in nxt:
                    nxt[t] = None
        for t in nxt:
            g.nodes[t] = node_data(crystal, t)
        layer = sorted(nxt, key=sort_key)
        if not layer:
            break
    return g


def weight_multiplicities(g: CrystalGraph) -> dict[Weight, int]:
    table: dict[Weight, int] = {}
    for data in g.nodes.values():
        table[data.wt] = table.get(data.wt, 0) + 1
    return table


def connected_to_seed(crystal: Crystal, g: CrystalGraph) -> list:
    """Nodes of ``g`` with no ``e``-path inside ``g`` back to the seed."""
    reached = {g.seed}
    frontier = deque([g.seed])
    # an e-path from b up to the seed is an f-path down from the seed
    while frontier:
        b = frontier.popleft()
        for i in crystal.datum.indices:
            t = crystal.f(i, b)
            if t is not None and t in g.nodes and t not in reached and crystal.e(i, t) == b:
                reached.add(t)
                frontier.append(t)
    return sorted((b for b in g.nodes if b not in reached), key=sort_key)
