"""``B(infinity)`` as finitely supported ground-state tensor windows, and ``B(lambda)``.

An element of ``B(infinity)`` is a semi-infinite tensor
``... ⊗ b_{i_3}(n_3) ⊗ b_{i_2}(n_2) ⊗ b_{i_1}(n_1)`` in which all but finitely
many letters are ground letters ``b(0)``; slot ``k`` carries the elementary
crystal ``B_{i_k}`` for a fixed cyclic sequence ``iota``.  Only the non-ground
slots are stored.  To apply an operator for ``i`` the window is cut just left
of the first ground ``i``-slot beyond the support and closed by a head that has
the statistics of the one-element crystal ``C``.

``B(lambda)`` is the component of ``ground ⊗ t_lambda ⊗ c`` in
``B(infinity) ⊗ T_lambda ⊗ C``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cartan import BorcherdsCartanDatum, Weight
from .crystal import Crystal, CrystalGraph, generate_component, sort_key, weight_multiplicities
from .errors import InternalInvariantError
from .models import C_ELEMENT, CCrystal, ElementaryCrystal, Letter, TCrystal
from .tensor import TensorCrystal, TensorElement


@dataclass(frozen=True)
class GroundSequence:
    """The sequence ``iota = (i_1, i_2, ...)``, stored as one period."""

    cycle: tuple[int, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("iota cycle must be nonempty")

    def at(self, position: int) -> int:
        return self.cycle[(position - 1) % len(self.cycle)]

    def next_slot(self, i: int, after: int) -> int:
        """Smallest position ``> after`` carrying index ``i``."""
        for p in range(after + 1, after + len(self.cycle) + 1):
            if self.at(p) == i:
                return p
        raise ValueError(f"index {i} does not occur in iota")


def default_iota(datum: BorcherdsCartanDatum) -> GroundSequence:
    return GroundSequence(tuple(datum.indices))


def make_iota(datum: BorcherdsCartanDatum, cycle: Sequence | None) -> GroundSequence:
    if cycle is None:
        return default_iota(datum)
    cyc = tuple(datum.index(c) for c in cycle)
    missing = set(datum.indices) - set(cyc)
    if missing:
        raise ValueError("iota must contain every index; missing " + ", ".join(datum.label(m) for m in sorted(missing)))
    return GroundSequence(cyc)


@dataclass(frozen=True)
class BInfElement:
    """Non-ground slots as sorted ``(position, n)`` pairs, every ``n <= -1``."""

    support: tuple[tuple[int, int], ...] = ()

    def sort_key(self):
        return ("inf", self.support)

    @property
    def max_position(self) -> int:
        return self.support[-1][0] if self.support else 0

    def slots(self) -> dict[int, int]:
        return dict(self.support)


GROUND = BInfElement()


class BInfCrystal(Crystal):
    """``B(infinity)`` realized on windows of elementary crystals.

    ``extra`` adds that many ground slots to every window; results must not
    depend on it.
    """

    def __init__(self, datum: BorcherdsCartanDatum, iota: GroundSequence | None = None, extra: int = 0):
        super().__init__(datum)
        self.iota = iota or default_iota(datum)
        if set(self.iota.cycle) != set(datum.indices):
            raise ValueError("iota must contain every index")
        self.extra = extra
        self._letters = {i: ElementaryCrystal(datum, i) for i in datum.indices}
        self._head = CCrystal(datum)
        self._windows: dict[int, TensorCrystal] = {}

    def ground(self) -> BInfElement:
        return GROUND

    def _window_crystal(self, size: int) -> TensorCrystal:
        tc = self._windows.get(size)
        if tc is None:
            factors = [self._head] + [self._letters[self.iota.at(k)] for k in range(size, 0, -1)]
            tc = self._windows[size] = TensorCrystal(factors)
        return tc

    def window(self, i: int, b: BInfElement) -> tuple[TensorCrystal, TensorElement]:
        size = self.iota.next_slot(i, b.max_position) + self.extra
        slots = b.slots()
        letters = [Letter(self.iota.at(k), slots.get(k, 0)) for k in range(size, 0, -1)]
        return self._window_crystal(size), TensorElement((C_ELEMENT, *letters))

    def _normalize(self, x: TensorElement | None) -> BInfElement | None:
        if x is None:
            return None
        size = len(x.factors) - 1
        support = []
        for idx, letter in enumerate(x.factors[1:]):
            pos = size - idx
            if letter.n > 0:
                raise InternalInvariantError(f"positive letter b({letter.index},{letter.n}) at slot {pos}")
            if letter.n < 0:
                support.append((pos, letter.n))
        return BInfElement(tuple(sorted(support)))

    def wt(self, b: BInfElement) -> Weight:
        root = [0] * self.datum.rank
        for pos, n in b.support:
            root[self.iota.at(pos)] -= n
        return Weight((0,) * self.datum.rank, tuple(root))

    def stats(self, i, b):
        tc, x = self.window(i, b)
        w, eps, ph = tc.stats(i, x)
        if self.datum.is_imaginary(i) and eps != 0:
            raise InternalInvariantError(f"imaginary eps_{i} = {eps} on {b!r}")
        return w, eps, ph

    def epsilon(self, i, b):
        return self.stats(i, b)[1]

    def phi(self, i, b):
        return self.stats(i, b)[2]

    def f(self, i, b):
        tc, x = self.window(i, b)
        out = self._normalize(tc.f(i, x))
        if out is None:
            raise InternalInvariantError(f"f_{i} vanished on {b!r}")
        return out

    def e(self, i, b):
        if self.datum.is_real(i) and self.epsilon(i, b) == 0:
            return None
        tc, x = self.window(i, b)
        return self._normalize(tc.e(i, x))

    def serialize(self, b):
        return "inf[" + ",".join(f"{p}:{n}" for p, n in b.support) + "]"

    def element_to_json(self, b):
        return {"type": "inf", "slots": {str(p): n for p, n in b.support}}


def binf_f(crystal: BInfCrystal, i: int, b: BInfElement) -> BInfElement:
    return crystal.f(i, b)


def binf_e(crystal: BInfCrystal, i: int, b: BInfElement) -> BInfElement | None:
    return crystal.e(i, b)


def binf_stats(crystal: BInfCrystal, i: int, b: BInfElement) -> tuple:
    return crystal.stats(i, b)


class HighestWeightCrystal(TensorCrystal):
    """``B(infinity) ⊗ T_lambda ⊗ C`` with the seed ``ground ⊗ t_lambda ⊗ c``."""

    def __init__(self, datum: BorcherdsCartanDatum, weight: Weight, iota: GroundSequence | None = None, extra: int = 0):
        self.binf = BInfCrystal(datum, iota, extra)
        self.t = TCrystal(datum, weight)
        super().__init__([self.binf, self.t, CCrystal(datum)])
        self.weight = weight
        self.iota = self.binf.iota
        self.seed = TensorElement((GROUND, self.t.element, C_ELEMENT))

    def lift(self, b: BInfElement) -> TensorElement:
        return TensorElement((b, self.t.element, C_ELEMENT))

    def element_to_json(self, x):
        return {
            "slots": {str(p): n for p, n in x.factors[0].support},
            "lambda": {self.datum.label(k): v for k, v in enumerate(self.weight.base)},
        }

    def element_from_json(self, doc: Mapping) -> TensorElement:
        slots = tuple(sorted((int(p), int(n)) for p, n in doc.get("slots", {}).items()))
        return self.lift(BInfElement(slots))


def hw_crystal(datum: BorcherdsCartanDatum, weight: Weight, iota: GroundSequence | None = None, extra: int = 0) -> HighestWeightCrystal:
    return HighestWeightCrystal(datum, weight, iota, extra)


def generate_highest_weight(datum, weight, depth, iota=None, extra=0) -> tuple[HighestWeightCrystal, CrystalGraph]:
    crystal = hw_crystal(datum, weight, iota, extra)
    g = generate_component(crystal, crystal.seed, depth)
    g.meta.update({
        "lambda": {datum.label(k): v for k, v in enumerate(weight.base)},
        "iota": [datum.label(i) for i in crystal.iota.cycle],
    })
    return crystal, g


def multiplicities(datum, weight, depth, iota=None) -> dict[Weight, int]:
    _, g = generate_highest_weight(datum, weight, depth, iota)
    return weight_multiplicities(g)


def graphs_isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    """Decide whether two seeded graphs are isomorphic as weighted, i-labelled graphs.

    Both graphs must be generated from their seed by ``f``-edges; since each
    ``f_i`` is a partial function, the only candidate bijection is found by
    walking both graphs in step from the seeds.
    """
    if len(g1.nodes) != len(g2.nodes) or len(g1.edges) != len(g2.edges):
        return False
    out1 = {(s, i): t for s, i, t in g1.edges}
    out2 = {(s, i): t for s, i, t in g2.edges}
    match = {g1.seed: g2.seed}
    stack = [g1.seed]
    indices = list(g1.datum.indices)
    while stack:
        u = stack.pop()
        v = match[u]
        if g1.nodes[u].wt != g2.nodes[v].wt:
            return False
        if (u in g1.truncated_frontier) != (v in g2.truncated_frontier):
            return False
        for i in indices:
            a, b = out1.get((u, i)), out2.get((v, i))
            if (a is None) != (b is None):
                return False
            if a is None:
                continue
            if a in match:
                if match[a] != b:
                    return False
            else:
                match[a] = b
                stack.append(a)
    return len(match) == len(g1.nodes) and len(set(match.values())) == len(match)


__all__ = [
    "BInfCrystal",
    "BInfElement",
    "GROUND",
    "GroundSequence",
    "HighestWeightCrystal",
    "binf_e",
    "binf_f",
    "binf_stats",
    "default_iota",
    "generate_highest_weight",
    "graphs_isomorphic",
    "hw_crystal",
    "make_iota",
    "multiplicities",
]
