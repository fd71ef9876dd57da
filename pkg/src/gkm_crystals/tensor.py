"""Tensor products of crystals, with the three-case rule for imaginary ``e_i``.

Factors are listed left to right.  Statistics are the two-factor formulas
folded from the left; the operators split ``b_1 ⊗ (b_2 ⊗ ... ⊗ b_m)`` and
recurse into the right-hand block.

Comparisons involving ``-inf`` follow ordinary ordering of the extended
integers::

    phi  eps-a_ii  eps  | phi > eps - a_ii | eps < phi <= eps - a_ii | phi <= eps
    -inf  -inf    -inf  |      False       |          False          |   True
    -inf   n       n    |      False       |          False          |   True
     m    -inf    -inf  |      True        |          False          |   False
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cartan import Weight, pair
from .crystal import Crystal
from .extint import ExtendedInt


@dataclass(frozen=True)
class TensorElement:
    factors: tuple

    def sort_key(self):
        return ("tensor", tuple(f.sort_key() for f in self.factors))

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, k):
        return self.factors[k]


def combine(datum, i: int, left: tuple, right: tuple) -> tuple:
    """Two-factor statistics: each argument is ``(wt, eps_i, phi_i)``."""
    (w1, e1, p1), (w2, e2, p2) = left, right
    return (
        w1 + w2,
        max(e1, e2 - pair(datum, w1, i)),
        max(p1 + pair(datum, w2, i), p2),
    )


class TensorCrystal(Crystal):
    def __init__(self, crystals: Sequence[Crystal]):
        crystals = tuple(crystals)
        if not crystals:
            raise ValueError("a tensor product needs at least one factor")
        datum = crystals[0].datum
        if any(c.datum != datum for c in crystals):
            raise ValueError("all factors must share one Borcherds-Cartan datum")
        super().__init__(datum)
        self.crystals = crystals

    def element(self, *factors) -> TensorElement:
        if len(factors) != len(self.crystals):
            raise ValueError(f"expected {len(self.crystals)} factors, got {len(factors)}")
        return TensorElement(tuple(factors))

    def _factor_stats(self, i, x):
        return [c.stats(i, b) for c, b in zip(self.crystals, x.factors)]

    def stats(self, i, x):
        parts = self._factor_stats(i, x)
        acc = parts[0]
        for s in parts[1:]:
            acc = combine(self.datum, i, acc, s)
        return acc

    def wt(self, x) -> Weight:
        total = self.crystals[0].wt(x.factors[0])
        for c, b in zip(self.crystals[1:], x.factors[1:]):
            total = total + c.wt(b)
        return total

    def epsilon(self, i, x) -> ExtendedInt:
        return self.stats(i, x)[1]

    def phi(self, i, x) -> ExtendedInt:
        return self.stats(i, x)[2]

    def _suffix_eps(self, i, x) -> list:
        """``eps_i(b_k ⊗ ... ⊗ b_m)`` for every ``k``."""
        parts = self._factor_stats(i, x)
        out = [None] * len(parts)
        acc = parts[-1]
        out[-1] = acc[1]
        for k in range(len(parts) - 2, -1, -1):
            acc = combine(self.datum, i, parts[k], acc)
            out[k] = acc[1]
        return out, parts

    def _replace(self, x, k, new):
        if new is None:
            return None
        factors = list(x.factors)
        factors[k] = new
        return TensorElement(tuple(factors))

    def f(self, i, x):
        suffix, parts = self._suffix_eps(i, x)
        m = len(parts)
        for k in range(m - 1):
            if parts[k][2] > suffix[k + 1]:
                return self._replace(x, k, self.crystals[k].f(i, x.factors[k]))
        return self._replace(x, m - 1, self.crystals[m - 1].f(i, x.factors[m - 1]))

    def e(self, i, x):
        suffix, parts = self._suffix_eps(i, x)
        m = len(parts)
        real = self.datum.is_real(i)
        aii = self.datum.a(i, i)
        for k in range(m - 1):
            ph, eps_rest = parts[k][2], suffix[k + 1]
            if real:
                if ph >= eps_rest:
                    return self._replace(x, k, self.crystals[k].e(i, x.factors[k]))
            else:
                if ph > eps_rest - aii:
                    return self._replace(x, k, self.crystals[k].e(i, x.factors[k]))
                if eps_rest < ph:
                    return None
        return self._replace(x, m - 1, self.crystals[m - 1].e(i, x.factors[m - 1]))

    def serialize(self, x):
        return "*".join(f"({c.serialize(b)})" for c, b in zip(self.crystals, x.factors))

    def element_to_json(self, x):
        return {"type": "tensor", "factors": [c.element_to_json(b) for c, b in zip(self.crystals, x.factors)]}


def tensor_product(*crystals: Crystal) -> TensorCrystal:
    return TensorCrystal(crystals)


def tensor_stats(crystal: TensorCrystal, i: int, x: TensorElement) -> tuple:
    return crystal.stats(i, x)


def tensor_f(crystal: TensorCrystal, i: int, x: TensorElement):
    return crystal.f(i, x)


def tensor_e(crystal: TensorCrystal, i: int, x: TensorElement):
    return crystal.e(i, x)
