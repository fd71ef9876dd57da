"""The atomic crystals: ``T_lambda``, ``C`` and the elementary crystals ``B_i``."""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import BorcherdsCartanDatum, Weight
from .crystal import Crystal
from .errors import UnknownIndex
from .extint import NEG_INF


@dataclass(frozen=True)
class TElement:
    weight: Weight

    def sort_key(self):
        return ("t", self.weight.base, self.weight.root)


@dataclass(frozen=True)
class CElement:
    def sort_key(self):
        return ("c",)


@dataclass(frozen=True)
class Letter:
    """``b_i(n)``, of weight ``n alpha_i``."""

    index: int
    n: int

    def sort_key(self):
        return ("b", self.index, self.n)


C_ELEMENT = CElement()


class TCrystal(Crystal):
    """``T_lambda = {t_lambda}``: weight ``lambda``, both statistics ``-inf``, operators zero."""

    def __init__(self, datum: BorcherdsCartanDatum, weight: Weight):
        super().__init__(datum)
        self.weight = weight
        self.element = TElement(weight)

    def _check(self, b):
        if b != self.element:
            raise ValueError(f"{b!r} is not t_lambda")

    def wt(self, b):
        self._check(b)
        return self.weight

    def epsilon(self, i, b):
        return NEG_INF

    def phi(self, i, b):
        return NEG_INF

    def e(self, i, b):
        return None

    def f(self, i, b):
        return None

    def serialize(self, b):
        return "t(" + ",".join(str(v) for v in b.weight.base) + ")"

    def element_to_json(self, b):
        return {"type": "t", "lambda": {self.datum.label(k): v for k, v in enumerate(b.weight.base)}}


class CCrystal(Crystal):
    """``C = {c}``: weight 0, both statistics 0, operators zero."""

    element = C_ELEMENT

    def wt(self, b):
        return Weight.zero(self.datum.rank)

    def epsilon(self, i, b):
        return 0

    def phi(self, i, b):
        return 0

    def e(self, i, b):
        return None

    def f(self, i, b):
        return None

    def serialize(self, b):
        return "c"

    def element_to_json(self, b):
        return {"type": "c"}


class ElementaryCrystal(Crystal):
    """The chain crystal ``B_i = {b_i(n)}``.

    For real ``i`` every integer ``n`` is allowed, with ``eps_i = -n`` and
    ``phi_i = n``.  For imaginary ``i`` only ``n <= 0`` occurs; ``eps_i = 0``,
    ``phi_i = n a_ii`` and ``e_i b_i(0) = 0``.  Every other index sees ``-inf``.
    """

    def __init__(self, datum: BorcherdsCartanDatum, i: int | str):
        super().__init__(datum)
        self.i = datum.index(i)
        self.real = datum.is_real(self.i)

    def letter(self, n: int) -> Letter:
        if not self.real and n > 0:
            raise ValueError(f"imaginary letter b_{self.i}({n}) needs n <= 0")
        return Letter(self.i, n)

    def _check(self, b):
        if not isinstance(b, Letter) or b.index != self.i:
            raise UnknownIndex(f"{b!r} is not a letter of B_{self.datum.label(self.i)}")

    def wt(self, b):
        self._check(b)
        return Weight.zero(self.datum.rank).minus_root(self.i, -b.n)

    def epsilon(self, i, b):
        if i != self.i:
            return NEG_INF
        return -b.n if self.real else 0

    def phi(self, i, b):
        if i != self.i:
            return NEG_INF
        return b.n if self.real else b.n * self.datum.a(i, i)

    def e(self, i, b):
        if i != self.i:
            return None
        if not self.real and b.n >= 0:
            return None
        return Letter(self.i, b.n + 1)

    def f(self, i, b):
        if i != self.i:
            return None
        return Letter(self.i, b.n - 1)

    def serialize(self, b):
        return f"b({self.datum.label(b.index)},{b.n})"

    def element_to_json(self, b):
        return {"type": "b", "index": self.datum.label(b.index), "n": b.n}


def t_lambda(datum: BorcherdsCartanDatum, weight: Weight) -> TCrystal:
    return TCrystal(datum, weight)


def c_crystal(datum: BorcherdsCartanDatum) -> CCrystal:
    return CCrystal(datum)


def elementary(datum: BorcherdsCartanDatum, i: int | str) -> ElementaryCrystal:
    return ElementaryCrystal(datum, i)
