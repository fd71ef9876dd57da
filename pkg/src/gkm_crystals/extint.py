"""Integers extended by ``-inf``, the value set of the string statistics.

Values are plain ``int`` or the singleton :data:`NEG_INF`.  ``NEG_INF``
absorbs addition and subtraction of integers and compares below every
integer, so the ordinary ``max``, ``+``, ``-``, ``<`` work unchanged on mixed
values.  Expressions that would need ``+inf`` raise ``ArithmeticError``.
"""
from __future__ import annotations

from typing import Union


class _NegInf:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        if other is self:
            raise ArithmeticError("-inf - (-inf) is undefined")
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            raise ArithmeticError("n - (-inf) is +inf, which is not representable")
        return NotImplemented

    def __neg__(self):
        raise ArithmeticError("+inf is not representable")

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __lt__(self, other):
        if isinstance(other, int):
            return True
        if other is self:
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented


NEG_INF = _NegInf()

ExtendedInt = Union[int, _NegInf]


def is_finite(v: ExtendedInt) -> bool:
    return v is not NEG_INF


def ext_max(*values: ExtendedInt) -> ExtendedInt:
    return max(values)


def to_json(v: ExtendedInt):
    return "-inf" if v is NEG_INF else v


def from_json(v) -> ExtendedInt:
    return NEG_INF if v == "-inf" else int(v)
