# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Union

__all__ = ["INF", "Infinity", "ValuationValue", "is_finite", "vmin", "vsum"]


@total_ordering
class Infinity:
    """
    The valuation of zero. Absorbs addition and is larger than every integer.

    There is exactly one instance, :data:`INF`.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        if isinstance(other, (int, Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __neg__(self):
        raise ArithmeticError("-inf is not a valuation value")

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __lt__(self, other):
        if isinstance(other, (int, Infinity)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("wizardmatroid.inf")

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ValuationValue = Union[int, Infinity]


def is_finite(value: ValuationValue) -> bool:
    return not isinstance(value, Infinity)


def vmin(values: Iterable[ValuationValue]) -> ValuationValue:
    best: ValuationValue = INF
    for v in values:
        if v < best:
            best = v
    return best


def vsum(values: Iterable[ValuationValue]) -> ValuationValue:
    total: ValuationValue = 0
    for v in values:
        total = total + v
    return total
