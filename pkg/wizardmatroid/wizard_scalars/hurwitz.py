# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from wizardmatroid.utils.errors.errors import (
    DivisionByZeroError,
    InvalidInputError,
    InvariantViolationError,
)
from wizardmatroid.wizard_scalars.skew_polynomial import Side

__all__ = ["HurwitzQuaternion", "hurwitz_units", "nearest_divmod", "RationalQuaternion"]


@dataclass(frozen=True)
class HurwitzQuaternion:
    """
    (a + b·i + c·j + d·k)/2 in doubled coordinates; a, b, c, d share their parity.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        parity = self.a & 1
        if (self.b & 1) != parity or (self.c & 1) != parity or (self.d & 1) != parity:
            raise InvariantViolationError(
                "Hurwitz quaternion",
                f"doubled coordinates {self.coords} mix parities",
            )

    @classmethod
    def from_int(cls, n: int) -> "HurwitzQuaternion":
        return cls(2 * n, 0, 0, 0)

    @classmethod
    def from_coords(cls, raw) -> "HurwitzQuaternion":
        if len(raw) != 4 or not all(isinstance(x, int) for x in raw):
            raise InvalidInputError("hurwitz", "four integers [A, B, C, D]", raw)
        return cls(*raw)

    @property
    def coords(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def norm(self) -> int:
        return (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d) // 4

    def conjugate(self) -> "HurwitzQuaternion":
        return HurwitzQuaternion(self.a, -self.b, -self.c, -self.d)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __add__(self, other):
        if isinstance(other, int):
            other = HurwitzQuaternion.from_int(other)
        return HurwitzQuaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return HurwitzQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, int):
            other = HurwitzQuaternion.from_int(other)
        return HurwitzQuaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return HurwitzQuaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, HurwitzQuaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        # Hamilton product of doubled coordinates is 4x the product; halve it.
        a = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2
        b = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2
        c = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2
        d = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2
        return HurwitzQuaternion(a // 2, b // 2, c // 2, d // 2)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __repr__(self):
        if self.a % 2 == 0:
            parts = [self.a // 2, self.b // 2, self.c // 2, self.d // 2]
            terms = []
            for value, label in zip(parts, ("", "i", "j", "k")):
                if value == 0:
                    continue
                if label and abs(value) == 1:
                    body = label
                else:
                    body = f"{abs(value)}{label}"
                sign = "-" if value < 0 else ("+" if terms else "")
                terms.append(f"{sign}{body}")
            return "".join(terms) if terms else "0"
        return f"({self.a}+{self.b}i+{self.c}j+{self.d}k)/2"


@lru_cache(maxsize=None)
def hurwitz_units() -> Tuple[HurwitzQuaternion, ...]:
    """The 24 units, in lexicographic order of doubled coordinates."""
    units = []
    for i in range(4):
        for s in (2, -2):
            coords = [0, 0, 0, 0]
            coords[i] = s
            units.append(HurwitzQuaternion(*coords))
    for signs in itertools.product((1, -1), repeat=4):
        units.append(HurwitzQuaternion(*signs))
    return tuple(sorted(units, key=lambda u: u.coords))


def _nearest_with_parity(t: Fraction, parity: int) -> int:
    # nearest integer ≡ parity (mod 2); ties round up
    return 2 * math.floor((t - parity) / 2 + Fraction(1, 2)) + parity


def nearest_divmod(
    a: HurwitzQuaternion, b: HurwitzQuaternion, side: Side = "left"
) -> Tuple[HurwitzQuaternion, HurwitzQuaternion]:
    """
    Norm-Euclidean division.

    ``side="left"`` gives a = q·b + r, ``side="right"`` gives a = b·q + r, with
    N(r) < N(b). q is the Hurwitz point nearest to a·b⁻¹ (resp. b⁻¹·a).
    """
    if not b:
        raise DivisionByZeroError("Hurwitz quaternion")
    if side == "left":
        numerator = a * b.conjugate()
    elif side == "right":
        numerator = b.conjugate() * a
    else:
        raise InvalidInputError("side", "'left' or 'right'", side)
    n = b.norm
    # doubled coordinates of the exact quotient
    target = [Fraction(x, n) for x in numerator.coords]
    best = None
    for parity in (0, 1):
        cand = tuple(_nearest_with_parity(t, parity) for t in target)
        dist = sum((t - c) ** 2 for t, c in zip(target, cand))
        key = (dist, cand)
        if best is None or key < best:
            best = key
    q = HurwitzQuaternion(*best[1])
    r = a - q * b if side == "left" else a - b * q
    if r.norm >= n:
        raise InvariantViolationError("Hurwitz division", f"remainder norm {r.norm} >= {n}")
    return q, r


class RationalQuaternion:
    """
    num/den with ``num`` a Hurwitz quaternion and ``den`` a positive integer.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: HurwitzQuaternion, den: int = 1):
        if den == 0:
            raise DivisionByZeroError("rational quaternion")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(math.gcd(num.a, num.b), math.gcd(num.c, num.d)), den)
        if g > 1:
            coords = [x // g for x in num.coords]
            if len({x & 1 for x in coords}) > 1:
                g //= 2
                coords = [x // g for x in num.coords]
            num = HurwitzQuaternion(*coords)
            den //= g
        if not num:
            den = 1
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, n: int) -> "RationalQuaternion":
        return cls(HurwitzQuaternion.from_int(n))

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RationalQuaternion(-self.num, self.den)

    def __sub__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return self + (-other)

    def __mul__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalQuaternion":
        if not self.num:
            raise DivisionByZeroError("rational quaternion")
        return RationalQuaternion(self.num.conjugate() * self.den, self.num.norm)

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.num.conjugate(), self.den)

    def __eq__(self, other):
        if not isinstance(other, RationalQuaternion):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return f"({self.num!r})/{self.den}"
