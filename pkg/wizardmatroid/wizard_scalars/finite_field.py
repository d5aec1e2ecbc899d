# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple, Union

from sympy import Poly, isprime, symbols
from sympy.ntheory import primitive_root

from wizardmatroid.utils.errors.errors import (
    ContextMismatchError,
    DivisionByZeroError,
    InvariantViolationError,
)

__all__ = ["FiniteField", "FieldElement", "default_modulus", "is_irreducible"]

_X = symbols("x")

# Small moduli, ascending coefficients; everything else is found by search.
_MODULUS_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
}


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Irreducibility over F_p of the polynomial with ascending ``modulus`` coefficients."""
    return Poly(list(reversed([c % p for c in modulus])), _X, modulus=p).is_irreducible


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """
    Monic irreducible modulus of degree ``k`` over F_p.

    Uses the built-in table when possible, otherwise the lexicographically
    smallest irreducible monic polynomial.
    """
    if k == 1:
        return (0, 1)
    if (p, k) in _MODULUS_TABLE:
        return _MODULUS_TABLE[(p, k)]
    for tail in itertools.product(range(p), repeat=k):
        candidate = tuple(reversed(tail)) + (1,)
        if candidate[0] == 0:
            continue
        if is_irreducible(p, candidate):
            return candidate
    raise InvariantViolationError(f"F_{p}^{k}", "no irreducible modulus found")


@dataclass(frozen=True)
class FiniteField:
    """
    The field F_{p^k} = F_p[x]/(modulus).

    Parameters
    ----------
    p : int
        Prime characteristic.
    k : int
        Extension degree.
    modulus : tuple of int
        Ascending coefficients of a monic irreducible polynomial of degree ``k``.
    """

    p: int
    k: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise InvariantViolationError("field characteristic", f"p={self.p} is not prime")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvariantViolationError("field degree", f"k={self.k} must be a positive integer")
        modulus = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", modulus)
        if len(modulus) != self.k + 1:
            raise InvariantViolationError(
                "modulus", f"expected {self.k + 1} coefficients for degree {self.k}, got {len(modulus)}"
            )
        if modulus[-1] != 1:
            raise InvariantViolationError("modulus", "leading coefficient must be 1")
        if not is_irreducible(self.p, modulus):
            raise InvariantViolationError(
                "modulus", f"{list(modulus)} is reducible over F_{self.p}"
            )

    @classmethod
    def of(cls, p: int, k: int = 1, modulus: Sequence[int] = None) -> "FiniteField":
        if modulus is None:
            modulus = default_modulus(p, k)
        return cls(p, k, tuple(modulus))

    # ---- Elements ----

    @property
    def order(self) -> int:
        return self.p ** self.k

    def element(self, coords: Union[int, Sequence[int]]) -> "FieldElement":
        if isinstance(coords, int):
            return self.from_int(coords)
        coords = [int(c) % self.p for c in coords]
        if len(coords) > self.k:
            raise InvariantViolationError(
                "field element", f"{len(coords)} coordinates for a degree-{self.k} field"
            )
        coords += [0] * (self.k - len(coords))
        return FieldElement(self, tuple(coords))

    __call__ = element

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def from_index(self, index: int) -> "FieldElement":
        """Element whose coordinates are the base-p digits of ``index``."""
        coords = []
        for _ in range(self.k):
            index, digit = divmod(index, self.p)
            coords.append(digit)
        return FieldElement(self, tuple(coords))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def gen(self) -> "FieldElement":
        """The class of x for k > 1, a primitive root of F_p for k = 1."""
        if self.k == 1:
            return self.from_int(primitive_root(self.p))
        return self.element([0, 1])

    def elements(self) -> Iterator["FieldElement"]:
        for index in range(self.order):
            yield self.from_index(index)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FieldElement":
        low = 1 if nonzero else 0
        return self.from_index(rng.randrange(low, self.order))

    def descriptor(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"

    # ---- Raw coordinate arithmetic ----

    def _mul_coords(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        mod = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                shift = top - k
                for j in range(k):
                    prod[shift + j] -= c * mod[j]
            prod[top] = 0
        return tuple(c % p for c in prod[:k])


@lru_cache(maxsize=1 << 16)
def _power(field: FiniteField, coords: Tuple[int, ...], exponent: int) -> Tuple[int, ...]:
    if field.k == 1:
        return (pow(coords[0], exponent, field.p),)
    result = (1,) + (0,) * (field.k - 1)
    base = coords
    while exponent:
        if exponent & 1:
            result = field._mul_coords(result, base)
        exponent >>= 1
        if exponent:
            base = field._mul_coords(base, base)
    return result


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    coords: Tuple[int, ...]

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ContextMismatchError(self.field, other.field)
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return self.field.one()
        if not self:
            return self
        return FieldElement(self.field, _power(self.field, self.coords, exponent))

    def __bool__(self):
        return any(self.coords)

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZeroError("finite field element")
        return FieldElement(self.field, _power(self.field, self.coords, self.field.order - 2))

    def frobenius(self, times: int = 1) -> "FieldElement":
        """x ↦ x^(p^times); negative ``times`` applies the inverse automorphism."""
        t = times % self.field.k
        if t == 0 or not self:
            return self
        return FieldElement(self.field, _power(self.field, self.coords, self.field.p ** t))

    def frobenius_inverse(self, times: int = 1) -> "FieldElement":
        return self.frobenius(-times)

    def is_one(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def to_index(self) -> int:
        return sum(c * self.field.p ** i for i, c in enumerate(self.coords))

    def to_list(self) -> list:
        return list(self.coords)

    def __repr__(self):
        if self.field.k == 1:
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"
