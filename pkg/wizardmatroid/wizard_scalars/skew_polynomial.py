# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Skew polynomials K[F] over a finite field with the commutation rule F·a = a^p·F.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Literal, Sequence, Tuple

from wizardmatroid.utils.errors.errors import (
    ContextMismatchError,
    DivisionByZeroError,
    InvalidInputError,
)
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField
from wizardmatroid.wizard_scalars.valuation import INF, ValuationValue

__all__ = [
    "SkewPolynomial",
    "skew_divmod",
    "skew_lclm",
    "skew_gcld",
    "Side",
]

Side = Literal["left", "right"]


@dataclass(frozen=True)
class SkewPolynomial:
    """
    Σ coeffs[i]·F^i, trailing zero coefficients trimmed.
    """

    field: FiniteField
    coeffs: Tuple[FieldElement, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # ---- Constructors ----

    @classmethod
    def zero(cls, field: FiniteField) -> "SkewPolynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FiniteField) -> "SkewPolynomial":
        return cls(field, (field.one(),))

    @classmethod
    def constant(cls, c: FieldElement) -> "SkewPolynomial":
        return cls(c.field, (c,))

    @classmethod
    def monomial(cls, field: FiniteField, e: int, c: FieldElement = None) -> "SkewPolynomial":
        """c·F^e."""
        c = field.one() if c is None else c
        return cls(field, (field.zero(),) * e + (c,))

    @classmethod
    def from_coords(cls, field: FiniteField, raw: Iterable[Sequence[int]]) -> "SkewPolynomial":
        return cls(field, tuple(field.element(c) for c in raw))

    # ---- Structure ----

    @property
    def degree(self) -> int:
        """Degree in F; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> ValuationValue:
        """F-adic valuation: index of the lowest nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1]

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead.is_one()

    def is_monomial(self) -> bool:
        """True for F^e with unit coefficient 1."""
        return bool(self.coeffs) and self.lead.is_one() and not any(self.coeffs[:-1])

    def to_coords(self) -> List[List[int]]:
        return [c.to_list() for c in self.coeffs]

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "SkewPolynomial") -> None:
        if not isinstance(other, SkewPolynomial):
            raise InvalidInputError("other", "SkewPolynomial", other)
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatchError(self.field, other.field)

    # ---- Arithmetic ----

    def __add__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        self._check(other)
        zero = self.field.zero()
        size = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a + b)
        return SkewPolynomial(self.field, tuple(out))

    def __neg__(self) -> "SkewPolynomial":
        return SkewPolynomial(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        return self + (-other)

    def __mul__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        if isinstance(other, FieldElement):
            other = SkewPolynomial.constant(other)
        self._check(other)
        if not self or not other:
            return SkewPolynomial.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b.frobenius(i)
        return SkewPolynomial(self.field, tuple(out))

    def left_twist(self, e: int) -> "SkewPolynomial":
        """
        F^e·self·F^{-e}: every coefficient moved through F^e by Frobenius.

        ``e`` may be negative.
        """
        if e == 0:
            return self
        return SkewPolynomial(self.field, tuple(c.frobenius(e) for c in self.coeffs))

    def shift(self, e: int) -> "SkewPolynomial":
        """self·F^e for e ≥ 0."""
        if not self or e == 0:
            return self
        return SkewPolynomial(self.field, (self.field.zero(),) * e + self.coeffs)

    def f_times(self, e: int) -> "SkewPolynomial":
        """F^e·self for e ≥ 0."""
        return self.left_twist(e).shift(e)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("F" if i == 1 else f"F^{i}")
            cs = repr(c)
            if not mono:
                terms.append(cs)
            elif c.is_one():
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        return " + ".join(terms)


def skew_divmod(
    a: SkewPolynomial, b: SkewPolynomial, side: Side = "left"
) -> Tuple[SkewPolynomial, SkewPolynomial]:
    """
    Euclidean division in K[F].

    ``side="left"`` returns (q, r) with a = q·b + r, ``side="right"`` returns
    (q, r) with a = b·q + r; in both cases deg r < deg b.
    """
    a._check(b)
    if not b:
        raise DivisionByZeroError("skew polynomial")
    field = a.field
    q = SkewPolynomial.zero(field)
    r = a
    db = b.degree
    lead_inv = b.lead.inverse()
    while r and r.degree >= db:
        d = r.degree - db
        if side == "left":
            c = r.lead * b.lead.frobenius(d).inverse()
            term = SkewPolynomial.monomial(field, d, c)
            r = r - term * b
        elif side == "right":
            c = (lead_inv * r.lead).frobenius(-db)
            term = SkewPolynomial.monomial(field, d, c)
            r = r - b * term
        else:
            raise InvalidInputError("side", "'left' or 'right'", side)
        q = q + term
    return q, r


def skew_lclm(
    a: SkewPolynomial, b: SkewPolynomial
) -> Tuple[SkewPolynomial, SkewPolynomial, SkewPolynomial]:
    """
    Least common left multiple.

    Returns (m, c1, c2) with m = c1·a = c2·b, m monic of minimal degree.
    """
    a._check(b)
    if not a or not b:
        raise DivisionByZeroError("lclm of zero")
    field = a.field
    one, zero = SkewPolynomial.one(field), SkewPolynomial.zero(field)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    # invariant: r_i = s_i·a + t_i·b
    while r1:
        q, r = skew_divmod(r0, r1, "left")
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c1, c2 = s1, -t1
    m = c1 * a
    u = SkewPolynomial.constant(m.lead.inverse())
    return u * m, u * c1, u * c2


def skew_gcld(a: SkewPolynomial, b: SkewPolynomial) -> SkewPolynomial:
    """
    Greatest common left divisor g (a = g·a', b = g·b'), normalised so that
    its leading coefficient is 1.
    """
    a._check(b)
    r0, r1 = a, b
    while r1:
        _, r = skew_divmod(r0, r1, "right")
        r0, r1 = r1, r
    if not r0:
        return r0
    unit = r0.lead.inverse().frobenius(-r0.degree)
    return r0 * SkewPolynomial.constant(unit)
