# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Left Ore fractions b⁻¹·a of skew polynomials: the division ring of K[F].
"""

from __future__ import annotations

from typing import Optional

from wizardmatroid.utils.errors.errors import (
    ContextMismatchError,
    DivisionByZeroError,
    ValidationError,
)
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField
from wizardmatroid.wizard_scalars.skew_polynomial import (
    SkewPolynomial,
    skew_divmod,
    skew_gcld,
    skew_lclm,
)
from wizardmatroid.wizard_scalars.valuation import INF, ValuationValue

__all__ = ["SkewFraction"]


class SkewFraction:
    """
    den⁻¹·num with den ≠ 0.

    Stored reduced: no common left divisor and a monic denominator. When the
    denominator is a power of F the arithmetic stays in K[F, F⁻¹] and skips
    the Ore machinery.
    """

    __slots__ = ("den", "num", "_f_power")

    def __init__(self, den: SkewPolynomial, num: SkewPolynomial, reduced: bool = False):
        if not den:
            raise DivisionByZeroError("skew fraction denominator")
        if den.field is not num.field and den.field != num.field:
            raise ContextMismatchError(den.field, num.field)
        if not reduced:
            den, num = _reduce(den, num)
        self.den = den
        self.num = num
        self._f_power = den.degree if den.is_monomial() else None

    # ---- Constructors ----

    @classmethod
    def from_poly(cls, a: SkewPolynomial) -> "SkewFraction":
        return cls(SkewPolynomial.one(a.field), a, reduced=True)

    @classmethod
    def f_power(cls, field: FiniteField, e: int) -> "SkewFraction":
        """F^e for any integer e."""
        if e >= 0:
            return cls.from_poly(SkewPolynomial.monomial(field, e))
        return cls(SkewPolynomial.monomial(field, -e), SkewPolynomial.one(field), reduced=True)

    @property
    def field(self) -> FiniteField:
        return self.num.field

    # ---- Structure ----

    def __bool__(self):
        return bool(self.num)

    @property
    def valuation(self) -> ValuationValue:
        v = self.num.valuation
        if v is INF:
            return INF
        return v - self.den.valuation

    def as_polynomial(self) -> Optional[SkewPolynomial]:
        """The element as a member of K[F], or None when it is not one."""
        if self._f_power == 0:
            return self.num
        q, r = skew_divmod(self.num, self.den, "right")
        return None if r else q

    def residue(self) -> FieldElement:
        """
        Image in the residue field for valuation ≥ 0.

        For v(num) = v(den) = e the residue is frobenius^{-e}(num_e / den_e).
        """
        vn, vd = self.num.valuation, self.den.valuation
        if vn is INF or vn > vd:
            return self.field.zero()
        if vn < vd:
            raise ValidationError("x", "residue needs an element of valuation >= 0", vn - vd)
        ratio = self.num.coefficient(vn) * self.den.coefficient(vd).inverse()
        return ratio.frobenius(-vd)

    # ---- Arithmetic ----

    def __add__(self, other: "SkewFraction") -> "SkewFraction":
        if not other:
            return self
        if not self:
            return other
        m, n = self._f_power, other._f_power
        if m is not None and n is not None:
            top = max(m, n)
            num = self.num.f_times(top - m) + other.num.f_times(top - n)
            return SkewFraction(SkewPolynomial.monomial(self.field, top), num)
        lcm, c1, c2 = skew_lclm(self.den, other.den)
        return SkewFraction(lcm, c1 * self.num + c2 * other.num)

    def __neg__(self) -> "SkewFraction":
        return SkewFraction(self.den, -self.num, reduced=True)

    def __sub__(self, other: "SkewFraction") -> "SkewFraction":
        return self + (-other)

    def __mul__(self, other: "SkewFraction") -> "SkewFraction":
        if not self or not other:
            return SkewFraction.from_poly(SkewPolynomial.zero(self.field))
        m, n = self._f_power, other._f_power
        if m is not None and n is not None:
            # F^{-m} a F^{-n} c = F^{-(m+n)} (F^n a F^{-n}) c
            num = self.num.left_twist(n) * other.num
            return SkewFraction(SkewPolynomial.monomial(self.field, m + n), num)
        # (b⁻¹a)(d⁻¹c) = (c1·b)⁻¹(c2·c) where c1·a = c2·d
        _, c1, c2 = skew_lclm(self.num, other.den)
        return SkewFraction(c1 * self.den, c2 * other.num)

    def inverse(self) -> "SkewFraction":
        if not self.num:
            raise DivisionByZeroError("skew fraction")
        return SkewFraction(self.num, self.den)

    def __truediv__(self, other: "SkewFraction") -> "SkewFraction":
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, SkewFraction):
            return NotImplemented
        m, n = self._f_power, other._f_power
        if m is not None and n is not None:
            top = max(m, n)
            return self.num.f_times(top - m) == other.num.f_times(top - n)
        _, c1, c2 = skew_lclm(self.den, other.den)
        return c1 * self.num == c2 * other.num

    __hash__ = None

    def __repr__(self):
        if self._f_power == 0:
            return repr(self.num)
        return f"({self.den!r})^-1*({self.num!r})"


def _reduce(den: SkewPolynomial, num: SkewPolynomial):
    field = den.field
    if not num:
        return SkewPolynomial.one(field), num
    if den.is_monomial():
        # strip common left powers of F: F^{-m}·F·x = F^{-(m-1)}·x
        m = den.degree
        k = min(m, num.valuation)
        if k:
            num = SkewPolynomial(field, num.coeffs[k:]).left_twist(-k)
            den = SkewPolynomial.monomial(field, m - k)
        return den, num
    g = skew_gcld(den, num)
    if g.degree > 0:
        den, _ = skew_divmod(den, g, "right")
        num, _ = skew_divmod(num, g, "right")
    unit = SkewPolynomial.constant(den.lead.inverse())
    return unit * den, unit * num
