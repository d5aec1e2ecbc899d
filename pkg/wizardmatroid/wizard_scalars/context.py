# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Scalar contexts: one object per supported endomorphism ring 𝔈.

A context bundles the ring, its division ring Q, the valuation v, the
uniformizer π, the residue field L with its residue map, and the
anti-automorphism τ. Linear algebra, matroid and flock code only talks to
scalars through a context, so every algorithm runs unchanged over ℤ, K[F]
and the Hurwitz order.
"""

from __future__ import annotations

import logging
import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Any, ClassVar, Iterable, Mapping, Optional, Tuple

from sympy import isprime, multiplicity

from wizardmatroid.utils.errors.errors import (
    ContextMismatchError,
    DivisionByZeroError,
    InvariantViolationError,
    SchemaError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField, default_modulus
from wizardmatroid.wizard_scalars.hurwitz import (
    HurwitzQuaternion,
    RationalQuaternion,
    hurwitz_units,
    nearest_divmod,
)
from wizardmatroid.wizard_scalars.skew_fraction import SkewFraction
from wizardmatroid.wizard_scalars.skew_polynomial import (
    Side,
    SkewPolynomial,
    skew_divmod,
    skew_lclm,
)
from wizardmatroid.wizard_scalars.valuation import INF, ValuationValue

logger = logging.getLogger(__name__)

__all__ = [
    "ScalarContext",
    "IntegerContext",
    "SkewPolyContext",
    "HurwitzContext",
    "make_context",
]


def _vp(p: int, n: int) -> int:
    return multiplicity(p, abs(n))


class ScalarContext(ABC):
    """
    Ring 𝔈 together with Q, v, π, L, ℓ and τ.

    Ring-level methods take and return elements of 𝔈; the others work in Q.
    """

    kind: ClassVar[str]
    supports_tau: ClassVar[bool] = True
    supports_flock: ClassVar[bool] = False
    supports_evaluation: ClassVar[bool] = False

    # ---- 𝔈 ----

    @abstractmethod
    def ring_zero(self): ...

    @abstractmethod
    def ring_one(self): ...

    @abstractmethod
    def ring_from_int(self, n: int): ...

    @abstractmethod
    def is_ring_element(self, x) -> bool: ...

    @abstractmethod
    def ring_divmod(self, a, b, side: Side = "left"): ...

    @abstractmethod
    def euclidean_size(self, a) -> int: ...

    @abstractmethod
    def normalize_unit(self, a, side: Side = "right"):
        """Unit u making a·u (side right) or u·a (side left) the canonical associate."""

    @abstractmethod
    def uniformizer(self): ...

    @abstractmethod
    def random_ring_element(self, rng: random.Random, size: int = 2): ...

    # ---- Q ----

    @abstractmethod
    def embed(self, a): ...

    def zero(self):
        return self.embed(self.ring_zero())

    def one(self):
        return self.embed(self.ring_one())

    def from_int(self, n: int):
        return self.embed(self.ring_from_int(n))

    @abstractmethod
    def inverse(self, x): ...

    @abstractmethod
    def valuation(self, x) -> ValuationValue:
        """v(x) for x in 𝔈 or Q; v(0) = INF."""

    @abstractmethod
    def tau(self, x): ...

    @abstractmethod
    def to_ring(self, x) -> Optional[Any]:
        """x as an element of 𝔈, or None if x ∉ 𝔈."""

    @abstractmethod
    def left_denominator(self, xs: Iterable) -> Any:
        """Nonzero c ∈ 𝔈 with c·x ∈ 𝔈 for every x."""

    @abstractmethod
    def pi_power(self, e: int):
        """π^e in Q, e ∈ ℤ."""

    def as_q(self, x):
        return x if not self.is_ring_element(x) else self.embed(x)

    # ---- Residues ----

    @property
    def residue_field(self) -> FiniteField:
        raise UnsupportedRingError("residue field", self.kind)

    def residue(self, x) -> FieldElement:
        raise UnsupportedRingError("residue", self.kind)

    def lift_residue(self, c: FieldElement):
        raise UnsupportedRingError("residue lift", self.kind)

    def residue_twist(self, c: FieldElement, times: int = 1) -> FieldElement:
        """φ^times where φ is the residue of x ↦ π·x·π⁻¹."""
        raise UnsupportedRingError("residue twist", self.kind)

    def _check_residue_input(self, x) -> None:
        v = self.valuation(x)
        if v is not INF and v < 0:
            raise ValidationError("x", "residue needs an element of valuation >= 0", v)

    # ---- Serialization ----

    @abstractmethod
    def descriptor(self) -> dict: ...

    @abstractmethod
    def parse_element(self, raw, path: str = "entry"): ...

    @abstractmethod
    def dump_element(self, a): ...

    def parse_q_element(self, raw, path: str = "entry"):
        if isinstance(raw, Mapping):
            if set(raw) != {"num", "den"}:
                raise SchemaError(path, "fraction entries need exactly 'num' and 'den'")
            num = self.parse_element(raw["num"], f"{path}.num")
            den = self.parse_element(raw["den"], f"{path}.den")
            if not den:
                raise SchemaError(f"{path}.den", "denominator must be nonzero")
            # left fractions: den⁻¹·num
            return self.inverse(self.embed(den)) * self.embed(num)
        return self.embed(self.parse_element(raw, path))

    @abstractmethod
    def dump_q_element(self, x): ...

    def __str__(self):
        return f"{self.kind}({', '.join(f'{k}={v}' for k, v in self.descriptor().items() if k != 'kind')})"


###############################################################################
#                                 INTEGERS                                    #
###############################################################################

@dataclass(frozen=True)
class IntegerContext(ScalarContext):
    """ℤ with the p-adic valuation; Q = ℚ, L = F_p, τ = id."""

    p: int
    kind: ClassVar[str] = "integers"
    supports_flock: ClassVar[bool] = True
    supports_evaluation: ClassVar[bool] = True

    def ring_zero(self):
        return 0

    def ring_one(self):
        return 1

    def ring_from_int(self, n: int):
        return int(n)

    def is_ring_element(self, x) -> bool:
        return isinstance(x, int)

    def ring_divmod(self, a, b, side: Side = "left"):
        if b == 0:
            raise DivisionByZeroError("integer")
        return divmod(a, b)

    def euclidean_size(self, a) -> int:
        return abs(a)

    def normalize_unit(self, a, side: Side = "right"):
        return -1 if a < 0 else 1

    def uniformizer(self):
        return self.p

    def random_ring_element(self, rng: random.Random, size: int = 2):
        bound = self.p ** max(size, 1)
        return rng.randint(-bound, bound)

    def embed(self, a):
        return Fraction(a)

    def inverse(self, x):
        if not x:
            raise DivisionByZeroError("rational")
        return 1 / Fraction(x)

    def valuation(self, x) -> ValuationValue:
        if not x:
            return INF
        x = Fraction(x)
        return _vp(self.p, x.numerator) - _vp(self.p, x.denominator)

    def tau(self, x):
        return x

    def to_ring(self, x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else None

    def left_denominator(self, xs: Iterable) -> int:
        return reduce(math.lcm, (Fraction(x).denominator for x in xs), 1)

    def pi_power(self, e: int):
        return Fraction(self.p) ** e

    @cached_property
    def residue_field(self) -> FiniteField:
        return FiniteField.of(self.p, 1)

    def residue(self, x) -> FieldElement:
        self._check_residue_input(x)
        x = Fraction(x)
        if x and self.valuation(x) > 0:
            return self.residue_field.zero()
        return self.residue_field.from_int(x.numerator * pow(x.denominator, -1, self.p))

    def lift_residue(self, c: FieldElement):
        return Fraction(c.coords[0])

    def residue_twist(self, c: FieldElement, times: int = 1) -> FieldElement:
        return c

    def descriptor(self) -> dict:
        return {"kind": self.kind, "p": self.p}

    def parse_element(self, raw, path: str = "entry"):
        if isinstance(raw, bool):
            raise SchemaError(path, "expected an integer or a decimal string")
        if isinstance(raw, int):
            return raw
        if isinstance(raw, str):
            try:
                return int(raw.strip())
            except ValueError:
                raise SchemaError(path, f"'{raw}' is not a decimal integer")
        raise SchemaError(path, "expected an integer or a decimal string")

    def dump_element(self, a):
        return str(a)

    def dump_q_element(self, x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return {"num": str(x.numerator), "den": str(x.denominator)}


###############################################################################
#                              SKEW POLYNOMIALS                               #
###############################################################################

@dataclass(frozen=True)
class SkewPolyContext(ScalarContext):
    """K[F] with K = F_{p^k}; v is F-adic, π = F, L = K, τ(F) = F⁻¹."""

    field: FiniteField
    kind: ClassVar[str] = "skew_poly"
    supports_flock: ClassVar[bool] = True
    supports_evaluation: ClassVar[bool] = True

    @property
    def p(self) -> int:
        return self.field.p

    def ring_zero(self):
        return SkewPolynomial.zero(self.field)

    def ring_one(self):
        return SkewPolynomial.one(self.field)

    def ring_from_int(self, n: int):
        return SkewPolynomial.constant(self.field.from_int(n))

    def constant(self, c: FieldElement) -> SkewPolynomial:
        return SkewPolynomial.constant(c)

    def F(self) -> SkewPolynomial:
        return SkewPolynomial.monomial(self.field, 1)

    def is_ring_element(self, x) -> bool:
        return isinstance(x, SkewPolynomial)

    def ring_divmod(self, a, b, side: Side = "left"):
        return skew_divmod(a, b, side)

    def euclidean_size(self, a) -> int:
        return a.degree

    def normalize_unit(self, a, side: Side = "right"):
        if not a:
            return self.ring_one()
        if side == "left":
            return SkewPolynomial.constant(a.lead.inverse())
        return SkewPolynomial.constant(a.lead.inverse().frobenius(-a.degree))

    def uniformizer(self):
        return self.F()

    def random_ring_element(self, rng: random.Random, size: int = 2):
        return SkewPolynomial(
            self.field, tuple(self.field.random_element(rng) for _ in range(size + 1))
        )

    def embed(self, a):
        return SkewFraction.from_poly(a)

    def inverse(self, x):
        x = self.as_q(x)
        return x.inverse()

    def valuation(self, x) -> ValuationValue:
        return x.valuation

    def tau(self, x):
        x = self.as_q(x)
        top = self._tau_poly(x.num)
        if x.den.is_monomial() and x.den.degree == 0:
            return top
        return top * self._tau_poly(x.den).inverse()

    def _tau_poly(self, a: SkewPolynomial) -> SkewFraction:
        # Σ F^{-i} a_i = F^{-m} Σ frob^{m-i}(a_i) F^{m-i}
        if not a:
            return SkewFraction.from_poly(a)
        m = a.degree
        coeffs = tuple(a.coeffs[m - j].frobenius(j) for j in range(m + 1))
        return SkewFraction(SkewPolynomial.monomial(self.field, m), SkewPolynomial(self.field, coeffs))

    def to_ring(self, x):
        if isinstance(x, SkewPolynomial):
            return x
        return x.as_polynomial()

    def left_denominator(self, xs: Iterable) -> SkewPolynomial:
        common = self.ring_one()
        for x in xs:
            x = self.as_q(x)
            if not x or x.den.degree == 0:
                continue
            common, _, _ = skew_lclm(common, x.den)
        return common

    def pi_power(self, e: int):
        return SkewFraction.f_power(self.field, e)

    @property
    def residue_field(self) -> FiniteField:
        return self.field

    def residue(self, x) -> FieldElement:
        x = self.as_q(x)
        self._check_residue_input(x)
        return x.residue()

    def lift_residue(self, c: FieldElement):
        return SkewFraction.from_poly(SkewPolynomial.constant(c))

    def residue_twist(self, c: FieldElement, times: int = 1) -> FieldElement:
        return c.frobenius(times)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.field.p,
            "k": self.field.k,
            "modulus": list(self.field.modulus),
        }

    def parse_element(self, raw, path: str = "entry"):
        if not isinstance(raw, list):
            raise SchemaError(path, "a skew polynomial is a list of field elements")
        coeffs = []
        for i, c in enumerate(raw):
            if not isinstance(c, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in c):
                raise SchemaError(f"{path}[{i}]", f"a field element is a list of {self.field.k} integers")
            if len(c) != self.field.k:
                raise SchemaError(f"{path}[{i}]", f"expected {self.field.k} residues, got {len(c)}")
            if any(not 0 <= x < self.field.p for x in c):
                raise SchemaError(f"{path}[{i}]", f"residues must lie in [0, {self.field.p})")
            coeffs.append(self.field.element(c))
        return SkewPolynomial(self.field, tuple(coeffs))

    def dump_element(self, a):
        return a.to_coords()

    def dump_q_element(self, x):
        x = self.as_q(x)
        if x.den.degree == 0:
            return self.dump_element(x.num)
        return {"num": self.dump_element(x.num), "den": self.dump_element(x.den)}


###############################################################################
#                            HURWITZ QUATERNIONS                              #
###############################################################################

@dataclass(frozen=True)
class HurwitzContext(ScalarContext):
    """
    The Hurwitz order with v(x) = v_p(N(x)); Q is the rational quaternion
    algebra and τ is conjugation. No residue map or evaluation model.
    """

    p: int
    kind: ClassVar[str] = "hurwitz"

    def __post_init__(self):
        if self.p != 2:
            logger.warning(
                f"Hurwitz context at p={self.p}: v_p(N(x)) is only a valuation at the ramified prime 2."
            )

    def ring_zero(self):
        return HurwitzQuaternion(0, 0, 0, 0)

    def ring_one(self):
        return HurwitzQuaternion(2, 0, 0, 0)

    def ring_from_int(self, n: int):
        return HurwitzQuaternion.from_int(n)

    def is_ring_element(self, x) -> bool:
        return isinstance(x, HurwitzQuaternion)

    def ring_divmod(self, a, b, side: Side = "left"):
        return nearest_divmod(a, b, side)

    def euclidean_size(self, a) -> int:
        return a.norm

    def normalize_unit(self, a, side: Side = "right"):
        if not a:
            return self.ring_one()
        if side == "left":
            return max(hurwitz_units(), key=lambda u: (u * a).coords)
        return max(hurwitz_units(), key=lambda u: (a * u).coords)

    @cached_property
    def _pi(self) -> HurwitzQuaternion:
        if self.p == 2:
            return HurwitzQuaternion(2, 2, 0, 0)
        bound = math.isqrt(self.p) + 1
        for a in range(bound + 1):
            for b in range(bound + 1):
                for c in range(bound + 1):
                    rest = self.p - a * a - b * b - c * c
                    if rest < 0:
                        continue
                    d = math.isqrt(rest)
                    if d * d == rest:
                        return HurwitzQuaternion(2 * a, 2 * b, 2 * c, 2 * d)
        raise InvariantViolationError("uniformizer", f"no element of norm {self.p}")

    def uniformizer(self):
        return self._pi

    def random_ring_element(self, rng: random.Random, size: int = 2):
        parity = rng.randrange(2)
        coords = [2 * rng.randint(-size, size) + parity for _ in range(4)]
        return HurwitzQuaternion(*coords)

    def embed(self, a):
        return RationalQuaternion(a)

    def inverse(self, x):
        return self.as_q(x).inverse()

    def valuation(self, x) -> ValuationValue:
        if isinstance(x, HurwitzQuaternion):
            return _vp(self.p, x.norm) if x else INF
        if not x:
            return INF
        return _vp(self.p, x.num.norm) - 2 * _vp(self.p, x.den)

    def tau(self, x):
        return self.as_q(x).conjugate()

    def to_ring(self, x):
        if isinstance(x, HurwitzQuaternion):
            return x
        if x.den == 1:
            return x.num
        if any(c % x.den for c in x.num.coords):
            return None
        coords = [c // x.den for c in x.num.coords]
        if len({c & 1 for c in coords}) > 1:
            return None
        return HurwitzQuaternion(*coords)

    def left_denominator(self, xs: Iterable) -> HurwitzQuaternion:
        common = reduce(math.lcm, (self.as_q(x).den for x in xs), 1)
        return HurwitzQuaternion.from_int(common)

    def pi_power(self, e: int):
        base = RationalQuaternion(self._pi)
        if e < 0:
            base, e = base.inverse(), -e
        out = self.one()
        for _ in range(e):
            out = out * base
        return out

    def descriptor(self) -> dict:
        return {"kind": self.kind, "p": self.p}

    def parse_element(self, raw, path: str = "entry"):
        if (
            not isinstance(raw, list)
            or len(raw) != 4
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw)
        ):
            raise SchemaError(path, "a Hurwitz quaternion is [A, B, C, D] in doubled coordinates")
        return HurwitzQuaternion(*raw)

    def dump_element(self, a):
        return list(a.coords)

    def dump_q_element(self, x):
        x = self.as_q(x)
        if x.den == 1:
            return self.dump_element(x.num)
        return {"num": self.dump_element(x.num), "den": [2 * x.den, 0, 0, 0]}


###############################################################################
#                                 FACTORY                                     #
###############################################################################

RING_KINDS = ("skew_poly", "integers", "hurwitz")


@lru_cache(maxsize=None)
def _cached_context(kind: str, p: int, k: int, modulus: Tuple[int, ...]) -> ScalarContext:
    if kind == "integers":
        return IntegerContext(p)
    if kind == "hurwitz":
        return HurwitzContext(p)
    return SkewPolyContext(FiniteField(p, k, modulus))


def make_context(descriptor: Mapping[str, Any], path: str = "ring") -> ScalarContext:
    """
    Builds (and caches) the context described by a ring descriptor.

    Parameters
    ----------
    descriptor : mapping
        ``{"kind": "skew_poly", "p": 2, "k": 2, "modulus": [1, 1, 1]}``,
        ``{"kind": "integers", "p": 2}`` or ``{"kind": "hurwitz", "p": 2}``.
        ``modulus`` may be omitted for skew rings; the built-in table is used.

    Raises
    ------
    SchemaError
        Missing or mistyped fields.
    InvariantViolationError
        Non-prime p or reducible modulus.
    """
    if not isinstance(descriptor, Mapping):
        raise SchemaError(path, "ring descriptor must be an object")
    kind = descriptor.get("kind")
    if kind not in RING_KINDS:
        raise SchemaError(f"{path}.kind", f"expected one of {', '.join(RING_KINDS)}, got {kind!r}")
    p = descriptor.get("p")
    if not isinstance(p, int) or isinstance(p, bool):
        raise SchemaError(f"{path}.p", "expected an integer prime")
    if not isprime(p):
        raise InvariantViolationError("ring descriptor", f"p={p} is not prime")
    k, modulus = 1, ()
    if kind == "skew_poly":
        k = descriptor.get("k", 1)
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise SchemaError(f"{path}.k", "expected a positive integer")
        raw = descriptor.get("modulus")
        if raw is None:
            modulus = default_modulus(p, k)
        else:
            if not isinstance(raw, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in raw):
                raise SchemaError(f"{path}.modulus", "expected a list of integers")
            modulus = tuple(raw)
    extra = set(descriptor) - {"kind", "p", "k", "modulus"}
    if extra:
        raise SchemaError(path, f"unexpected fields {sorted(extra)}")
    return _cached_context(kind, p, k, modulus)


def context_from_field(field: FiniteField) -> SkewPolyContext:
    return _cached_context("skew_poly", field.p, field.k, field.modulus)


def check_same_context(left: ScalarContext, right: ScalarContext) -> None:
    if left is not right and left != right:
        raise ContextMismatchError(left, right)
