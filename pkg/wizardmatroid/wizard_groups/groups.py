# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Point models of the groups behind the endomorphism rings.

K[F] acts on the additive group of a finite extension E ⊇ K, F being the
p-th power map; ℤ acts on the multiplicative group of F_q by exponents.
Points of the subgroup attached to a right module N are Σ_j ψ^{(j)}(a_j)
(additively) or Π_j ψ^{(j)}(t_j) (multiplicatively), and a left module J
annihilates them when every row pairs to the identity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Literal, Optional, Sequence, Tuple, Union

from wizardmatroid.utils.errors.errors import (
    InvalidInputError,
    InvariantViolationError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.utils.settings import DEFAULT_EXTENSION_DEGREE, DEFAULT_MULTIPLICATIVE_PRIME
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix
from wizardmatroid.wizard_scalars.context import IntegerContext, ScalarContext, SkewPolyContext
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField
from wizardmatroid.wizard_scalars.skew_polynomial import SkewPolynomial

logger = logging.getLogger(__name__)

__all__ = [
    "SplitMix64",
    "GroupPoint",
    "AdditiveModel",
    "MultiplicativeModel",
    "group_model",
    "eval_endo",
    "parametrize",
    "sample_points",
    "verify_annihilator",
]

GroupKind = Literal["additive", "multiplicative"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """
    64-bit splitmix generator.

    state ← state + 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds
    with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. Bounded draws use
    rejection sampling, so a seed gives the same points on every platform.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise InvalidInputError("seed", "an integer", seed)
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValidationError("n", "upper bound must be positive", n)
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randrange(self, start: int, stop: Optional[int] = None) -> int:
        if stop is None:
            start, stop = 0, start
        return start + self.randbelow(stop - start)


@dataclass(frozen=True)
class GroupPoint:
    """A point of Gⁿ; multiplicative coordinates are nonzero."""

    kind: GroupKind
    coords: Tuple[FieldElement, ...]

    def __post_init__(self):
        if self.kind == "multiplicative" and not all(self.coords):
            raise ValidationError("coords", "multiplicative coordinates must be nonzero")

    def to_list(self) -> List[list]:
        return [c.to_list() for c in self.coords]


###############################################################################
#                                 MODELS                                      #
###############################################################################

@lru_cache(maxsize=None)
def _embedding_root(small: FiniteField, big: FiniteField) -> FieldElement:
    """A root in ``big`` of the modulus defining ``small``."""
    if big.p != small.p or big.k % small.k:
        raise InvariantViolationError("field embedding", f"{small} does not embed into {big}")
    if small.k == 1:
        # prime field: only the constant coordinate is used
        return big.zero()
    exponent = (big.order - 1) // (small.order - 1)
    seen = set()
    for index in range(1, big.order):
        t = big.from_index(index) ** exponent
        if t.coords in seen:
            continue
        seen.add(t.coords)
        value = big.zero()
        power = big.one()
        for c in small.modulus:
            if c:
                value = value + power * c
            power = power * t
        if not value:
            return t
        if len(seen) == small.order - 1:
            break
    raise InvariantViolationError("field embedding", f"no root of {list(small.modulus)} in {big}")


class AdditiveModel:
    """
    G_a over E = F_{p^{k·s}}; a K[F]-element Σ a_i F^i acts by x ↦ Σ a_i x^{p^i}.
    """

    kind: GroupKind = "additive"

    def __init__(self, ctx: SkewPolyContext, degree: int = DEFAULT_EXTENSION_DEGREE, field: FiniteField = None):
        if field is None:
            if not isinstance(degree, int) or degree < 1:
                raise InvalidInputError("degree", "a positive integer", degree)
            field = FiniteField.of(ctx.field.p, ctx.field.k * degree)
        self.ctx = ctx
        self.field = field
        self._root = _embedding_root(ctx.field, field)

    def embed(self, c: FieldElement) -> FieldElement:
        out = self.field.zero()
        power = self.field.one()
        for coord in c.coords:
            if coord:
                out = out + power * coord
            power = power * self._root
        return out

    def identity(self) -> FieldElement:
        return self.field.zero()

    def combine(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x + y

    def act(self, e: SkewPolynomial, x: FieldElement) -> FieldElement:
        out = self.field.zero()
        for i, c in enumerate(e.coeffs):
            if c:
                out = out + self.embed(c) * x.frobenius(i)
        return out

    def random_parameter(self, rng) -> FieldElement:
        return self.field.random_element(rng)


class MultiplicativeModel:
    """G_m over F_q; an integer a acts by t ↦ t^a."""

    kind: GroupKind = "multiplicative"

    def __init__(self, ctx: IntegerContext, prime: int = DEFAULT_MULTIPLICATIVE_PRIME, field: FiniteField = None):
        self.ctx = ctx
        self.field = field if field is not None else FiniteField.of(prime, 1)

    def identity(self) -> FieldElement:
        return self.field.one()

    def combine(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x * y

    def act(self, e: int, x: FieldElement) -> FieldElement:
        if not x:
            raise ValidationError("x", "multiplicative points must be nonzero")
        return x ** e

    def random_parameter(self, rng) -> FieldElement:
        return self.field.random_element(rng, nonzero=True)


GroupModel = Union[AdditiveModel, MultiplicativeModel]


def group_model(
    ctx: ScalarContext,
    degree: int = DEFAULT_EXTENSION_DEGREE,
    prime: int = DEFAULT_MULTIPLICATIVE_PRIME,
) -> GroupModel:
    """The point model matching ``ctx``; Hurwitz rings have none."""
    if isinstance(ctx, SkewPolyContext):
        return AdditiveModel(ctx, degree)
    if isinstance(ctx, IntegerContext):
        return MultiplicativeModel(ctx, prime)
    raise UnsupportedRingError("group evaluation", ctx.kind)


def _model_for_point(ctx: ScalarContext, x: FieldElement) -> GroupModel:
    if isinstance(ctx, SkewPolyContext):
        return AdditiveModel(ctx, field=x.field)
    if isinstance(ctx, IntegerContext):
        return MultiplicativeModel(ctx, field=x.field)
    raise UnsupportedRingError("group evaluation", ctx.kind)


###############################################################################
#                              EVALUATION                                     #
###############################################################################

def eval_endo(ctx: ScalarContext, e, x: FieldElement, model: GroupModel = None) -> FieldElement:
    """
    e(x) for an endomorphism e ∈ 𝔈 and a group element x.

    Without ``model`` the group is read off ``x``: its field is E for K[F]
    and F_q for ℤ.
    """
    if model is None:
        model = _model_for_point(ctx, x)
    return model.act(e, x)


def parametrize(N: ModuleMatrix, params: Sequence[FieldElement], model: GroupModel = None) -> GroupPoint:
    """Σ_j ψ^{(j)}(a_j) over the column generators ψ^{(j)} of ``N``."""
    if N.orientation != "right":
        raise ValidationError("N", "points are parametrised by a right module")
    if len(params) != N.ncols:
        raise ValidationError("params", f"expected {N.ncols} parameters, got {len(params)}")
    if model is None:
        model = group_model(N.ctx)
    coords = []
    for row in N.entries:
        acc = model.identity()
        for e, a in zip(row, params):
            if e:
                acc = model.combine(acc, model.act(e, a))
        coords.append(acc)
    return GroupPoint(model.kind, tuple(coords))


def sample_points(
    N: ModuleMatrix,
    count: int,
    seed: int,
    model: GroupModel = None,
) -> List[GroupPoint]:
    """``count`` points of the subgroup of ``N`` from seeded random parameters."""
    if not isinstance(count, int) or count < 0:
        raise InvalidInputError("count", "a nonnegative integer", count)
    if model is None:
        model = group_model(N.ctx)
    rng = SplitMix64(seed)
    points = []
    for _ in range(count):
        params = [model.random_parameter(rng) for _ in range(N.ncols)]
        points.append(parametrize(N, params, model))
    logger.debug(f"sample_points: {count} points in {model.field} (seed {seed})")
    return points


def verify_annihilator(J: ModuleMatrix, points: Sequence[GroupPoint], model: GroupModel = None) -> bool:
    """
    True iff every row φ of the left module ``J`` sends every point to the
    identity: Σ_i φ_i(q_i) = 0 or Π_i φ_i(q_i) = 1.
    """
    if J.orientation != "left":
        raise ValidationError("J", "annihilators are left modules")
    if model is None:
        model = group_model(J.ctx)
    for point in points:
        if len(point.coords) != J.ncols:
            raise ValidationError("points", f"expected {J.ncols} coordinates, got {len(point.coords)}")
        for row in J.entries:
            acc = model.identity()
            for phi, q in zip(row, point.coords):
                if phi:
                    acc = model.combine(acc, model.act(phi, q))
            if acc != model.identity():
                logger.debug(f"verify_annihilator: row {row} does not vanish on {point.to_list()}")
                return False
    return True
