# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Linear flocks of a right module.

For α ∈ ℤⁿ the slice V_α is the reduction of (π^{−α}V) ∩ Rⁿ in Lⁿ, where
V = NQ and R is the valuation ring of Q. Slices are computed by the column
normalisation loop in :func:`flock_slice`; the sweeps verify the two flock
axioms and compare slice matroids with the argmin matroids of the Lindström
valuation on a box of α's.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from wizardmatroid.utils.errors.errors import (
    InvalidInputError,
    InvariantViolationError,
    NormalizationLimitError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.utils.settings import normalization_cap
from wizardmatroid.wizard_linalg.elimination import echelon, field_domain
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, Subspace
from wizardmatroid.wizard_linalg.modules import saturate
from wizardmatroid.wizard_matroids.matroid import Matroid, elements_of, matroid_from_vectors
from wizardmatroid.wizard_matroids.valuated import ValuatedMatroid, lindstrom_valuation
from wizardmatroid.wizard_scalars.context import ScalarContext
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField
from wizardmatroid.wizard_scalars.valuation import is_finite, vmin

logger = logging.getLogger(__name__)

__all__ = [
    "FlockSlice",
    "FlockReport",
    "flock_slice",
    "flock_matroid",
    "frobenius_twist",
    "check_flock_axioms",
    "check_flock_valuation_consistency",
]

Alpha = Tuple[int, ...]
Method = Literal["slice", "argmin"]


@dataclass(frozen=True)
class FlockSlice:
    """
    V_α as an L-basis: ``columns`` are L-independent vectors of length ``n``.
    """

    ctx: ScalarContext
    alpha: Alpha
    columns: Tuple[Tuple[FieldElement, ...], ...]
    n: int

    @property
    def field(self) -> FiniteField:
        return self.ctx.residue_field

    @property
    def dim(self) -> int:
        return len(self.columns)

    def rows(self) -> List[List[FieldElement]]:
        return [[col[i] for col in self.columns] for i in range(self.n)]

    def matroid(self) -> Matroid:
        return matroid_from_vectors(field_domain(self.field), self.rows(), self.dim)

    def space(self) -> Subspace:
        return _span(self.field, self.columns, self.n)

    def same_span(self, other: "FlockSlice") -> bool:
        return self.space() == other.space()

    def spans(self, columns: Sequence[Sequence[FieldElement]]) -> bool:
        """True iff ``columns`` span exactly V_α."""
        return self.space() == _span(self.field, columns, self.n)

    def to_dict(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "alpha": list(self.alpha),
            "dim": self.dim,
            "basis": [[c.to_list() for c in row] for row in self.rows()],
        }


@dataclass
class FlockReport:
    """Outcome of a box sweep; ``violation`` describes the first failure in grid order."""

    ok: bool
    checked: int
    radius: int
    violation: Optional[dict] = field(default=None)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "radius": self.radius, "violation": self.violation}


###############################################################################
#                            SUBSPACES OF Lⁿ                                  #
###############################################################################

def _span(field_: FiniteField, vectors: Sequence[Sequence], n: int) -> Subspace:
    return Subspace.spanned_by(field_domain(field_), vectors, n)


def _with_zero_coordinate(field_: FiniteField, columns: Sequence[Sequence], n: int, i: int) -> List[List]:
    """Spanning set of {v ∈ span(columns) : v_i = 0}."""
    if not columns:
        return []
    e = echelon(field_domain(field_), [[col[i]] for col in columns], 1, "right")
    zero = field_.zero()
    out = []
    for lam in e.kernel():
        vec = [zero] * n
        for col, c in zip(columns, lam):
            if c:
                vec = [x + y * c for x, y in zip(vec, col)]
        out.append(vec)
    return out


def _zero_out(columns: Sequence[Sequence], i: int, zero) -> List[List]:
    return [[zero if j == i else x for j, x in enumerate(col)] for col in columns]


###############################################################################
#                                 SLICES                                      #
###############################################################################

def _require_flock(N, operation: str) -> None:
    if not isinstance(N, ModuleMatrix):
        raise InvalidInputError("N", "ModuleMatrix", N)
    if N.orientation != "right":
        raise ValidationError("N", "flocks are defined for right modules")
    if not N.ctx.supports_flock:
        raise UnsupportedRingError(operation, N.ctx.kind)


def _check_alpha(alpha: Sequence[int], n: int) -> Alpha:
    alpha = tuple(alpha)
    if len(alpha) != n:
        raise ValidationError("alpha", f"expected {n} entries, got {len(alpha)}", list(alpha))
    for a in alpha:
        if not isinstance(a, int) or isinstance(a, bool):
            raise InvalidInputError("alpha", "a vector of integers", a)
    return alpha


def _column_shift(ctx: ScalarContext, col: List) -> Tuple[List, int]:
    t = vmin(ctx.valuation(x) for x in col)
    if not is_finite(t):
        raise InvariantViolationError("flock column", "a generator became zero")
    if t == 0:
        return col, 0
    factor = ctx.pi_power(-t)
    return [x * factor for x in col], t


def _normalized_columns(S: ModuleMatrix, alpha: Alpha) -> List[List]:
    """
    Columns spanning the lattice (π^{−α}V) ∩ Rⁿ with L-independent reductions.
    """
    ctx = S.ctx
    n = S.nrows
    L = ctx.residue_field
    row_factors = [ctx.pi_power(-a) for a in alpha]
    cols = []
    spread = 0
    for col in S.columns():
        scaled = [f * ctx.embed(x) for f, x in zip(row_factors, col)]
        vals = [v for v in (ctx.valuation(x) for x in scaled) if is_finite(v)]
        spread += max(vals) - min(vals)
        cols.append(_column_shift(ctx, scaled)[0])
    cap = normalization_cap(n, len(cols), max((abs(a) for a in alpha), default=0), spread)
    steps = 0
    while True:
        reduced = [[ctx.residue(x) for x in col] for col in cols]
        e = echelon(field_domain(L), reduced, n, "right")
        if e.rank == len(cols):
            return cols
        lam = e.kernel()[0]
        k = next(j for j, c in enumerate(lam) if c)
        combined = [ctx.zero()] * n
        for col, c in zip(cols, lam):
            if c:
                lift = ctx.lift_residue(c)
                combined = [acc + x * lift for acc, x in zip(combined, col)]
        cols[k], t = _column_shift(ctx, combined)
        if t < 1:
            raise InvariantViolationError("flock normalisation", "a lifted dependency did not gain valuation")
        steps += 1
        logger.debug(f"flock_slice alpha={list(alpha)}: column {k} raised by pi^{t} (step {steps})")
        if steps > cap:
            raise NormalizationLimitError(list(alpha), cap)
        if steps == cap // 2 + 1:
            logger.warning(f"flock_slice alpha={list(alpha)}: normalisation loop running long ({steps} steps)")


def flock_slice(N: ModuleMatrix, alpha: Sequence[int], saturated: bool = False) -> FlockSlice:
    """
    V_α for the right module ``N``.

    Parameters
    ----------
    N : ModuleMatrix
        Right module over K[F] or ℤ.
    alpha : sequence of int
        One integer per coordinate.
    saturated : bool
        Skip the saturation step when ``N`` is already known to be saturated
        and in column Hermite form.
    """
    _require_flock(N, "flock_slice")
    alpha = _check_alpha(alpha, N.nrows)
    S = N if saturated else saturate(N)
    cols = _normalized_columns(S, alpha)
    ctx = N.ctx
    columns = tuple(tuple(ctx.residue(x) for x in col) for col in cols)
    return FlockSlice(ctx, alpha, columns, N.nrows)


def frobenius_twist(slice_: FlockSlice, times: int = 1) -> FlockSlice:
    """φ^times applied coordinatewise; φ⁻¹ for negative ``times``."""
    ctx = slice_.ctx
    columns = tuple(tuple(ctx.residue_twist(c, times) for c in col) for col in slice_.columns)
    alpha = tuple(a - times for a in slice_.alpha)
    return FlockSlice(ctx, alpha, columns, slice_.n)


def _argmin_matroid(vm: ValuatedMatroid, alpha: Alpha) -> Matroid:
    shifted = {b: v - sum(alpha[i] for i in elements_of(b)) for b, v in vm.mu.items()}
    low = min(shifted.values())
    return Matroid(vm.n, [b for b, v in shifted.items() if v == low])


def flock_matroid(N: ModuleMatrix, alpha: Sequence[int], method: Method = "slice") -> Matroid:
    """
    Matroid of V_α, either from the slice itself or as the set of bases
    minimising μ(B) − Σ_{i∈B} α_i.
    """
    if method == "slice":
        return flock_slice(N, alpha).matroid()
    if method != "argmin":
        raise InvalidInputError("method", "'slice' or 'argmin'", method)
    alpha = _check_alpha(alpha, N.nrows)
    return _argmin_matroid(lindstrom_valuation(N), alpha)


###############################################################################
#                                 SWEEPS                                      #
###############################################################################

class _SliceCache:
    """Slices of one saturated module keyed by α."""

    def __init__(self, S: ModuleMatrix):
        self.S = S
        self._slices: Dict[Alpha, FlockSlice] = {}

    def get(self, alpha: Alpha) -> FlockSlice:
        found = self._slices.get(alpha)
        if found is None:
            found = flock_slice(self.S, alpha, saturated=True)
            self._slices[alpha] = found
        return found


def _box(n: int, radius: int):
    if not isinstance(radius, int) or radius < 0:
        raise InvalidInputError("radius", "a nonnegative integer", radius)
    return list(itertools.product(range(-radius, radius + 1), repeat=n))


def _sweep(points, check, threads: int) -> Tuple[int, Optional[dict]]:
    if threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, points))
    else:
        results = []
        for alpha in points:
            found = check(alpha)
            results.append(found)
            if found is not None:
                break
    for count, found in enumerate(results, start=1):
        if found is not None:
            return count, found
    return len(points), None


def check_flock_axioms(N: ModuleMatrix, radius: int = 2, threads: int = 1) -> FlockReport:
    """
    Checks, for every α in [−radius, radius]ⁿ and every i:

    * the slice has dimension rank N;
    * {v ∈ V_α : v_i = 0} equals V_{α+e_i} with coordinate i zeroed;
    * V_{α−(1,…,1)} = φ(V_α).
    """
    _require_flock(N, "check_flock_axioms")
    S = saturate(N)
    n, r = S.nrows, S.ncols
    cache = _SliceCache(S)
    L = S.ctx.residue_field
    zero = L.zero()

    def check(alpha: Alpha) -> Optional[dict]:
        here = cache.get(alpha)
        if here.dim != r:
            return {"axiom": "dimension", "alpha": list(alpha), "dim": here.dim, "rank": r}
        for i in range(n):
            up = cache.get(alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:])
            left = _with_zero_coordinate(L, here.columns, n, i)
            right = _zero_out(up.columns, i, zero)
            if _span(L, left, n) != _span(L, right, n):
                return {"axiom": "hyperplane", "alpha": list(alpha), "index": i}
        down = cache.get(tuple(a - 1 for a in alpha))
        if not down.same_span(frobenius_twist(here, 1)):
            return {"axiom": "twist", "alpha": list(alpha)}
        return None

    checked, violation = _sweep(_box(n, radius), check, threads)
    if violation is not None:
        logger.debug(f"flock axioms fail: {violation}")
    return FlockReport(violation is None, checked, radius, violation)


def check_flock_valuation_consistency(N: ModuleMatrix, radius: int = 2, threads: int = 1) -> FlockReport:
    """Slice matroid equals argmin matroid at every α of the box."""
    _require_flock(N, "check_flock_valuation_consistency")
    S = saturate(N)
    vm = lindstrom_valuation(S, threads=threads)
    cache = _SliceCache(S)

    def check(alpha: Alpha) -> Optional[dict]:
        from_slice = cache.get(alpha).matroid()
        from_valuation = _argmin_matroid(vm, alpha)
        if from_slice != from_valuation:
            return {
                "alpha": list(alpha),
                "slice_bases": [list(b) for b in from_slice.basis_list()],
                "argmin_bases": [list(b) for b in from_valuation.basis_list()],
            }
        return None

    checked, violation = _sweep(_box(S.nrows, radius), check, threads)
    if violation is not None:
        logger.debug(f"flock/valuation mismatch: {violation}")
    return FlockReport(violation is None, checked, radius, violation)
