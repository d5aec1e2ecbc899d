# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Module-level operations: rank, kernels, Dieudonné valuations, Hermite
forms, saturation, orthogonal complements and the duality construction.
"""

from __future__ import annotations

import logging
from typing import Iterable, List, Literal, Optional, Sequence, Union

from wizardmatroid.utils.errors.errors import (
    ContextMismatchError,
    IndexOutOfRangeError,
    InvalidInputError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.wizard_linalg.elimination import (
    Echelon,
    combine,
    echelon,
    q_domain,
    ring_domain,
    scale,
)
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix, Subspace
from wizardmatroid.wizard_scalars.context import ScalarContext
from wizardmatroid.wizard_scalars.skew_polynomial import Side
from wizardmatroid.wizard_scalars.valuation import INF, ValuationValue, vsum

logger = logging.getLogger(__name__)

AnyMatrix = Union[ModuleMatrix, QMatrix]
Strategy = Literal["euclid", "fraction"]
Level = Literal["ring", "q"]

__all__ = [
    "q_rank",
    "left_kernel",
    "right_kernel",
    "independent_generators",
    "dieudonne_val",
    "column_hermite",
    "row_hermite",
    "saturate",
    "is_saturated",
    "perp",
    "dual_module",
    "span_equal",
    "solve_membership",
    "delete_rows",
    "contract_rows",
    "scale_rows",
    "parallel_extension",
    "matmul",
]


def _domain(A: AnyMatrix):
    return ring_domain(A.ctx) if isinstance(A, ModuleMatrix) else q_domain(A.ctx)


def _require_module(A, name: str = "A") -> None:
    if not isinstance(A, ModuleMatrix):
        raise InvalidInputError(name, "ModuleMatrix", A)


###############################################################################
#                             RANK AND KERNELS                                #
###############################################################################

def q_rank(A: AnyMatrix) -> int:
    """
    Rank of the column span over Q (equal to the rank of the row span).

    Module matrices are eliminated fraction-free over 𝔈, which gives the
    same number.
    """
    return echelon(_domain(A), A.rows(), A.ncols, "left", track=False).rank


def left_kernel(A: AnyMatrix) -> AnyMatrix:
    """
    Rows spanning {c : c·A = 0}, as a left-oriented matrix with n − rank rows.

    Over 𝔈 (ModuleMatrix input) the rows are an 𝔈-basis of the kernel
    module, which is saturated.
    """
    e = echelon(_domain(A), A.rows(), A.ncols, "left")
    return type(A).from_rows(A.ctx, e.kernel(), A.nrows, "left")


def right_kernel(A: AnyMatrix) -> AnyMatrix:
    """Columns spanning {x : A·x = 0}, as a right-oriented matrix."""
    e = echelon(_domain(A), A.columns(), A.nrows, "right")
    return type(A).from_columns(A.ctx, e.kernel(), A.ncols, "right")


def independent_generators(A: AnyMatrix) -> AnyMatrix:
    """Echelon generators of the span of ``A`` (columns for right orientation, rows for left)."""
    domain = _domain(A)
    if A.orientation == "right":
        e = echelon(domain, A.columns(), A.nrows, "right", track=False)
        return type(A).from_columns(A.ctx, e.vectors[: e.rank], A.nrows, "right")
    e = echelon(domain, A.rows(), A.ncols, "left", track=False)
    return type(A).from_rows(A.ctx, e.vectors[: e.rank], A.ncols, "left")


def matmul(A: AnyMatrix, B: AnyMatrix) -> AnyMatrix:
    if A.ncols != B.nrows:
        raise ValidationError("matmul", f"shapes {A.shape} and {B.shape} do not compose")
    if A.ctx != B.ctx:
        raise ContextMismatchError(A.ctx, B.ctx)
    same = isinstance(A, ModuleMatrix) and isinstance(B, ModuleMatrix)
    if not same:
        A, B = A.to_q(), B.to_q()
    zero = _domain(A).zero
    cols = B.columns()
    rows = []
    for row in A.entries:
        out = []
        for col in cols:
            acc = zero
            for a, b in zip(row, col):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        rows.append(tuple(out))
    return type(A)(A.ctx, tuple(rows), B.ncols, A.orientation)


###############################################################################
#                          DIEUDONNÉ VALUATION                                #
###############################################################################

def dieudonne_val(A: AnyMatrix, strategy: Optional[Strategy] = None) -> ValuationValue:
    """
    v(det A) for the Dieudonné determinant of a square matrix; INF if singular.

    Parameters
    ----------
    A : ModuleMatrix or QMatrix
        Square matrix.
    strategy : {"euclid", "fraction"}, optional
        ``"euclid"`` eliminates fraction-free over 𝔈 with unimodular row
        operations (Q-matrices first get their rows cleared by left
        denominators); ``"fraction"`` eliminates over Q. Defaults to the
        natural one for the input type. Both give the same value.
    """
    if not A.is_square():
        raise ValidationError("A", "Dieudonné valuation needs a square matrix", A.shape)
    ctx = A.ctx
    n = A.nrows
    if strategy is None:
        strategy = "euclid" if isinstance(A, ModuleMatrix) else "fraction"
    if strategy == "fraction":
        e = echelon(q_domain(ctx), A.to_q().rows(), n, "left", track=False)
        if e.rank < n:
            return INF
        return vsum(ctx.valuation(x) for x in e.pivot_entries())
    if strategy != "euclid":
        raise InvalidInputError("strategy", "'euclid' or 'fraction'", strategy)
    shift = 0
    if isinstance(A, ModuleMatrix):
        rows = A.rows()
    else:
        rows = []
        for row in A.rows():
            c = ctx.left_denominator(row)
            cq = ctx.embed(c)
            rows.append([ctx.to_ring(cq * x) for x in row])
            shift += ctx.valuation(c)
    e = echelon(ring_domain(ctx), rows, n, "left", track=False)
    if e.rank < n:
        return INF
    return vsum(ctx.valuation(x) for x in e.pivot_entries()) - shift


###############################################################################
#                              HERMITE FORMS                                  #
###############################################################################

def _hermite(ctx: ScalarContext, vectors: Sequence[Sequence], length: int, side: Side) -> Echelon:
    """
    Echelon form over 𝔈 with normalised pivots and reduced entries above them.
    """
    e = echelon(ring_domain(ctx), vectors, length, side)
    vecs, trans = e.vectors, e.transform
    for i, c in enumerate(e.pivots):
        u = ctx.normalize_unit(vecs[i][c], side)
        vecs[i] = scale(vecs[i], u, side)
        trans[i] = scale(trans[i], u, side)
    for j, c in enumerate(e.pivots):
        for i in range(j):
            if not vecs[i][c]:
                continue
            q, _ = ctx.ring_divmod(vecs[i][c], vecs[j][c], side)
            if q:
                vecs[i] = combine(vecs[i], vecs[j], q, side)
                trans[i] = combine(trans[i], trans[j], q, side)
    return e


def column_hermite(A: ModuleMatrix) -> ModuleMatrix:
    """
    Column echelon form of the right 𝔈-span of ``A``.

    Pivot rows strictly increase; pivots are monic (K[F]), positive (ℤ) or
    the canonical associate under the 24 units (Hurwitz); entries of earlier
    columns at later pivot rows are reduced; zero columns are dropped.
    """
    _require_module(A)
    e = _hermite(A.ctx, A.columns(), A.nrows, "right")
    return ModuleMatrix.from_columns(A.ctx, e.vectors[: e.rank], A.nrows, A.orientation)


def row_hermite(J: ModuleMatrix) -> ModuleMatrix:
    """Row echelon form of the left 𝔈-span of ``J`` (left units, left division)."""
    _require_module(J, "J")
    e = _hermite(J.ctx, J.rows(), J.ncols, "left")
    return ModuleMatrix.from_rows(J.ctx, e.vectors[: e.rank], J.ncols, J.orientation)


###############################################################################
#                     ORTHOGONALITY AND SATURATION                            #
###############################################################################

def perp(M: ModuleMatrix) -> ModuleMatrix:
    """
    Orthogonal complement under ⟨φ, ψ⟩ = Σ φ_i ψ_i.

    A right module N (n×d) gives the left module N^⊥ = {φ : φ·N = 0} as a
    row matrix; a left module J (k×n) gives the right module
    J^⊥ = {ψ : J·ψ = 0} as a column matrix. The result is saturated and has
    rank n − rank M.
    """
    _require_module(M, "M")
    ctx = M.ctx
    n = M.ambient_dim
    if M.orientation == "right":
        e = echelon(ring_domain(ctx), M.rows(), M.ncols, "left")
        J = ModuleMatrix.from_rows(ctx, e.kernel(), n, "left")
        return row_hermite(J)
    e = echelon(ring_domain(ctx), M.columns(), M.nrows, "right")
    N = ModuleMatrix.from_columns(ctx, e.kernel(), n, "right")
    return column_hermite(N)


def saturate(M: ModuleMatrix) -> ModuleMatrix:
    """
    Generators of M^sat = MQ ∩ 𝔈ⁿ (QM ∩ 𝔈ⁿ for left modules), in Hermite form.
    """
    return perp(perp(M))


def solve_membership(M: ModuleMatrix, vector: Sequence) -> Optional[List]:
    """
    Coefficients x ∈ 𝔈^d with M·x = v (right module) or x·M = v (left
    module), or None when ``vector`` is not in the 𝔈-span.
    """
    _require_module(M, "M")
    ctx = M.ctx
    n = M.ambient_dim
    if len(vector) != n:
        raise ValidationError("vector", f"expected {n} entries, got {len(vector)}")
    side: Side = "right" if M.orientation == "right" else "left"
    gens = M.generators()
    e = _hermite(ctx, gens, n, side)
    residual = list(vector)
    coeffs = []
    for i, c in enumerate(e.pivots):
        if not residual[c]:
            coeffs.append(ctx.ring_zero())
            continue
        q, r = ctx.ring_divmod(residual[c], e.vectors[i][c], side)
        if r:
            return None
        residual = combine(residual, e.vectors[i], q, side)
        coeffs.append(q)
    if any(residual):
        return None
    zero = ctx.ring_zero()
    out = []
    for j in range(len(gens)):
        acc = zero
        for i, y in enumerate(coeffs):
            t = e.transform[i][j]
            if y and t:
                acc = acc + (t * y if side == "right" else y * t)
        out.append(acc)
    return out


def span_equal(A: AnyMatrix, B: AnyMatrix, level: Level = "ring") -> bool:
    """
    Equality of spans.

    ``level="q"`` compares the Q-spans as :class:`Subspace` values; ``level="ring"`` decides
    equality of the 𝔈-modules by mutual membership of generators.
    """
    if A.ctx != B.ctx:
        raise ContextMismatchError(A.ctx, B.ctx)
    if A.orientation != B.orientation:
        raise ValidationError("orientation", "cannot compare a right span with a left span")
    if A.ambient_dim != B.ambient_dim:
        raise ValidationError("n", f"ambient dimensions differ ({A.ambient_dim} vs {B.ambient_dim})")
    if level == "q":
        return Subspace.of(A) == Subspace.of(B)
    if level != "ring":
        raise InvalidInputError("level", "'ring' or 'q'", level)
    _require_module(A)
    _require_module(B, "B")
    return all(solve_membership(A, g) is not None for g in B.generators()) and all(
        solve_membership(B, g) is not None for g in A.generators()
    )


def is_saturated(M: ModuleMatrix) -> bool:
    return span_equal(M, saturate(M), "ring")


def dual_module(N: ModuleMatrix) -> ModuleMatrix:
    """
    N' = τ(V^⊥) ∩ 𝔈ⁿ for V = NQ.

    V^⊥ is a left Q-space; τ turns its rows into columns spanning a right
    space W. W ∩ 𝔈ⁿ is computed as the 𝔈-orthogonal of W^⊥ after clearing
    left denominators of a spanning set of W^⊥, which lands on the same
    saturated module as clearing τ-denominators column by column.
    """
    _require_module(N, "N")
    ctx = N.ctx
    if not ctx.supports_tau:
        raise UnsupportedRingError("dual_module", ctx.kind)
    if N.orientation != "right":
        raise ValidationError("N", "dual_module expects a right module")
    n = N.nrows
    K = left_kernel(N.to_q())
    tau_cols = [[ctx.tau(x) for x in row] for row in K.rows()]
    W = QMatrix.from_columns(ctx, tau_cols, n, "right")
    W_perp = left_kernel(W)
    cleared = []
    for row in W_perp.rows():
        c = ctx.embed(ctx.left_denominator(row))
        cleared.append([ctx.to_ring(c * x) for x in row])
    J = ModuleMatrix.from_rows(ctx, cleared, n, "left")
    logger.debug(f"dual_module: V^perp has {K.nrows} rows, W^perp has {J.nrows}")
    return perp(J)


###############################################################################
#                         COORDINATE OPERATIONS                               #
###############################################################################

def _split(A: AnyMatrix, subset: Iterable[int]):
    if A.orientation != "right":
        raise ValidationError("A", "coordinate minors are defined for right-oriented matrices")
    S = sorted(set(subset))
    for i in S:
        if not isinstance(i, int) or not 0 <= i < A.nrows:
            raise IndexOutOfRangeError(i, A.nrows)
    keep = [i for i in range(A.nrows) if i not in S]
    return S, keep


def delete_rows(A: AnyMatrix, subset: Iterable[int]) -> AnyMatrix:
    """Projection of the span away from the coordinates in ``subset``."""
    _, keep = _split(A, subset)
    return A.row_submatrix(keep)


def contract_rows(A: AnyMatrix, subset: Iterable[int]) -> AnyMatrix:
    """
    The span intersected with {x_S = 0}, then projected away from S.

    For a module the intersection N ∩ {x_S = 0} is A·ker(A[S]) with the
    kernel taken over 𝔈.
    """
    S, keep = _split(A, subset)
    if not S:
        return A
    out = matmul(A.row_submatrix(keep), right_kernel(A.row_submatrix(S)))
    return column_hermite(out) if isinstance(out, ModuleMatrix) else out


def scale_rows(A: AnyMatrix, exponents: Sequence[int]) -> AnyMatrix:
    """
    Left-multiplies row i by π^{e_i}.

    Stays over 𝔈 when every exponent is nonnegative; otherwise returns a
    Q-matrix.
    """
    if len(exponents) != A.nrows:
        raise ValidationError("exponents", f"expected {A.nrows} exponents, got {len(exponents)}")
    ctx = A.ctx
    if isinstance(A, ModuleMatrix) and all(e >= 0 for e in exponents):
        pi = ctx.uniformizer()
        rows = []
        for row, e in zip(A.entries, exponents):
            factor = ctx.ring_one()
            for _ in range(e):
                factor = factor * pi
            rows.append(tuple(factor * x for x in row))
        return ModuleMatrix(ctx, tuple(rows), A.ncols, A.orientation)
    Aq = A.to_q()
    rows = [tuple(ctx.pi_power(e) * x for x in row) for row, e in zip(Aq.entries, exponents)]
    return QMatrix(ctx, tuple(rows), A.ncols, A.orientation)


def parallel_extension(A: AnyMatrix, i: int, c) -> AnyMatrix:
    """Appends the row c·A_i (c ∈ 𝔈 for module matrices, c ∈ Q otherwise)."""
    if not 0 <= i < A.nrows:
        raise IndexOutOfRangeError(i, A.nrows)
    if not c:
        raise ValidationError("c", "the parallel factor must be nonzero")
    row = tuple(c * x for x in A.entries[i])
    return type(A)(A.ctx, A.entries + (row,), A.ncols, A.orientation)
