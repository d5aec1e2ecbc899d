# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Lindström valuations and valuated-matroid checks.

Valuations use the min convention: μ(B) = v(det A[B]), μ = INF off the
bases, and the exchange inequality reads
μ(B1) + μ(B2) ≥ μ(B1 − i + j) + μ(B2 − j + i) for some j.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Matrix, Rational

from wizardmatroid.utils.errors.errors import (
    IndexOutOfRangeError,
    MatroidMismatchError,
    NonConstantDifferenceError,
    NotParallelError,
    ShiftVarianceError,
    SubsetSizeError,
    ValidationError,
)
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix
from wizardmatroid.wizard_linalg.modules import (
    column_hermite,
    dieudonne_val,
    independent_generators,
    left_kernel,
)
from wizardmatroid.wizard_matroids.matroid import Matroid, elements_of, mask_of
from wizardmatroid.wizard_scalars.valuation import INF, ValuationValue, is_finite

logger = logging.getLogger(__name__)

__all__ = [
    "ValuatedMatroid",
    "TrivialShift",
    "ValuatedCircuit",
    "lindstrom_valuation",
    "check_valuated_exchange",
    "find_valuated_exchange_violation",
    "valuated_circuits",
    "check_circuit_identity",
    "dual_valuation",
    "differ_by_trivial",
    "parallel_constant",
    "three_term_check",
    "three_term_sweep",
    "linear_functional",
    "normalized_valuation",
]


class ValuatedMatroid:
    """
    A matroid with an integer value on every basis; non-bases are INF.
    """

    __slots__ = ("matroid", "mu")

    def __init__(self, matroid: Matroid, mu: Mapping[int, int]):
        mu = {mask_of(b, matroid.n): v for b, v in mu.items()}
        if set(mu) != set(matroid.bases):
            raise ValidationError("mu", "values must be given exactly on the bases")
        for b, v in mu.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError("mu", f"value of {elements_of(b)} is not an integer", v)
        self.matroid = matroid
        self.mu: Dict[int, int] = mu

    @classmethod
    def from_values(cls, n: int, values: Mapping[Tuple[int, ...], ValuationValue]) -> "ValuatedMatroid":
        """Builds from a table subset -> value; INF entries are dropped."""
        finite = {mask_of(s, n): v for s, v in values.items() if is_finite(v)}
        return cls(Matroid(n, finite), finite)

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def rank(self) -> int:
        return self.matroid.rank

    def value(self, subset) -> ValuationValue:
        return self.mu.get(mask_of(subset, self.n), INF)

    def table(self) -> List[Tuple[Tuple[int, ...], int]]:
        """(basis, value) pairs in lexicographic basis order."""
        return [(b, self.mu[mask_of(b)]) for b in self.matroid.basis_list()]

    def values(self) -> Tuple[int, ...]:
        return tuple(v for _, v in self.table())

    def to_dict(self, index_base: int = 0, include_non_bases: bool = True) -> dict:
        mu = {}
        subsets = itertools.combinations(range(self.n), self.rank) if include_non_bases else self.matroid.basis_list()
        for s in subsets:
            v = self.value(s)
            mu[",".join(str(i + index_base) for i in s)] = v if is_finite(v) else "inf"
        return {"matroid": self.matroid.to_dict(index_base), "mu": mu}

    def __eq__(self, other):
        if not isinstance(other, ValuatedMatroid):
            return NotImplemented
        return self.matroid == other.matroid and self.mu == other.mu

    __hash__ = None

    def __repr__(self):
        return f"ValuatedMatroid(n={self.n}, r={self.rank}, mu={list(self.values())})"


@dataclass(frozen=True)
class TrivialShift:
    """α ∈ ℚⁿ acting by μ(B) ↦ μ(B) + Σ_{i∈B} α_i."""

    alpha: Tuple[Fraction, ...]

    def offset(self, subset) -> Fraction:
        return sum((self.alpha[i] for i in elements_of(mask_of(subset))), Fraction(0))

    def apply(self, vm: ValuatedMatroid) -> ValuatedMatroid:
        if len(self.alpha) != vm.n:
            raise ValidationError("alpha", f"expected {vm.n} entries, got {len(self.alpha)}")
        mu = {}
        for b, v in vm.mu.items():
            shifted = v + self.offset(b)
            if shifted.denominator != 1:
                raise ValidationError("alpha", "shifted values must stay integral", shifted)
            mu[b] = int(shifted)
        return ValuatedMatroid(vm.matroid, mu)

    def to_list(self) -> List[str]:
        return [str(a) for a in self.alpha]


@dataclass(frozen=True)
class ValuatedCircuit:
    """(v(c_1), ..., v(c_n)) for a minimal left dependency c, normalised to minimum 0."""

    support: Tuple[int, ...]
    gamma: Tuple[ValuationValue, ...]

    def to_list(self) -> List[Union[int, str]]:
        return [g if is_finite(g) else "inf" for g in self.gamma]


###############################################################################
#                          LINDSTRÖM VALUATION                                #
###############################################################################

def _independent_columns(A: Union[ModuleMatrix, QMatrix]):
    if isinstance(A, ModuleMatrix):
        return column_hermite(A.with_orientation("right"))
    return independent_generators(A.with_orientation("right"))


def lindstrom_valuation(A: Union[ModuleMatrix, QMatrix], threads: int = 1) -> ValuatedMatroid:
    """
    μ(B) = v(det A[B]) over the r-subsets B of rows.

    The columns are first replaced by an independent generating set (column
    Hermite form over 𝔈, echelon form over Q); over 𝔈 this does not change
    any value, over Q it shifts all values by the same constant.

    Parameters
    ----------
    A : ModuleMatrix or QMatrix
        n×d matrix; rows are the ground set.
    threads : int
        Worker threads for the per-basis determinants. The result does not
        depend on it.
    """
    H = _independent_columns(A)
    n, r = H.nrows, H.ncols
    subsets = list(itertools.combinations(range(n), r))

    def value(subset):
        return dieudonne_val(H.row_submatrix(subset))

    if threads > 1 and len(subsets) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(value, subsets))
    else:
        values = [value(s) for s in subsets]
    table = dict(zip(subsets, values))
    logger.debug(f"lindstrom_valuation: {sum(is_finite(v) for v in values)} bases among {len(subsets)} subsets")
    return ValuatedMatroid.from_values(n, table)


def normalized_valuation(vm: ValuatedMatroid) -> ValuatedMatroid:
    low = min(vm.mu.values())
    return ValuatedMatroid(vm.matroid, {b: v - low for b, v in vm.mu.items()})


###############################################################################
#                              EXCHANGE                                       #
###############################################################################

def find_valuated_exchange_violation(vm: ValuatedMatroid):
    """First (B1, B2, i) without an exchange partner, or None."""
    bases = vm.matroid.bases
    mu = vm.mu
    for b1 in sorted(bases):
        for b2 in sorted(bases):
            total = mu[b1] + mu[b2]
            for i in elements_of(b1 & ~b2):
                found = False
                for j in elements_of(b2 & ~b1):
                    c1 = (b1 & ~(1 << i)) | (1 << j)
                    c2 = (b2 & ~(1 << j)) | (1 << i)
                    if c1 in bases and c2 in bases and total >= mu[c1] + mu[c2]:
                        found = True
                        break
                if not found:
                    return elements_of(b1), elements_of(b2), i
    return None


def check_valuated_exchange(vm: ValuatedMatroid) -> bool:
    violation = find_valuated_exchange_violation(vm)
    if violation is not None:
        logger.debug(f"valuated exchange fails for B1={violation[0]}, B2={violation[1]}, i={violation[2]}")
    return violation is None


def three_term_check(vm: ValuatedMatroid, S: Iterable[int], quad: Sequence[int]) -> bool:
    """
    The minimum of ν(Sab)+ν(Scd), ν(Sac)+ν(Sbd), ν(Sad)+ν(Sbc) is attained at
    least twice.
    """
    S = list(S)
    quad = list(quad)
    n = vm.n
    for i in S + quad:
        if not isinstance(i, int) or not 0 <= i < n:
            raise IndexOutOfRangeError(i, n)
    if len(S) != vm.rank - 2:
        raise SubsetSizeError(f"|S| must be r - 2 = {vm.rank - 2}, got {len(S)}")
    if len(set(quad)) != 4:
        raise SubsetSizeError("the quadruple needs four distinct elements")
    if set(S) & set(quad) or len(set(S)) != len(S):
        raise SubsetSizeError("S must be a set disjoint from the quadruple")
    base = mask_of(S)
    a, b, c, d = (1 << x for x in quad)

    def nu(m):
        return vm.mu.get(base | m, INF)

    sums = sorted(
        [nu(a | b) + nu(c | d), nu(a | c) + nu(b | d), nu(a | d) + nu(b | c)]
    )
    return sums[0] == sums[1]


def three_term_sweep(vm: ValuatedMatroid) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Runs :func:`three_term_check` on every (S, quadruple); returns the first failure or None."""
    r = vm.rank
    if r < 2 or vm.n < r + 2:
        return None
    for S in itertools.combinations(range(vm.n), r - 2):
        rest = [i for i in range(vm.n) if i not in S]
        for quad in itertools.combinations(rest, 4):
            if not three_term_check(vm, S, quad):
                return S, quad
    return None


###############################################################################
#                               CIRCUITS                                      #
###############################################################################

def valuated_circuits(A: Union[ModuleMatrix, QMatrix]) -> List[ValuatedCircuit]:
    """
    One valuated circuit per circuit C of the row matroid: the valuations of
    the left dependency among the rows of C, normalised to minimum 0.
    """
    from wizardmatroid.wizard_matroids.matroid import matroid_from_matrix

    M = matroid_from_matrix(A)
    Aq = A.to_q()
    ctx = A.ctx
    out = []
    for C in M.circuits():
        K = left_kernel(Aq.row_submatrix(C))
        if K.nrows != 1:
            raise ValidationError("circuit", f"{C} has a {K.nrows}-dimensional dependency space")
        coeffs = K.entries[0]
        vals = [ctx.valuation(x) for x in coeffs]
        low = min(vals)
        gamma = [INF] * A.nrows
        for i, v in zip(C, vals):
            gamma[i] = v - low
        out.append(ValuatedCircuit(tuple(C), tuple(gamma)))
    return out


def check_circuit_identity(vm: ValuatedMatroid, circuits: Iterable[ValuatedCircuit]) -> Optional[tuple]:
    """
    μ(C−i ∪ T) + γ_j = μ(C−j ∪ T) + γ_i for every circuit, every i, j in it
    and every T completing C−i to a basis. Returns the first failure or None.
    """
    bases = vm.matroid.bases
    for circuit in circuits:
        C = mask_of(circuit.support)
        for i, j in itertools.combinations(circuit.support, 2):
            ci = C & ~(1 << i)
            cj = C & ~(1 << j)
            for b in bases:
                if b & C != ci:
                    continue
                rest = b & ~ci
                lhs = vm.mu[b] + circuit.gamma[j]
                rhs = vm.value(cj | rest) + circuit.gamma[i]
                if lhs != rhs:
                    return circuit.support, i, j, elements_of(rest)
    return None


###############################################################################
#                        DUALITY AND EQUIVALENCE                              #
###############################################################################

def dual_valuation(vm: ValuatedMatroid) -> ValuatedMatroid:
    """w*(B) = w(E ∖ B) on the dual matroid."""
    full = (1 << vm.n) - 1
    mu = {full & ~b: v for b, v in vm.mu.items()}
    return ValuatedMatroid(vm.matroid.dual(), mu)


def differ_by_trivial(vm1: ValuatedMatroid, vm2: ValuatedMatroid) -> Optional[TrivialShift]:
    """
    α with μ2(B) − μ1(B) = Σ_{i∈B} α_i on every basis, or None.

    Free parameters of the solution are set to zero.
    """
    if vm1.matroid != vm2.matroid:
        raise MatroidMismatchError("valuations live on different matroids")
    order = sorted(vm1.mu)
    n = vm1.n
    system = Matrix([[1 if b >> i & 1 else 0 for i in range(n)] for b in order])
    rhs = Matrix([vm2.mu[b] - vm1.mu[b] for b in order])
    try:
        solution, params = system.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    alpha = []
    for x in solution:
        q = Rational(x)
        alpha.append(Fraction(int(q.p), int(q.q)))
    return TrivialShift(tuple(alpha))


def parallel_constant(vm: ValuatedMatroid, i: int, j: int) -> int:
    """
    c with μ(S ∪ {i}) − μ(S ∪ {j}) = c for every S completing i (and j) to a basis.
    """
    n = vm.n
    for x in (i, j):
        if not isinstance(x, int) or not 0 <= x < n:
            raise IndexOutOfRangeError(x, n)
    M = vm.matroid
    if i == j or not M.is_independent([i]) or not M.is_independent([j]) or M.is_independent([i, j]):
        raise NotParallelError(i, j)
    diffs = set()
    bi, bj = 1 << i, 1 << j
    for b in M.bases:
        if b & bi:
            S = b & ~bi
            diffs.add(vm.mu[b] - vm.mu[S | bj])
    if len(diffs) != 1:
        raise NonConstantDifferenceError(i, j, sorted(diffs))
    return diffs.pop()


def linear_functional(vm: ValuatedMatroid, coefficients: Mapping) -> int:
    """
    Σ coeff(B)·μ(B) for a shift-invariant coefficient map.

    Every ground element must have signed incidence Σ_{B∋e} coeff(B) = 0,
    otherwise the value would depend on the representative of the class.
    """
    n = vm.n
    coeffs = {mask_of(B, n): c for B, c in coefficients.items()}
    for e in range(n):
        total = sum(c for B, c in coeffs.items() if B >> e & 1)
        if total:
            raise ShiftVarianceError(e, total)
    value = 0
    for B, c in coeffs.items():
        if not c:
            continue
        if B not in vm.mu:
            raise ValidationError("coefficients", f"{elements_of(B)} is not a basis")
        value += c * vm.mu[B]
    return value
