# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Matroids on a labelled ground set [n], bases stored as bitmasks.
"""

from __future__ import annotations

import itertools
import logging
from typing import FrozenSet, Iterable, List, Literal, Optional, Sequence, Tuple, Union

from wizardmatroid.utils.errors.errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    ValidationError,
)
from wizardmatroid.wizard_linalg.elimination import Domain, echelon, q_domain, ring_domain
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix
from wizardmatroid.wizard_linalg.modules import q_rank
from wizardmatroid.wizard_scalars.skew_polynomial import Side

logger = logging.getLogger(__name__)

__all__ = [
    "Matroid",
    "mask_of",
    "elements_of",
    "matroid_from_matrix",
    "matroid_from_vectors",
    "is_independent",
    "matroid_minors",
    "check_basis_exchange",
]

Subset = Union[int, Iterable[int]]


def mask_of(subset: Subset, n: Optional[int] = None) -> int:
    """Bitmask of a subset given as an iterable of 0-based indices (or already a mask)."""
    if isinstance(subset, int):
        return subset
    mask = 0
    for i in subset:
        if not isinstance(i, int) or i < 0 or (n is not None and i >= n):
            raise IndexOutOfRangeError(i, n if n is not None else -1)
        mask |= 1 << i
    return mask


def elements_of(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Matroid:
    """
    Matroid given by its bases.

    Parameters
    ----------
    n : int
        Ground set size; elements are 0..n-1.
    bases : iterable
        Bases as bitmasks or as iterables of indices. All bases must have
        the same size.
    """

    __slots__ = ("n", "rank", "bases", "_independent")

    def __init__(self, n: int, bases: Iterable[Subset]):
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError("n", "a nonnegative integer", n)
        masks = frozenset(mask_of(b, n) for b in bases)
        if not masks:
            raise ValidationError("bases", "a matroid has at least one basis")
        sizes = {_popcount(m) for m in masks}
        if len(sizes) != 1:
            raise ValidationError("bases", f"bases of different sizes {sorted(sizes)}")
        self.n = n
        self.rank = sizes.pop()
        self.bases: FrozenSet[int] = masks
        self._independent: Optional[FrozenSet[int]] = None

    # ---- Constructors ----

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        return cls(n, itertools.combinations(range(n), r))

    # ---- Queries ----

    def basis_list(self) -> List[Tuple[int, ...]]:
        """Bases as sorted index tuples, in lexicographic order."""
        return sorted(elements_of(b) for b in self.bases)

    def is_basis(self, subset: Subset) -> bool:
        return mask_of(subset, self.n) in self.bases

    def independent_sets(self) -> FrozenSet[int]:
        if self._independent is None:
            out = set()
            for b in self.bases:
                sub = b
                while True:
                    out.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & b
            self._independent = frozenset(out)
        return self._independent

    def is_independent(self, subset: Subset) -> bool:
        return mask_of(subset, self.n) in self.independent_sets()

    def rank_of(self, subset: Subset) -> int:
        mask = mask_of(subset, self.n)
        return max(_popcount(b & mask) for b in self.bases)

    def loops(self) -> Tuple[int, ...]:
        union = 0
        for b in self.bases:
            union |= b
        return tuple(i for i in range(self.n) if not union >> i & 1)

    def circuits(self) -> List[Tuple[int, ...]]:
        """Minimal dependent sets, sorted by size then lexicographically."""
        indep = self.independent_sets()
        found = []
        for size in range(1, self.rank + 2):
            for combo in itertools.combinations(range(self.n), size):
                mask = mask_of(combo)
                if mask in indep:
                    continue
                if all((mask & ~(1 << i)) in indep for i in combo):
                    found.append(combo)
        return found

    def is_uniform(self) -> bool:
        total = 1
        for k in range(self.rank):
            total = total * (self.n - k) // (k + 1)
        return len(self.bases) == total

    # ---- Minors ----

    def dual(self) -> "Matroid":
        full = (1 << self.n) - 1
        return Matroid(self.n, (full & ~b for b in self.bases))

    def _relabel(self, masks: Iterable[int], removed: int) -> "Matroid":
        keep = [i for i in range(self.n) if not removed >> i & 1]
        index = {old: new for new, old in enumerate(keep)}
        out = []
        for m in masks:
            out.append(sum(1 << index[i] for i in elements_of(m)))
        return Matroid(len(keep), out)

    def delete(self, subset: Subset) -> "Matroid":
        S = mask_of(subset, self.n)
        best = max(_popcount(b & ~S) for b in self.bases)
        return self._relabel({b & ~S for b in self.bases if _popcount(b & ~S) == best}, S)

    def contract(self, subset: Subset) -> "Matroid":
        S = mask_of(subset, self.n)
        best = max(_popcount(b & S) for b in self.bases)
        return self._relabel({b & ~S for b in self.bases if _popcount(b & S) == best}, S)

    # ---- Protocol ----

    def to_dict(self, index_base: int = 0) -> dict:
        return {
            "n": self.n,
            "r": self.rank,
            "bases": [[i + index_base for i in b] for b in self.basis_list()],
        }

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.rank}, bases={len(self.bases)})"


###############################################################################
#                          MATROIDS OF MATRICES                               #
###############################################################################

def matroid_from_vectors(domain: Domain, rows: Sequence[Sequence], length: int, side: Side = "left") -> Matroid:
    """
    Matroid of a list of vectors: I is independent iff the vectors in I are
    (with scalars on ``side``).

    Bases are enumerated depth first over increasing index tuples; a branch
    is abandoned as soon as its prefix is dependent.
    """
    n = len(rows)
    r = echelon(domain, rows, length, side, track=False).rank
    if r == 0:
        return Matroid(n, [0])
    bases: List[int] = []

    def independent(idx: Tuple[int, ...]) -> bool:
        return echelon(domain, [rows[i] for i in idx], length, side, track=False).rank == len(idx)

    def extend(prefix: Tuple[int, ...], start: int) -> None:
        if len(prefix) == r:
            bases.append(mask_of(prefix))
            return
        for i in range(start, n - (r - len(prefix)) + 1):
            if not any(rows[i]):
                continue
            candidate = prefix + (i,)
            if independent(candidate):
                extend(candidate, i + 1)

    extend((), 0)
    return Matroid(n, bases)


def matroid_from_matrix(A: Union[ModuleMatrix, QMatrix]) -> Matroid:
    """
    Matroid on the rows of ``A``: I is independent iff A[I] has rank |I|.
    """
    domain = ring_domain(A.ctx) if isinstance(A, ModuleMatrix) else q_domain(A.ctx)
    return matroid_from_vectors(domain, A.rows(), A.ncols)


def is_independent(M: Union[Matroid, ModuleMatrix, QMatrix], subset: Iterable[int]) -> bool:
    """Independence oracle for a matroid or directly for a matrix."""
    if isinstance(M, Matroid):
        return M.is_independent(subset)
    idx = list(subset)
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < M.nrows:
            raise IndexOutOfRangeError(i, M.nrows)
    if len(set(idx)) != len(idx):
        return False
    return q_rank(M.row_submatrix(idx)) == len(idx)


MinorOp = Literal["dual", "delete", "contract"]


def matroid_minors(M: Matroid, op: MinorOp, subset: Iterable[int] = ()) -> Matroid:
    """
    Dual, deletion or contraction; minors are relabelled to [n - |S|] in order.
    """
    if op == "dual":
        return M.dual()
    if op == "delete":
        return M.delete(subset)
    if op == "contract":
        return M.contract(subset)
    raise InvalidInputError("op", "'dual', 'delete' or 'contract'", op)


def find_exchange_violation(M: Matroid) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """First (B1, B2, i) for which no exchange partner exists, or None."""
    for b1 in sorted(M.bases):
        for b2 in sorted(M.bases):
            for i in elements_of(b1 & ~b2):
                base = b1 & ~(1 << i)
                if not any((base | (1 << j)) in M.bases for j in elements_of(b2 & ~b1)):
                    return elements_of(b1), elements_of(b2), i
    return None


def check_basis_exchange(M: Matroid) -> bool:
    violation = find_exchange_violation(M)
    if violation is not None:
        logger.debug(f"basis exchange fails for B1={violation[0]}, B2={violation[1]}, i={violation[2]}")
    return violation is None
