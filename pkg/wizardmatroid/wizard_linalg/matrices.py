# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Matrix containers over 𝔈 and Q.

A right module N ⊆ 𝔈ⁿ is an n×d matrix whose columns generate N from the
right; a left module J ⊆ 𝔈ⁿ is a k×n matrix whose rows generate J from the
left. The orientation tag keeps the two apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Literal, Sequence, Tuple

from wizardmatroid.utils.errors.errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    ValidationError,
)
from wizardmatroid.wizard_linalg.elimination import Domain, echelon, q_domain
from wizardmatroid.wizard_scalars.context import ScalarContext

__all__ = ["Orientation", "ModuleMatrix", "QMatrix", "Subspace"]

Orientation = Literal["right", "left"]
ORIENTATIONS = ("right", "left")


@dataclass(frozen=True, eq=False)
class _Matrix:
    ctx: ScalarContext
    entries: Tuple[Tuple[Any, ...], ...]
    ncols: int
    orientation: Orientation = "right"

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.orientation not in ORIENTATIONS:
            raise InvalidInputError("orientation", "'right' or 'left'", self.orientation)
        for i, row in enumerate(entries):
            if len(row) != self.ncols:
                raise ValidationError(f"row {i}", f"expected {self.ncols} entries, got {len(row)}")

    # ---- Constructors ----

    @classmethod
    def from_rows(cls, ctx: ScalarContext, rows: Iterable[Sequence], ncols: int = None, orientation: Orientation = "right"):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValidationError("rows", "cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        return cls(ctx, tuple(rows), ncols, orientation)

    @classmethod
    def from_columns(cls, ctx: ScalarContext, columns: Sequence[Sequence], nrows: int, orientation: Orientation = "right"):
        rows = [tuple(col[i] for col in columns) for i in range(nrows)]
        return cls(ctx, tuple(rows), len(columns), orientation)

    # ---- Shape ----

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def ambient_dim(self) -> int:
        """n for a module in 𝔈ⁿ: rows for right modules, columns for left ones."""
        return self.nrows if self.orientation == "right" else self.ncols

    @property
    def generator_count(self) -> int:
        return self.ncols if self.orientation == "right" else self.nrows

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def rows(self) -> List[List]:
        return [list(r) for r in self.entries]

    def columns(self) -> List[List]:
        return [[row[j] for row in self.entries] for j in range(self.ncols)]

    def generators(self) -> List[List]:
        """Generating vectors: columns of a right module, rows of a left one."""
        return self.columns() if self.orientation == "right" else self.rows()

    def _check_rows(self, indices: Iterable[int]) -> List[int]:
        out = []
        for i in indices:
            if not isinstance(i, int) or not 0 <= i < self.nrows:
                raise IndexOutOfRangeError(i, self.nrows)
            out.append(i)
        return out

    def row_submatrix(self, indices: Iterable[int]):
        """A[I] with the rows in the given order; orientation is kept."""
        idx = self._check_rows(indices)
        rows = tuple(self.entries[i] for i in idx)
        return type(self)(self.ctx, rows, self.ncols, self.orientation)

    def with_orientation(self, orientation: Orientation):
        return type(self)(self.ctx, self.entries, self.ncols, orientation)

    def __eq__(self, other):
        if not isinstance(other, _Matrix) or type(other) is not type(self):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.shape == other.shape
            and self.orientation == other.orientation
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(repr(x) for x in row) for row in self.entries)
        return f"{type(self).__name__}[{self.nrows}x{self.ncols}, {self.orientation}]({body})"


@dataclass(frozen=True, eq=False)
class ModuleMatrix(_Matrix):
    """
    Matrix over the ring 𝔈 of ``ctx``.

    ``orientation="right"``: the right column span presents N.
    ``orientation="left"``: the left row span presents J.
    """

    def to_q(self) -> "QMatrix":
        rows = tuple(tuple(self.ctx.embed(x) for x in row) for row in self.entries)
        return QMatrix(self.ctx, rows, self.ncols, self.orientation)


@dataclass(frozen=True, eq=False)
class QMatrix(_Matrix):
    """Matrix over the division ring Q of ``ctx``."""

    def to_q(self) -> "QMatrix":
        return self

    def to_module(self):
        """The same matrix over 𝔈, or None if some entry is not integral."""
        rows = []
        for row in self.entries:
            out = []
            for x in row:
                y = self.ctx.to_ring(x)
                if y is None:
                    return None
                out.append(y)
            rows.append(tuple(out))
        return ModuleMatrix(self.ctx, tuple(rows), self.ncols, self.orientation)



@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of Dⁿ over the division ring of ``domain``, kept as an
    echelon basis. Right spans use ``side="right"``, left spans ``"left"``.

    Two subspaces are equal iff each contains the other.
    """

    domain: Domain
    n: int
    basis: Tuple[Tuple[Any, ...], ...]
    side: Orientation = "right"

    @classmethod
    def spanned_by(cls, domain: Domain, vectors: Iterable[Sequence], n: int, side: Orientation = "right") -> "Subspace":
        if not domain.exact:
            raise InvalidInputError("domain", "a division ring", domain.name)
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise ValidationError("vectors", f"expected length {n}, got {len(v)}")
        e = echelon(domain, vectors, n, side, track=False)
        return cls(domain, n, tuple(tuple(v) for v in e.vectors[: e.rank]), side)

    @classmethod
    def of(cls, A: _Matrix) -> "Subspace":
        """NQ for a right matrix, QJ for a left one."""
        return cls.spanned_by(q_domain(A.ctx), A.to_q().generators(), A.ambient_dim, A.orientation)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _rank_with(self, vectors: Sequence[Sequence]) -> int:
        return echelon(self.domain, list(self.basis) + [list(v) for v in vectors], self.n, self.side, track=False).rank

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise ValidationError("v", f"expected length {self.n}, got {len(v)}")
        return self._rank_with([v]) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return other._rank_with(self.basis) == other.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check_compatible(other)
        return self.dim == other.dim and self <= other

    def __hash__(self) -> int:
        return hash((self.domain.name, self.n, self.dim))

    def _check_compatible(self, other: "Subspace") -> None:
        if self.domain.name != other.domain.name:
            raise InvalidInputError("other", self.domain.name, other.domain.name)
        if self.n != other.n:
            raise ValidationError("n", f"ambient dimensions differ ({self.n} vs {other.n})")
        if self.side != other.side:
            raise ValidationError("side", "cannot compare a right span with a left span")
