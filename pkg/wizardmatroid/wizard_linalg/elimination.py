# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
One echelon routine for every domain the library eliminates over.

Vectors are reduced against each other position by position. With
``side="left"`` a step is ``u ← u − q·v`` (row operations, quotients from
left division); with ``side="right"`` it is ``u ← u − v·q`` (column
operations, right division). Over a division ring the quotient is exact
and one pass per position suffices; over a Euclidean ring the pass is
repeated with the smallest entry as pivot until a single nonzero entry is
left. Every step is unimodular, so the transforms of the vectors that end
up zero form a basis of the kernel module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, List, Sequence, Tuple

from wizardmatroid.wizard_scalars.context import ScalarContext
from wizardmatroid.wizard_scalars.finite_field import FiniteField
from wizardmatroid.wizard_scalars.skew_polynomial import Side

logger = logging.getLogger(__name__)

__all__ = ["Domain", "Echelon", "echelon", "ring_domain", "q_domain", "field_domain", "combine"]


@dataclass(frozen=True)
class Domain:
    """
    What the echelon routine needs to know about its scalars.

    ``divide(a, b, side)`` returns (q, r) with a = q·b + r (left) or
    a = b·q + r (right); ``size`` orders candidate pivots.
    """

    name: str
    zero: Any
    one: Any
    divide: Callable[[Any, Any, Side], Tuple[Any, Any]]
    size: Callable[[Any], int]
    exact: bool


def ring_domain(ctx: ScalarContext) -> Domain:
    return Domain(
        name=f"{ctx.kind} ring",
        zero=ctx.ring_zero(),
        one=ctx.ring_one(),
        divide=ctx.ring_divmod,
        size=ctx.euclidean_size,
        exact=False,
    )


def q_domain(ctx: ScalarContext) -> Domain:
    zero = ctx.zero()

    def divide(a, b, side: Side):
        inv = ctx.inverse(b)
        return (a * inv if side == "left" else inv * a), zero

    return Domain(
        name=f"{ctx.kind} fractions",
        zero=zero,
        one=ctx.one(),
        divide=divide,
        size=lambda a: 0,
        exact=True,
    )


def field_domain(field_: FiniteField) -> Domain:
    zero = field_.zero()

    def divide(a, b, side: Side):
        return a * b.inverse(), zero

    return Domain(
        name=f"GF({field_.p}^{field_.k})",
        zero=zero,
        one=field_.one(),
        divide=divide,
        size=lambda a: 0,
        exact=True,
    )


def combine(u: Sequence, v: Sequence, q, side: Side) -> List:
    """u − q·v (side left) or u − v·q (side right), entrywise."""
    if side == "left":
        return [a - q * b if b else a for a, b in zip(u, v)]
    return [a - b * q if b else a for a, b in zip(u, v)]


def scale(v: Sequence, u, side: Side) -> List:
    if side == "left":
        return [u * a for a in v]
    return [a * u for a in v]


@dataclass
class Echelon:
    """
    Result of :func:`echelon`.

    ``vectors[:rank]`` are the pivot vectors in order of increasing pivot
    position (``pivots``), ``vectors[rank:]`` are zero. ``transform[i]``
    expresses ``vectors[i]`` through the inputs: Σ_j transform[i][j]·input_j
    for side left, Σ_j input_j·transform[i][j] for side right.
    """

    vectors: List[List]
    transform: List[List]
    pivots: List[int]
    side: Side
    domain: Domain
    passes: int = field(default=0)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel(self) -> List[List]:
        """Transforms of the vectors reduced to zero."""
        return self.transform[self.rank:]

    def pivot_entries(self) -> List:
        return [self.vectors[i][c] for i, c in enumerate(self.pivots)]


def echelon(
    domain: Domain,
    vectors: Sequence[Sequence],
    length: int,
    side: Side = "left",
    track: bool = True,
) -> Echelon:
    """
    Reduces ``vectors`` (each of ``length`` entries) to echelon form.

    Parameters
    ----------
    domain : Domain
        Scalars and division.
    vectors : sequence of sequences
        Rows for side left, columns for side right.
    length : int
        Entries per vector; needed when ``vectors`` is empty or all vectors are empty.
    side : {"left", "right"}
        Side on which quotients multiply.
    track : bool
        Keep the transform matrix (needed for kernels and membership).
    """
    vecs = [list(v) for v in vectors]
    m = len(vecs)
    zero, one = domain.zero, domain.one
    trans = [[one if i == j else zero for j in range(m)] for i in range(m)] if track else [[] for _ in range(m)]
    active = list(range(m))
    order: List[int] = []
    pivots: List[int] = []
    passes = 0

    for c in range(length):
        if not active:
            break
        while True:
            live = [i for i in active if vecs[i][c]]
            if not live:
                break
            p = min(live, key=lambda i: (domain.size(vecs[i][c]), i))
            settled = True
            for i in live:
                if i == p:
                    continue
                q, r = domain.divide(vecs[i][c], vecs[p][c], side)
                vecs[i] = combine(vecs[i], vecs[p], q, side)
                if track:
                    trans[i] = combine(trans[i], trans[p], q, side)
                if r:
                    settled = False
            passes += 1
            if settled:
                active.remove(p)
                order.append(p)
                pivots.append(c)
                break

    if not domain.exact and passes > length:
        logger.debug(f"{domain.name}: {passes} Euclidean passes over {length} positions")
    final = order + active
    return Echelon(
        vectors=[vecs[i] for i in final],
        transform=[trans[i] for i in final],
        pivots=pivots,
        side=side,
        domain=domain,
        passes=passes,
    )
