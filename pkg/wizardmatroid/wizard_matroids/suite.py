# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
The invariant suite run by ``wizardmatroid check``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, List

from wizardmatroid.utils.errors.errors import InvalidInputError, ValidationError
from wizardmatroid.utils.settings import DEFAULT_RADIUS, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED
from wizardmatroid.wizard_groups.groups import group_model, sample_points, verify_annihilator
from wizardmatroid.wizard_linalg.elimination import q_domain
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix
from wizardmatroid.wizard_linalg.modules import perp, q_rank, saturate, solve_membership, span_equal
from wizardmatroid.wizard_matroids.flock import check_flock_axioms, check_flock_valuation_consistency
from wizardmatroid.wizard_matroids.matroid import matroid_from_matrix, matroid_from_vectors
from wizardmatroid.wizard_matroids.valuated import (
    check_circuit_identity,
    find_valuated_exchange_violation,
    lindstrom_valuation,
    three_term_sweep,
    valuated_circuits,
)

logger = logging.getLogger(__name__)

__all__ = ["CheckResult", "ModuleReport", "check_module"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class ModuleReport:
    ring: dict
    n: int
    rank: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: Any = None) -> None:
        logger.debug(f"check {name}: passed={passed}")
        self.checks.append(CheckResult(name, bool(passed), detail))

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n": self.n,
            "rank": self.rank,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


def _listed(failure) -> Any:
    if failure is None:
        return None
    return [list(x) if isinstance(x, tuple) else x for x in failure]


def check_module(N: ModuleMatrix, radius: int = DEFAULT_RADIUS, threads: int = 1) -> ModuleReport:
    """
    Runs every invariant that applies to the ring of ``N``.

    Saturation and orthogonality round trips, matroid duality against the
    orthogonal complement, the valuated exchange axiom, the three-term
    property, the valuated-circuit identity; flock axioms and flock/valuation
    consistency within ``radius`` when the ring has a residue field; the
    annihilator check on sampled points when the ring has a point model.
    """
    if not isinstance(N, ModuleMatrix):
        raise InvalidInputError("N", "ModuleMatrix", N)
    if N.orientation != "right":
        raise ValidationError("N", "check_module expects a right module")
    ctx = N.ctx
    S = saturate(N)
    J = perp(N)
    report = ModuleReport(ctx.descriptor(), N.nrows, S.ncols)

    # ---- Modules ----
    report.add("saturation_contains_module", all(solve_membership(S, g) is not None for g in N.generators()))
    report.add("saturation_same_rank", q_rank(S) == q_rank(N))
    report.add("perp_rank", J.nrows == N.nrows - S.ncols, {"perp_rank": J.nrows})
    report.add("perp_round_trip", span_equal(perp(perp(J)), J, "ring"))

    # ---- Matroids ----
    M = matroid_from_matrix(N)
    M_perp = matroid_from_vectors(q_domain(ctx), J.to_q().columns(), J.nrows, side="right")
    report.add("matroid_double_dual", M.dual().dual() == M)
    report.add("perp_matroid_is_dual", M_perp == M.dual())

    # ---- Valuations ----
    vm = lindstrom_valuation(N, threads=threads)
    violation = find_valuated_exchange_violation(vm)
    report.add("valuated_exchange", violation is None, _listed(violation))
    failure = three_term_sweep(vm)
    report.add("three_term", failure is None, _listed(failure))
    failure = check_circuit_identity(vm, valuated_circuits(N))
    report.add("circuit_identity", failure is None, _listed(failure))

    # ---- Flocks ----
    if ctx.supports_flock:
        axioms = check_flock_axioms(N, radius, threads)
        report.add("flock_axioms", axioms.ok, axioms.to_dict())
        consistency = check_flock_valuation_consistency(N, radius, threads)
        report.add("flock_valuation_consistency", consistency.ok, consistency.to_dict())

    # ---- Points ----
    if ctx.supports_evaluation:
        model = group_model(ctx)
        points = sample_points(N, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, model)
        report.add("annihilator", verify_annihilator(J, points, model), {"points": len(points)})

    logger.info(f"check_module: {sum(c.passed for c in report.checks)}/{len(report.checks)} checks pass")
    return report
