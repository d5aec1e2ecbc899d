# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_matroids.matroid import (
    Matroid,
    check_basis_exchange,
    elements_of,
    find_exchange_violation,
    is_independent,
    mask_of,
    matroid_from_matrix,
    matroid_from_vectors,
    matroid_minors,
)
from wizardmatroid.wizard_matroids.valuated import (
    TrivialShift,
    ValuatedCircuit,
    ValuatedMatroid,
    check_circuit_identity,
    check_valuated_exchange,
    differ_by_trivial,
    dual_valuation,
    find_valuated_exchange_violation,
    lindstrom_valuation,
    linear_functional,
    normalized_valuation,
    parallel_constant,
    three_term_check,
    three_term_sweep,
    valuated_circuits,
)
from wizardmatroid.wizard_matroids.flock import (
    FlockReport,
    FlockSlice,
    check_flock_axioms,
    check_flock_valuation_consistency,
    flock_matroid,
    flock_slice,
    frobenius_twist,
)
from wizardmatroid.wizard_matroids.suite import CheckResult, ModuleReport, check_module

__all__ = [
    "Matroid",
    "mask_of",
    "elements_of",
    "matroid_from_matrix",
    "matroid_from_vectors",
    "is_independent",
    "matroid_minors",
    "check_basis_exchange",
    "find_exchange_violation",
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
    "FlockSlice",
    "FlockReport",
    "flock_slice",
    "flock_matroid",
    "frobenius_twist",
    "check_flock_axioms",
    "check_flock_valuation_consistency",
    "CheckResult",
    "ModuleReport",
    "check_module",
]
