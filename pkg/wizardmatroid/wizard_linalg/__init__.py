# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_linalg.elimination import Domain, Echelon, echelon, field_domain, q_domain, ring_domain
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix, Subspace
from wizardmatroid.wizard_linalg.modules import (
    column_hermite,
    contract_rows,
    delete_rows,
    dieudonne_val,
    dual_module,
    independent_generators,
    is_saturated,
    left_kernel,
    matmul,
    parallel_extension,
    perp,
    q_rank,
    right_kernel,
    row_hermite,
    saturate,
    scale_rows,
    solve_membership,
    span_equal,
)

__all__ = [
    "Domain",
    "Echelon",
    "echelon",
    "ring_domain",
    "q_domain",
    "field_domain",
    "ModuleMatrix",
    "QMatrix",
    "Subspace",
    "q_rank",
    "left_kernel",
    "right_kernel",
    "independent_generators",
    "matmul",
    "dieudonne_val",
    "column_hermite",
    "row_hermite",
    "perp",
    "saturate",
    "is_saturated",
    "solve_membership",
    "span_equal",
    "dual_module",
    "delete_rows",
    "contract_rows",
    "scale_rows",
    "parallel_extension",
]
