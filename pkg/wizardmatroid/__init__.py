# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from .wizard_matroid import WizardMatroid

_wizard = WizardMatroid()

read_matrix         = _wizard.read_matrix
write_matrix        = _wizard.write_matrix
matroid             = _wizard.matroid
lindstrom_valuation = _wizard.lindstrom_valuation
dual_module         = _wizard.dual_module
saturate            = _wizard.saturate
perp                = _wizard.perp
flock_slice         = _wizard.flock_slice
flock_matroid       = _wizard.flock_matroid
check_flock         = _wizard.check_flock
sample_points       = _wizard.sample_points
sample_verify       = _wizard.sample_verify
list_examples       = _wizard.list_examples
run_example         = _wizard.run_example
check_module        = _wizard.check_module


__all__ = [
    "WizardMatroid",
    "read_matrix",
    "write_matrix",
    "matroid",
    "lindstrom_valuation",
    "dual_module",
    "saturate",
    "perp",
    "flock_slice",
    "flock_matroid",
    "check_flock",
    "sample_points",
    "sample_verify",
    "list_examples",
    "run_example",
    "check_module",
]
