# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_groups.groups import (
    AdditiveModel,
    GroupPoint,
    MultiplicativeModel,
    SplitMix64,
    eval_endo,
    group_model,
    parametrize,
    sample_points,
    verify_annihilator,
)

__all__ = [
    "SplitMix64",
    "GroupPoint",
    "AdditiveModel",
    "MultiplicativeModel",
    "group_model",
    "eval_endo",
    "parametrize",
    "sample_points",
    "verify_annihilator",
]
