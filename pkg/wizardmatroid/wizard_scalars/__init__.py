# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_scalars.context import (
    HurwitzContext,
    IntegerContext,
    ScalarContext,
    SkewPolyContext,
    check_same_context,
    context_from_field,
    make_context,
)
from wizardmatroid.wizard_scalars.finite_field import FieldElement, FiniteField, default_modulus
from wizardmatroid.wizard_scalars.hurwitz import HurwitzQuaternion, RationalQuaternion, hurwitz_units
from wizardmatroid.wizard_scalars.skew_fraction import SkewFraction
from wizardmatroid.wizard_scalars.skew_polynomial import SkewPolynomial, skew_divmod, skew_gcld, skew_lclm
from wizardmatroid.wizard_scalars.valuation import INF, is_finite, vmin, vsum

__all__ = [
    "ScalarContext",
    "IntegerContext",
    "SkewPolyContext",
    "HurwitzContext",
    "make_context",
    "context_from_field",
    "check_same_context",
    "FiniteField",
    "FieldElement",
    "default_modulus",
    "HurwitzQuaternion",
    "RationalQuaternion",
    "hurwitz_units",
    "SkewPolynomial",
    "SkewFraction",
    "skew_divmod",
    "skew_lclm",
    "skew_gcld",
    "INF",
    "is_finite",
    "vmin",
    "vsum",
]
