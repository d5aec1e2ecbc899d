# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations

import os
from pathlib import Path

from wizardmatroid.utils.errors.errors import ValidationError

PACKAGE_DIR = Path(__file__).resolve().parent.parent
DEFAULT_DATA_DIR = PACKAGE_DIR / "wizard_corpus" / "data"
SCHEMA_DIR = PACKAGE_DIR / "wizard_corpus" / "schema"

# Group sampling
DEFAULT_EXTENSION_DEGREE = 5
DEFAULT_MULTIPLICATIVE_PRIME = 10007
DEFAULT_SEED = 42
DEFAULT_SAMPLE_COUNT = 100

# Flock sweeps
DEFAULT_RADIUS = 2

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def data_dir() -> Path:
    """Corpus directory, overridable through ``WIZARDMATROID_DATA_DIR``."""
    override = os.getenv("WIZARDMATROID_DATA_DIR")
    if override:
        return Path(override).expanduser()
    return DEFAULT_DATA_DIR


def default_threads() -> int:
    raw = os.getenv("WIZARDMATROID_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise ValidationError("WIZARDMATROID_THREADS", "must be a positive integer", raw)
    if threads < 1:
        raise ValidationError("WIZARDMATROID_THREADS", "must be a positive integer", raw)
    return threads


def default_log_level() -> str:
    level = os.getenv("WIZARDMATROID_LOG_LEVEL", "WARNING").upper()
    return level if level in LOG_LEVELS else "WARNING"


def normalization_cap(n: int, rank: int, alpha_span: int, valuation_spread: int) -> int:
    # Safety net for the flock normalisation loop.
    return n * max(rank, 1) * (1 + alpha_span) + valuation_spread + 1
