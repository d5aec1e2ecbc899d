# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_cli.cli import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
