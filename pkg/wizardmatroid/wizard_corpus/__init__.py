# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from wizardmatroid.wizard_corpus.corpus import (
    Example,
    ExampleReport,
    FactResult,
    list_examples,
    load_example,
    run_example,
)

__all__ = ["Example", "ExampleReport", "FactResult", "list_examples", "load_example", "run_example"]
