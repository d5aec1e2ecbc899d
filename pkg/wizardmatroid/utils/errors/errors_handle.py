# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

import logging
import traceback
from functools import wraps

from wizardmatroid.utils.errors.errors import InternalError, WizardMatroidError

logger = logging.getLogger(__name__)


def handle_errors(func):
    """
    Facade decorator: library errors pass through, anything else is logged
    with its traceback and raised again as ``InternalError``.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except WizardMatroidError:
            raise
        except Exception as e:
            trace = "".join(traceback.format_exception(type(e), e, e.__traceback__))
            logger.error(f"Unexpected error in {func.__name__}:\n{trace}")
            raise InternalError(e, operation=func.__name__) from e

    return wrapper
