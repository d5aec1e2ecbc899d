# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

from __future__ import annotations
from typing import Any, Iterable


class WizardMatroidError(Exception):
    """
    Base class for all errors in the WizardMatroid library.
    """

    exit_code = 1

    def __init__(self, message: str, param_name: str = None, value: Any = None):
        self.param_name = param_name
        self.value = value
        super().__init__(message)

    def __str__(self):
        base_message = super().__str__()
        if self.param_name and self.value is not None:
            return f"{base_message} (Parameter: {self.param_name}, Value: {self.value})"
        return base_message


class InvalidInputError(WizardMatroidError):
    """
    Raised when an input parameter is invalid.
    """

    exit_code = 2

    def __init__(self, param_name: str, expected: str, received: Any):
        message = (
            f"Invalid input for '{param_name}': expected {expected}, got {type(received).__name__} "
            f"(value={received})."
        )
        super().__init__(message, param_name, received)


class ValidationError(WizardMatroidError):
    """
    Raised for generic validation errors.
    """

    exit_code = 2

    def __init__(self, param_name: str, issue: str, value: Any = None):
        message = f"Validation error for '{param_name}': {issue}."
        super().__init__(message, param_name, value)


class SchemaError(WizardMatroidError):
    """
    Raised when a matrix or example document does not follow its schema.
    """

    exit_code = 2

    def __init__(self, path: str, issue: str):
        self.path = path
        super().__init__(f"Schema violation at '{path}': {issue}.")


class DocumentReadError(WizardMatroidError):
    """
    Raised when a document cannot be read or decoded as JSON.
    """

    exit_code = 2

    def __init__(self, message="Invalid JSON document."):
        super().__init__(message)


class InvariantViolationError(WizardMatroidError):
    """
    Raised when a value breaks a structural invariant (parity, irreducibility, primality).
    """

    exit_code = 3

    def __init__(self, what: str, detail: str):
        self.what = what
        super().__init__(f"Invariant violated for {what}: {detail}.")


class UnsupportedRingError(WizardMatroidError):
    """
    Raised when an operation is not available for the ring of a context.
    """

    exit_code = 4
    code = "UNSUPPORTED_RING"

    def __init__(self, operation: str, ring_kind: str):
        self.operation = operation
        self.ring_kind = ring_kind
        super().__init__(
            f"'{operation}' is not supported over the {ring_kind} ring.",
            "ring",
            ring_kind,
        )


class ContextMismatchError(WizardMatroidError):
    """
    Raised when two operands live over different scalar contexts.
    """

    exit_code = 3

    def __init__(self, left: Any, right: Any):
        super().__init__(f"Operands belong to different contexts: {left} vs {right}.")


class DivisionByZeroError(WizardMatroidError):
    """
    Raised when inverting or dividing by zero.
    """

    exit_code = 3

    def __init__(self, what: str = "element"):
        super().__init__(f"Division by zero ({what}).")


class IndexOutOfRangeError(WizardMatroidError):
    """
    Raised when a ground-set index falls outside [n].
    """

    exit_code = 2

    def __init__(self, index: int, n: int):
        super().__init__(f"Index {index} is outside the ground set of size {n}.", "index", index)


class SubsetSizeError(WizardMatroidError):
    """
    Raised when a subset argument has the wrong size or overlaps another one.
    """

    exit_code = 2

    def __init__(self, issue: str):
        super().__init__(f"Subset size violation: {issue}.")


class MatroidMismatchError(WizardMatroidError):
    """
    Raised when two valuations are compared over different matroids.
    """

    exit_code = 3

    def __init__(self, issue: str):
        super().__init__(f"Matroid mismatch: {issue}.")


class NotParallelError(WizardMatroidError):
    """
    Raised when a parallel constant is requested for non-parallel elements.
    """

    exit_code = 3

    def __init__(self, i: int, j: int):
        super().__init__(f"Elements {i} and {j} are not parallel.")


class NonConstantDifferenceError(WizardMatroidError):
    """
    Raised when ν(S ∪ {i}) − ν(S ∪ {j}) depends on S.
    """

    exit_code = 3

    def __init__(self, i: int, j: int, values: Iterable[int]):
        self.values = sorted(set(values))
        super().__init__(
            f"Difference between elements {i} and {j} is not constant: {self.values}."
        )


class ShiftVarianceError(WizardMatroidError):
    """
    Raised when a linear functional is not invariant under trivial shifts.
    """

    exit_code = 3

    def __init__(self, element: int, total: Any):
        super().__init__(
            f"Coefficients are not shift-invariant: element {element} has signed incidence {total}.",
            "coefficients",
            total,
        )


class NormalizationLimitError(WizardMatroidError):
    """
    Raised when the flock normalisation loop exceeds its iteration cap.
    """

    exit_code = 3

    def __init__(self, alpha: Any, limit: int):
        super().__init__(
            f"Flock normalisation did not settle after {limit} steps.", "alpha", alpha
        )


class UnknownExampleError(WizardMatroidError):
    """
    Raised when an example id is not registered.
    """

    exit_code = 2

    def __init__(self, example_id: str, known: Iterable[str]):
        self.known = list(known)
        super().__init__(
            f"Unknown example '{example_id}'. Registered examples are: {', '.join(self.known)}."
        )


class InternalError(WizardMatroidError):
    """
    Raised when a facade operation fails with a non-library exception.
    """

    code = "INTERNAL"

    def __init__(self, original_exception: Exception, operation: str = None):
        where = f" in '{operation}'" if operation else ""
        message = f"Internal error{where}: {type(original_exception).__name__}: {original_exception}"
        super().__init__(message)
        self.operation = operation
        self.original_exception = original_exception
