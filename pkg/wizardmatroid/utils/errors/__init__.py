from .errors import (
    WizardMatroidError,
    InvalidInputError,
    ValidationError,
    SchemaError,
    DocumentReadError,
    InvariantViolationError,
    UnsupportedRingError,
    ContextMismatchError,
    DivisionByZeroError,
    IndexOutOfRangeError,
    SubsetSizeError,
    MatroidMismatchError,
    NotParallelError,
    NonConstantDifferenceError,
    ShiftVarianceError,
    NormalizationLimitError,
    UnknownExampleError,
    InternalError,
)
from wizardmatroid.utils.errors.errors_handle import handle_errors

__all__ = [
    "WizardMatroidError",
    "InvalidInputError",
    "ValidationError",
    "SchemaError",
    "DocumentReadError",
    "InvariantViolationError",
    "UnsupportedRingError",
    "ContextMismatchError",
    "DivisionByZeroError",
    "IndexOutOfRangeError",
    "SubsetSizeError",
    "MatroidMismatchError",
    "NotParallelError",
    "NonConstantDifferenceError",
    "ShiftVarianceError",
    "NormalizationLimitError",
    "UnknownExampleError",
    "InternalError",
    "handle_errors",
]
