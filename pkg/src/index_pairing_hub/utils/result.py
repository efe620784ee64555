"""
Result type for robust error handling without exceptions.

Service entry points return a Result so that the CLI and the API can map
failures onto exit codes and HTTP statuses from the error code alone.
"""

from __future__ import annotations

from typing import Any, Callable, Dict, Generic, Optional, TypeVar

from index_pairing_hub.domain.errors import IndexHubError

T = TypeVar('T')  # Success value type
U = TypeVar('U')  # Mapped value type


class Result(Generic[T]):
    """
    A result type that represents either success or failure of an operation.
    """

    def is_success(self) -> bool:
        raise NotImplementedError("Subclasses must implement is_success")

    def is_error(self) -> bool:
        return not self.is_success()

    def unwrap(self) -> T:
        """
        Get the success value, raising an exception if the result is an error.

        Raises:
            ValueError: If the result is an error
        """
        raise NotImplementedError("Subclasses must implement unwrap")

    def unwrap_or(self, default: T) -> T:
        raise NotImplementedError("Subclasses must implement unwrap_or")

    def map(self, fn: Callable[[T], U]) -> Result[U]:
        """
        Apply a function to the success value, preserving the result type.
        """
        raise NotImplementedError("Subclasses must implement map")

    @staticmethod
    def success(value: T) -> Result[T]:
        return Success(value)

    @staticmethod
    def error(error: str, code: str = "error") -> Result[T]:
        return Error(error, code=code)

    @staticmethod
    def from_exception(e: Exception, context: str = "") -> Result[T]:
        """
        Create an error result from an exception.

        Domain errors keep their code and context; anything else is
        reported as an ``internal`` failure.
        """
        message = f"{context}: {e}" if context else str(e)
        if isinstance(e, IndexHubError):
            return Error(message, code=e.code, details=dict(e.context))
        return Error(message, code="internal", details={"type": type(e).__name__})

    @staticmethod
    def try_operation(operation: Callable[[], T], error_context: str = "") -> Result[T]:
        """
        Try to perform an operation that might raise an exception.
        """
        try:
            return Success(operation())
        except Exception as e:
            return Result.from_exception(e, error_context)


class Success(Result[T]):
    """A successful result containing a value."""

    def __init__(self, value: T):
        self.value = value

    def is_success(self) -> bool:
        return True

    def unwrap(self) -> T:
        return self.value

    def unwrap_or(self, default: T) -> T:
        return self.value

    def map(self, fn: Callable[[T], U]) -> Result[U]:
        return Success(fn(self.value))

    def __str__(self) -> str:
        return f"Success: {self.value}"

    def __repr__(self) -> str:
        return f"Success({repr(self.value)})"


class Error(Result[T]):
    """
    An error result carrying a message, a machine-readable code and
    optional details.
    """

    def __init__(
        self,
        error: str,
        code: str = "error",
        details: Optional[Dict[str, Any]] = None,
    ):
        self.error = error
        self.code = code
        self.details = details or {}

    def is_success(self) -> bool:
        return False

    def unwrap(self) -> T:
        raise ValueError(f"Cannot unwrap Error result: {self.error}")

    def unwrap_or(self, default: T) -> T:
        return default

    def map(self, fn: Callable[[T], U]) -> Result[U]:
        return Error(self.error, code=self.code, details=self.details)

    def __str__(self) -> str:
        return f"Error[{self.code}]: {self.error}"

    def __repr__(self) -> str:
        return f"Error({repr(self.error)}, code={repr(self.code)})"
