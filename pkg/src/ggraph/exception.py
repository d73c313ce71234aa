import types
from typing import Any, Optional, Sequence

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXHAUSTED = 3


def error_message_detail(
    error: Exception, error_detail: Optional[types.ModuleType] = None
) -> str:
    """
    Captures details about the error, including the file name, line number, and error message.
    """
    if error_detail is None:
        return f"{error}"
    exc_info = error_detail.exc_info()
    if exc_info is None or exc_info[2] is None:
        return f"{error}"

    _, _, exc_tb = exc_info
    file_name = exc_tb.tb_frame.f_code.co_filename
    error_message = (
        f"Error occurred in Python script name [{file_name}] at line number "
        f"[{exc_tb.tb_lineno}] with error message [{str(error)}]"
    )
    return error_message


class CustomException(Exception):
    """
    Wraps an unexpected error with the script name and line number it came from.
    Domain errors (GGraphError) pass through untouched so their exit code survives.
    """

    def __init__(
        self, error_message: Exception, error_detail: Optional[types.ModuleType] = None
    ):
        self.original_exception = error_message
        self.error_message = error_message_detail(
            error_message, error_detail=error_detail
        )
        super().__init__(self.error_message)

    @property
    def exit_code(self) -> int:
        return getattr(self.original_exception, "exit_code", EXIT_INPUT_ERROR)

    def __str__(self) -> str:
        return self.error_message


class GGraphError(Exception):
    """Base class for every domain error; `exit_code` maps onto the CLI contract."""

    exit_code = EXIT_INPUT_ERROR


class GroupSpecSyntaxError(GGraphError):
    def __init__(self, text: str, position: int, expected: Sequence[str]):
        self.text = text
        self.position = position
        self.expected = list(expected)
        pointer = " " * position + "^"
        super().__init__(
            f"syntax error at offset {position}: expected {' or '.join(self.expected)}\n"
            f"  {text}\n  {pointer}"
        )


class InvalidParameter(GGraphError):
    pass


class OrderLimitExceeded(GGraphError):
    def __init__(self, name: str, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"{name}: order {order} exceeds the configured cap {cap}")


class VertexCapExceeded(GGraphError):
    def __init__(self, what: str, vertices: int, cap: int):
        self.vertices = vertices
        self.cap = cap
        super().__init__(f"{what}: {vertices} vertices exceeds the cap {cap}")


class TooManyDivisors(GGraphError):
    pass


class GroundSetTooLarge(GGraphError):
    pass


class NotAPrimePower(GGraphError):
    pass


class PreconditionFailed(GGraphError):
    pass


class UnknownClaim(GGraphError):
    pass


class SchemaError(GGraphError):
    pass


class GraphIoError(GGraphError):
    pass


class InvariantViolation(GGraphError):
    """A computed object broke a structural law it must satisfy; never the user's input."""

    exit_code = EXIT_CLAIM_FAILED


class GroupAxiomViolation(InvariantViolation):
    pass


class BudgetExceeded(GGraphError):
    """A bounded search ran out of node expansions; `partial` holds the best found."""

    exit_code = EXIT_BUDGET_EXHAUSTED

    def __init__(self, what: str, budget: int, partial: Any = None):
        self.budget = budget
        self.partial = partial
        super().__init__(f"{what}: search budget of {budget} expansions exhausted")
