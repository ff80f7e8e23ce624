from typing import Any, Optional


class HeckeError(Exception):
    """
    Base error for the package. Carries a process exit code and a detail
    message, the way an HTTP error carries a status code and detail.
    """

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None, witness: Any = None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness
        if exit_code is not None:
            self.exit_code = exit_code


class InvalidParameterError(HeckeError):
    exit_code = 2


class ToleranceError(HeckeError):
    """Raised when a requested absolute tolerance could not be certified."""

    exit_code = 3

    def __init__(self, detail: str, achieved_bound: float = float("inf"), **kwargs):
        super().__init__(f"{detail} (achieved bound {achieved_bound:.3e})", **kwargs)
        self.achieved_bound = achieved_bound


class CharacterError(HeckeError):
    pass


class CoefficientSanityError(HeckeError):
    pass


class FunctionalEquationError(HeckeError):
    exit_code = 3


class IndeterminateRootNumberError(HeckeError):
    exit_code = 3


class RouteMismatchError(HeckeError):
    exit_code = 3


class SchemaError(HeckeError):
    exit_code = 2
