"""Exception catalog shared across the engine, CLI and service.

Every error that can surface at an external interface carries a stable
machine-readable ``code`` so the CLI and the HTTP facade map exceptions to
exit codes / API error payloads without string matching.
"""


class QegsError(Exception):
    """Base class for all engine errors."""

    code = "INTERNAL"


class ValidationError(QegsError):
    """Bad input from the caller (CLI exit code 2, HTTP 400)."""

    code = "PARAM_ERROR"


class ParseError(ValidationError):
    """Malformed game file syntax."""

    code = "PARSE_ERROR"


class ShapeError(ParseError):
    """Ragged payoff grid."""


class ParamError(ValidationError):
    """Inconsistent parameter usage (two names, missing name, bad domain)."""

    code = "PARAM_ERROR"


class NotTwoByTwoError(ValidationError):
    """Operation requires a 2x2 game."""

    code = "SIZE_NOT_2X2"

    def __init__(self, msg="input matrix must be 2x2"):
        super().__init__(msg)


class ParametricInputError(ValidationError):
    """Operation requires a constant (numerical) game."""

    code = "INPUT_NOT_NUMERIC"

    def __init__(self, msg="input matrix must be numerical"):
        super().__init__(msg)


class ParametricBaseError(ValidationError):
    """Four-strategy extensions need a constant base game: the single
    parameter slot is reserved for the class parameter."""

    code = "INPUT_NOT_NUMERIC"


class ParamOutOfRangeError(ParamError):
    """Class parameter outside [0, 1]."""


class NoParameterError(ValidationError):
    """Sweep requires a parametric game."""

    code = "PARAM_ERROR"


class DegreeTooHighError(ValidationError):
    """Exact sweep supports difference polynomials of degree <= 2."""

    code = "PARAM_ERROR"


class EmptyDomainError(ValidationError):
    """Sweep domain [lo, hi] with lo >= hi."""

    code = "PARAM_ERROR"


class IndexOutOfRangeError(ValidationError):
    """Strategy profile indices outside the matrix."""

    code = "PARAM_ERROR"


class NoReportError(QegsError):
    """Report generation refused: the input matrix needs to be either
    numerical or 2x2, otherwise no report is created."""

    code = "INPUT_NOT_NUMERIC"

    def __init__(self, msg="input matrix needs to be either numerical or 2x2; no report created"):
        super().__init__(msg)
