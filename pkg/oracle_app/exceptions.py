class OracleError(ValueError):
    """Base class for every input or domain error raised by oracle_app."""


class WidthError(OracleError):
    """Bit-width, particle index or basis index out of range."""


class TableFormatError(OracleError):
    """Malformed truth-table text, vector file or coupling-set JSON."""


class PromiseError(OracleError):
    """A function does not satisfy the promise an algorithm relies on."""


class ArithmeticDomainError(OracleError):
    """Invalid modular-arithmetic parameters (a, N, register width)."""


class ResourceLimitError(OracleError):
    """Refusal to allocate a dense 2^n object beyond the configured limit."""


class ReportFormatError(OracleError):
    """Unknown report output format."""
