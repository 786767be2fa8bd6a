class CasimirError(Exception):
    """
    Base class for every error raised by casimir_lifshitz.
    """


class RegimeError(CasimirError, ValueError):
    """
    Inputs lie outside the regime the engine has been validated for.
    """


class FrequencyError(CasimirError, ValueError): ...


class TableFormatError(CasimirError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}"
        if line is not None:
            where += f" line {line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class TableValidationError(CasimirError, ValueError): ...


class AxisMismatchError(CasimirError, ValueError): ...


class OutOfRangeError(CasimirError, ValueError):
    def __init__(self, zeta: float, lower: float, upper: float):
        self.zeta = zeta
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"zeta {zeta:.6e} rad/s is outside the table range [{lower:.6e}, {upper:.6e}] rad/s"
        )


class TruncationError(CasimirError, RuntimeError): ...


class StepUnderflowError(CasimirError, RuntimeError): ...


class ScenarioError(CasimirError, RuntimeError):
    """
    One (separation, temperature) scenario of a CLI run failed.
    """
