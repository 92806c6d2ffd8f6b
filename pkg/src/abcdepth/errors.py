class InputError(ValueError):
    """Malformed or inconsistent input data."""


class CSVFormatError(InputError):
    """A CSV point file could not be parsed; carries the offending location."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class ContractError(ValueError):
    """An argument violates an operation's precondition (e.g. ball size out of range)."""


class UnsupportedDimensionError(InputError):
    """The operation is only defined for a specific dimension."""


class CostGuardError(ValueError):
    """A brute-force routine was asked for an instance beyond its size limit."""
