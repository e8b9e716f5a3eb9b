"""Exception types shared across the package."""


class XMGraphError(Exception):
    """Base class for all package errors."""


class ValidationError(XMGraphError, ValueError):
    """A structure failed one of its defining laws."""


class CapacityError(XMGraphError, RuntimeError):
    """A computation would exceed a configured size or search budget."""


class ParseError(XMGraphError, ValueError):
    """Malformed bundle text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
