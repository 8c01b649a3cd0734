"""Exception types shared across the package."""


class QuasigaloisError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(QuasigaloisError):
    """A configured size cap was exceeded; nothing was truncated."""

    def __init__(self, what, limit, stage=None):
        self.what = what
        self.limit = limit
        self.stage = stage
        msg = f"{what} exceeds the configured cap of {limit}"
        if stage:
            msg = f"[{stage}] {msg}"
        super().__init__(msg)


class MalformedTableError(QuasigaloisError, ValueError):
    pass


class NotACongruenceError(QuasigaloisError, ValueError):
    pass


class InvarianceError(QuasigaloisError, ValueError):
    """A subgroup of A is not invariant under the maps of an extension."""


class InconsistencyError(QuasigaloisError):
    """Internal consistency check failed; indicates a bug, not bad input."""


class JoinFailureError(QuasigaloisError):
    """The join of all central congruences is not itself central."""


class ParseError(QuasigaloisError, ValueError):
    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + msg)


class NotAnAutomorphismError(QuasigaloisError, ValueError):
    """The map f of an extension is not bijective on A."""
