"""Exception types shared across the library."""


class InternalConsistencyError(RuntimeError):
    """An invariant the algorithms guarantee has failed.

    This signals a bug in the library (or memory corruption), never bad user
    input. Callers should not catch it except to abort cleanly.
    """


class MatrixParseError(ValueError):
    """Matrix input text is malformed; the message pinpoints row and column."""
