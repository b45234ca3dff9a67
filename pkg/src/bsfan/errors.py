"""Exception types shared across the package."""


class BsfanError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BsfanError, ValueError):
    """Malformed serialized input (bad JSON shape, bad rational, duplicate key)."""


class ValidationError(BsfanError, ValueError):
    """Structurally invalid value (negative entry where forbidden, non-monotone
    codimension sequence, nonpositive order weight, ...)."""


class EvaluatorRangeError(BsfanError):
    """An explicit-window evaluator was queried outside its declared range.

    ``missing`` lists the (q, j) pairs that were needed but undeclared.
    """

    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__(f"evaluator queried outside declared range at {self.missing}")


class NotInCone(BsfanError):
    """A greedy decomposition got stuck: the input is not in the cone.

    Carries the pieces extracted so far plus what blocked the next step:
    either a strand with no compatible trim (``blocking_strand``) or an
    entry that a subtraction would drive negative (``blocking_entry``).
    """

    def __init__(self, message, partial_pieces=(), blocking_strand=None,
                 blocking_entry=None):
        self.partial_pieces = list(partial_pieces)
        self.blocking_strand = blocking_strand
        self.blocking_entry = blocking_entry
        super().__init__(message)


class MonadViolation(BsfanError):
    """The monad splitting produced an inconsistent central column, so the
    input table cannot come from a free monad."""

    def __init__(self, message, e_table=None):
        self.e_table = e_table
        super().__init__(message)
