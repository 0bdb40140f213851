"""Shared exception types."""


class LengthContractError(ValueError):
    """An operand length violates the operation's contract."""


class AlphabetError(ValueError):
    """A symbol or operand does not fit the declared alphabet."""


class ResourceLimitError(RuntimeError):
    """Requested work would exceed a configured bound.

    Distinct from a definitive "no" answer: callers that silently treat this
    as absence would corrupt exhaustive cross-checks.
    """
