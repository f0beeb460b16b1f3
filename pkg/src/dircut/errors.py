"""Exception types shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad vertex id, invalid witness, ...)."""


class ResourceLimitError(RuntimeError):
    """An exact search would exceed its configured limit.

    Raised instead of returning a possibly wrong answer.
    """


class ContractViolation(RuntimeError):
    """A witness handed to an extractor does not have the promised structure."""


class BoundViolation(AssertionError):
    """A proven combinatorial bound failed on a concrete input.

    Seeing this means the implementation (not the mathematics) is broken.
    """
