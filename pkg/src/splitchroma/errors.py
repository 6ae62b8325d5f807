class SplitChromaError(Exception):
    pass


class PreconditionError(SplitChromaError, ValueError):
    """An operation was called outside its documented domain."""


class NotSplitError(PreconditionError):
    pass


class DisconnectedGraphError(PreconditionError):
    pass


class OutOfFamilyError(SplitChromaError):
    """The graph is not covered by the constructive Delta-coloring route."""


class SizeLimitError(PreconditionError):
    pass


class FilterUnsatisfiableError(SplitChromaError):
    pass


class LemmaViolation(SplitChromaError, AssertionError):
    """A proof obligation of the coloring algorithm failed at runtime.

    This means either the input violates the hypotheses or the implementation
    is wrong; it is never an ordinary input error.
    """


class SwapBoundExceeded(LemmaViolation):
    """A trail slot or an outside vertex needed more swaps than its bound."""
