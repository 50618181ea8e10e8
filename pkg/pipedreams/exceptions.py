from pprint import pformat

__all__ = [
    "PipeDreamsException",
    "DetailedError",
    "CodeNotRealizable",
    "IdentityHasNoDescent",
    "NotACover",
    "DeltaUndefined",
    "NotGrassmannian",
    "EmptyTableau",
    "InvalidBPD",
    "DanglingStrand",
    "DoubleCrossing",
    "BoundaryMismatch",
    "ShapeMismatch",
    "EntryExceedsK",
    "InvalidBiletter",
    "NotPlactic",
    "ChainMismatch",
    "NoPreimage",
    "InsertionError",
    "ClassTooLarge",
    "NoExpansion",
    "DescentConditionViolated",
    "NoAdmissibleChain",
    "ParseError",
]


class PipeDreamsException(Exception):
    pass


class DetailedError(PipeDreamsException):
    """
    Base class of errors that carry the object they were raised about.

    `context` is pretty printed underneath the message, e.g.

        <NotACover> length of 123 * t(1,3) is 3, expected 1
         {'alpha': 1, 'beta': 3, 'perm': '123'}
    """

    error: str

    def __init__(self, error, context=None):
        super().__init__(error)
        self.error = error
        self.context = context

    def __str__(self):
        body = pformat(self.context, width=80) if self.context else ""
        return f"<{self.__class__.__name__}> {self.error}\n {body}".rstrip()


class CodeNotRealizable(DetailedError, ValueError):
    pass


class IdentityHasNoDescent(DetailedError, ValueError):
    pass


class NotACover(DetailedError, ValueError):
    pass


class DeltaUndefined(DetailedError, ValueError):
    pass


class NotGrassmannian(DetailedError, ValueError):
    pass


class EmptyTableau(DetailedError, ValueError):
    pass


class InvalidBPD(DetailedError, ValueError):
    """
    A tile grid that is not a reduced bumpless pipe dream.
    """

    pass


class DanglingStrand(InvalidBPD):
    pass


class DoubleCrossing(InvalidBPD):
    pass


class BoundaryMismatch(InvalidBPD):
    pass


class ShapeMismatch(DetailedError, ValueError):
    pass


class EntryExceedsK(DetailedError, ValueError):
    pass


class InvalidBiletter(DetailedError, ValueError):
    pass


class NotPlactic(DetailedError, ValueError):
    pass


class ChainMismatch(DetailedError, ValueError):
    pass


class NoPreimage(DetailedError):
    pass


class InsertionError(DetailedError):
    """
    A min-droop cascade did not end in a valid BPD one cover above the input.
    """

    pass


class ClassTooLarge(DetailedError):
    pass


class NoExpansion(DetailedError):
    pass


class DescentConditionViolated(DetailedError, ValueError):
    pass


class NoAdmissibleChain(DetailedError):
    pass


class ParseError(DetailedError, ValueError):
    pass
