"""Exception hierarchy for the tangle calculus."""


class TangleError(Exception):
    """Base class for precondition violations in the tangle calculus."""


class InfinityInput(TangleError):
    """An operation that needs a finite fraction received 1/0."""


class InfinityNotExpandable(TangleError):
    """1/0 has no continued-fraction expansion."""


class ZeroNumerator(TangleError):
    """The 0/1 class has no reduced |p| > |q| form."""


class NotCanonical(TangleError):
    """Operation requires a canonical term vector."""


class NotTwoComponent(TangleError):
    """Operation is defined only for two-component closures (parity e/o)."""


class RangeError(TangleError):
    """Argument outside the supported range."""


class ParseError(TangleError):
    """Malformed notation input.

    Carries the byte offset of the first offending character and a short
    description of what was expected there.
    """

    def __init__(self, message: str, offset: int, expected: str):
        super().__init__(f"{message} at offset {offset} (expected {expected})")
        self.offset = offset
        self.expected = expected
