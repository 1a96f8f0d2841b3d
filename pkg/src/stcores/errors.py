"""Exception types shared across the package."""


class CoreError(Exception):
    """Base class for every error raised by stcores."""


class DivisibilityError(CoreError, ArithmeticError):
    """An exact division had a nonzero remainder."""

    def __init__(self, a, b):
        super().__init__(f"{b} does not divide {a}")
        self.a = a
        self.b = b


class NotCoprime(CoreError, ValueError):
    def __init__(self, s, t):
        super().__init__(f"gcd({s}, {t}) != 1: <{s},{t}> has infinitely many gaps")
        self.s = s
        self.t = t


class NotAGap(CoreError, ValueError):
    def __init__(self, value, s, t):
        super().__init__(f"{value} is not a gap of <{s},{t}>")
        self.value = value


class CapExceeded(CoreError):
    """The ideal count is above the enumeration cap.

    ``expected`` carries the exact number of ideals so callers can fall back
    to a recursion instead of enumerating.
    """

    def __init__(self, expected, cap):
        super().__init__(f"{expected} ideals exceed the enumeration cap {cap}")
        self.expected = expected
        self.cap = cap


class NotACore(CoreError, ValueError):
    pass


class InternalBijectionError(CoreError, AssertionError):
    pass


class UnrankedPoset(CoreError, ValueError):
    """Rank weights are only defined on the staircase posets P_(s,s+1)."""
