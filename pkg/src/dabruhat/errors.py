"""Exception hierarchy.

The CLI maps these onto exit codes: ``ParseError`` -> 1, ``DomainError`` -> 2,
``InternalError`` -> 3.
"""
from __future__ import annotations


class DabruhatError(Exception):
    pass


class ParseError(DabruhatError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class DomainError(DabruhatError, ValueError):
    """Mathematically invalid input (wrong level, not a root, ...)."""


class SystemMismatchError(DomainError):
    pass


class OutsideTitsConeError(DomainError):
    pass


class LevelZeroError(DomainError):
    pass


class NotDownwardError(DomainError):
    """The reflection does not lower the element."""


class NotUpwardError(DomainError):
    pass


class HypothesisError(DomainError):
    """A theorem's hypothesis fails on the given input."""


class NotRegularError(HypothesisError):
    pass


class WeightBoundError(HypothesisError):
    """<zeta, alpha_i> is below the required bound for some i."""


class AffineLengthBoundError(HypothesisError):
    """l(w~) exceeds the chosen bound M."""


class InternalError(DabruhatError, RuntimeError):
    pass


class CapExceededError(InternalError):
    pass
