"""Exception hierarchy shared by every hyperlaw module."""

from __future__ import annotations


class HyperlawError(ValueError):
    """Base class for all domain errors raised by hyperlaw."""


class EmptyCell(HyperlawError):
    def __init__(self, i: int, j: int):
        super().__init__(f"cell ({i},{j}) is empty; hyperoperation values must be nonempty")
        self.i, self.j = i, j


class OutOfRange(HyperlawError):
    def __init__(self, i: int, j: int, element: int):
        super().__init__(f"cell ({i},{j}) contains element {element} outside the carrier")
        self.i, self.j, self.element = i, j, element


class DuplicateLabel(HyperlawError):
    def __init__(self, label: str):
        super().__init__(f"duplicate element label {label!r}")
        self.label = label


class OrderOutOfBounds(HyperlawError):
    def __init__(self, n: int):
        super().__init__(f"order {n} outside supported range 1..32")
        self.n = n


class EmptyOperand(HyperlawError):
    pass


class OrderTooLargeForExhaustive(HyperlawError):
    pass


class OrderTooLargeForCanonical(HyperlawError):
    pass


class NotAnIdentity(HyperlawError):
    pass


class NotLaShg(HyperlawError):
    """Raised when a theorem is run on a table that fails the left invertive law."""


class UnsupportedConverse(HyperlawError):
    pass


class InfeasibleQuery(HyperlawError):
    pass


class StepDoesNotDivideModulus(HyperlawError):
    pass


class TableSyntaxError(HyperlawError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column
