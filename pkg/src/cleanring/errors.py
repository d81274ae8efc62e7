"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RingError(Exception):
    """Base class for all errors raised by cleanring."""


class RingAxiomError(RingError):
    """A pair of operation tables fails one or more ring axioms.

    ``violations`` holds every failing axiom found, each as an
    ``(axiom, witness)`` pair where the witness is the first failing tuple
    of element ids in scan order.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        text = "; ".join(f"{axiom} at {witness}" for axiom, witness in self.violations)
        super().__init__(text)


class NotAGroup(RingAxiomError):
    pass


class NotAssociative(RingAxiomError):
    pass


class NotDistributive(RingAxiomError):
    pass


class BadIdentity(RingAxiomError):
    pass


class ZeroEqualsOne(RingAxiomError):
    pass


class CapExceeded(RingError):
    pass


class ParseError(RingError):
    def __init__(self, message, position=0, text=""):
        self.position = position
        self.text = text
        # line/column are 1-based
        prefix = text[:position]
        self.line = prefix.count("\n") + 1
        self.column = position - (prefix.rfind("\n") + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


class NonMonic(RingError):
    pass


class NotIdempotent(RingError):
    pass


class ImproperIdeal(RingError):
    pass


class NotAnIdeal(RingError):
    pass


class NotAHomomorphism(RingError):
    pass


class BadEndomorphism(NotAHomomorphism):
    pass


class InvolutionError(RingError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: witness {witness}")


class NotAdditive(InvolutionError):
    pass


class NotAntiMultiplicative(InvolutionError):
    pass


class NotInvolutive(InvolutionError):
    pass


class NotStarInvariant(InvolutionError):
    pass


class GradingError(RingError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: witness {witness}")


class NotSubgroup(GradingError):
    pass


class NotDirectSum(GradingError):
    pass


class ProductLeak(GradingError):
    pass


class OneNotInG0(GradingError):
    pass


class UnknownCheck(RingError):
    pass


class ArityMismatch(RingError):
    pass


class UnknownFlag(RingError):
    pass


class UnknownConstructor(ParseError):
    pass


class ArityError(ParseError):
    pass


class UnknownElementName(RingError):
    pass
