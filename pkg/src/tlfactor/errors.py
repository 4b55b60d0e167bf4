"""Exception hierarchy for the Temperley-Lieb toolkit.

Three broad families, which the command line maps to distinct exit codes:
unreadable input (`ParseError`), violated mathematical invariants
(`InvariantViolation` subclasses), and searches that gave up rather than
exhaust memory (`BudgetExceeded` subclasses).
"""

from __future__ import annotations


class TLError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TLError):
    """Input text or JSON could not be interpreted."""


class InvariantViolation(TLError):
    """A mathematical precondition or structural invariant failed."""


class OutOfRange(InvariantViolation):
    """A position, letter, or rank lies outside its permitted interval."""


class PositionNotCommutable(InvariantViolation):
    """The two letters at the requested position do not commute."""


class NoBraidAtPosition(InvariantViolation):
    """The three letters at the requested position are not a braid pattern."""


class NotReduced(InvariantViolation):
    """An operation defined only for reduced words received a non-reduced one."""


class RankMismatch(InvariantViolation):
    """Two objects of different rank were combined."""


class IndexOutOfRange(InvariantViolation):
    """A generator or node index lies outside the diagram's rank."""


class NotPerfectMatching(InvariantViolation):
    """The chords of a diagram do not match every boundary node exactly once."""


class CrossingChords(InvariantViolation):
    """Two chords interleave in the boundary cyclic order.

    Carries the offending pair of chords when known.
    """

    def __init__(self, message: str, pair: tuple | None = None):
        super().__init__(message)
        self.pair = pair


class InconsistentCrossingOrder(InvariantViolation):
    """Left- and right-endpoint crossing orders disagree on a column.

    For a valid (planar) diagram the two derivations of the top-to-bottom
    order always coincide, so this signals a diagram that slipped past
    validation.
    """


class BudgetExceeded(TLError):
    """A bounded search or enumeration hit its configured limit."""


class ClassTooLarge(BudgetExceeded):
    """A commutation class grew past the caller-supplied size limit."""


class SearchBudgetExceeded(BudgetExceeded):
    """A rewriting search visited more states than its node budget."""
