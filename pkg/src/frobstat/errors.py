"""Exception hierarchy shared by all frobstat modules."""

from __future__ import annotations


class FrobstatError(Exception):
    """Base class for every error raised by this package."""


# --- input / configuration errors (CLI exit code 1) ---

class NotPrime(FrobstatError):
    pass


class TooLarge(FrobstatError):
    pass


class OutOfRange(FrobstatError):
    pass


class ConfigError(FrobstatError):
    pass


class ParseError(FrobstatError):
    """Polynomial expression syntax error; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CommonFactor(FrobstatError):
    pass


class InsufficientData(FrobstatError):
    pass


class NotNormalized(FrobstatError):
    pass


class TooFewCells(FrobstatError):
    pass


class NonPrimeBase(FrobstatError):
    pass


class BudgetExceeded(FrobstatError):
    pass


# --- arithmetic errors ---

class DivisionByZero(FrobstatError):
    pass


class FieldMismatch(FrobstatError):
    pass


class ZeroPolynomial(FrobstatError):
    pass


class Inconsistent(FrobstatError):
    """Point counts do not come from a reduced zero-dimensional set."""


class Undetected(FrobstatError):
    """Component-splitting detection found no qualifying extension degree."""


# --- per-trial exclusions: data, not failures ---
# Experiment drivers catch these and tally them under `tally_key`.

class ExclusionError(FrobstatError):
    tally_key: str = ""


class DegreeDrop(ExclusionError):
    tally_key = "degree_drop"


class NotSquarefree(ExclusionError):
    tally_key = "not_squarefree"


class NotTransversal(ExclusionError):
    tally_key = "not_transversal"


# --- experiment-level errors ---

class NuUndetected(FrobstatError):
    pass


class HypothesisViolation(FrobstatError):
    """Strict mode: the experiment's applicability conditions do not hold."""


class InvariantViolation(FrobstatError):
    """Internal consistency check failed (CLI exit code 3)."""
