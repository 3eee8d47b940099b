#!/usr/bin/env python3
"""Exception hierarchy for the weakly increasing matrix toolkit.

Each class maps onto one CLI exit code (see wimlab.py).
"""


class WimlabError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(WimlabError, ValueError):
    """Raised for invalid matrices, chains, paths, tuples or documents."""


class BudgetExceededError(WimlabError):
    """Raised when an enumeration would exceed its configured budget."""


class StructureViolation(WimlabError, RuntimeError):
    """Raised when an internal invariant fails (indicates a bug, not bad input)."""


class VerificationFailure(WimlabError):
    """Raised when counting routes or bijection round trips disagree."""
