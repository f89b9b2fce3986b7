# -*- coding: utf-8 -*-
"""Errors

exception classes raised by tauweave. The command line maps them to
exit codes (see application.EXIT_CODES).

"""

class TauweaveError(Exception):
    """base class for every error raised on purpose by this package"""

class UsageError(TauweaveError):
    """bad command line, configuration value or input file"""

class PresentationError(UsageError):
    """a quiver presentation that cannot be turned into an algebra"""

class BudgetError(TauweaveError):
    """an enumeration would exceed the configured node budget"""

class VerificationError(TauweaveError):
    """a property that was checked turned out to be false"""

class CriterionError(VerificationError):
    """the combinatorial criterion reached an inconsistent state"""
