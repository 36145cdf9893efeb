"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LightsOutError(Exception):
    """Base class for all domain errors raised by this package."""


class InputError(LightsOutError, ValueError):
    """Malformed or invalid input: bad graph documents, bad bitstrings,
    dimension mismatches, overlapping star sets, and the like."""


class PreconditionError(LightsOutError, ValueError):
    """Input is well formed but violates an operation's stated precondition
    (e.g. asking for a nullity-decreasing edge of an always solvable graph)."""


class CapacityError(LightsOutError, RuntimeError):
    """A guard against exponential blow-up was exceeded."""
