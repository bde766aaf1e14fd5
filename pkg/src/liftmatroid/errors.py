"""Exception types raised across the package."""

from __future__ import annotations


class CapacityError(ValueError):
    """An input exceeds a hard size limit (e.g. more than 32 edges)."""


class MatroidAxiomError(ValueError):
    """A proposed circuit family violates the circuit axioms."""


class ResourceError(RuntimeError):
    """A search ran past its configured caps or node budget.

    Never accompanied by a definite verdict: the caller learns that the
    question was not settled, and ``frontier`` says how far the search got.
    """

    def __init__(self, message: str, frontier: dict | None = None):
        super().__init__(message)
        self.frontier = dict(frontier or {})


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.source = source


class InconsistencyError(AssertionError):
    """Two independent decision routes disagreed."""
