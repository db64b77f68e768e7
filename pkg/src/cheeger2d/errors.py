"""Exception types shared across the package."""


class CheegerError(Exception):
    """Base class for all package errors."""


class InvalidBodyError(CheegerError):
    """Malformed input geometry: open or non-convex chain, unbounded or
    empty constraint intersection, bad catalog parameters."""


class EmptyBodyError(InvalidBodyError):
    """A constraint intersection has no interior."""


class DegenerateBodyError(CheegerError):
    """A body is too thin to extract a boundary at the working tolerance;
    the message names the tolerance that was applied."""


class NumericFailureError(CheegerError):
    """An iteration budget was exhausted or an internal consistency check
    failed; the message carries the final bracket or diagnostic."""


class OracleFailureError(CheegerError):
    """The grid verifier could not produce a usable estimate."""
