"""Shared exception types."""


class ComputationRefused(Exception):
    """A computation was declined rather than silently mis-answered
    (search cap exceeded, wrong dimension for the fast path, grid margin
    too small)."""


class InternalInvariantError(AssertionError):
    """A consistency check that should be unreachable has failed."""
