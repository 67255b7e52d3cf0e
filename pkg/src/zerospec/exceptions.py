class HypergraphError(ValueError):
    """Invalid hypergraph input or generator arguments."""


class DisconnectedError(HypergraphError):
    """A connected hypergraph was required."""


class InvariantViolation(AssertionError):
    """An internal mathematical invariant failed; indicates a bug."""
