"""Exception types shared across the package."""


class StateError(ValueError):
    """A quantum state violates a required property (e.g. normalization)."""


class UnreachableTargetError(ValueError):
    """The target weight has zero amplitude, so no amount of sampling or
    amplification can reach it."""


class ResourceLimitError(RuntimeError):
    """A request exceeds a configured resource bound (qubit cap, scan bound)."""
