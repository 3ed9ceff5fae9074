"""Exception taxonomy shared by all modules."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI maps this to exit code 2)."""


class DegenerateInputError(InputError):
    """Input collapses a construction (e.g. two equal marked points)."""


class ConstructionError(RuntimeError):
    """A constructed object failed its own certificate (should not happen
    for shipped systems; treated as a bug, not a user error)."""


class InternalConsistencyError(RuntimeError):
    """An invariant the theory guarantees was violated at runtime."""
