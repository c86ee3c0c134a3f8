"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called on a set that does not meet its precondition,
    e.g. a usage query on a non-poised set or a GC-only check on a set whose
    GC status is not established."""


class NotPoisedError(PreconditionError):
    """The operation requires a poised node set."""


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


class InternalConsistencyError(RuntimeError):
    """Two provably-equivalent computations disagreed; indicates a bug."""
