"""Exception hierarchy shared by all modules.

The split mirrors the CLI exit-code contract: bad caller input (exit 2)
is distinguished from a verification failure (exit 1, reported not raised)
and from an internal consistency violation (exit 3), which always means
the implementation broke one of its own exact invariants.
"""


class InputError(ValueError):
    """The caller supplied an argument outside an operation's domain."""


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds the configured size bound."""


class ConsistencyError(RuntimeError):
    """An exact internal invariant failed; indicates a bug, not bad input."""


class NotRationalError(ConsistencyError):
    """A cyclotomic element expected to be rational has a nonzero
    coefficient away from the constant term."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"not rational: nonzero coefficient at degree {index}")
