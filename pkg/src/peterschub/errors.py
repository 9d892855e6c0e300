"""Exception types shared across the package.

Two failure modes are distinguished so the CLI can map them to exit codes:
a ``Rejected`` input is the caller's problem, an ``InvariantViolation`` is
ours.
"""


class Rejected(ValueError):
    """An input violates a documented precondition."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug."""
