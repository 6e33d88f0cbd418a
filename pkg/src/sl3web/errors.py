"""Exception taxonomy shared by the whole package.

The split matters for the command line tool: input that cannot be parsed,
input that violates a precondition, and a computation that contradicts a
structural theorem are reported with different exit codes.
"""


class InvalidWebError(ValueError):
    """An operation received a web that fails validation."""


class BoundaryMismatchError(ValueError):
    """Two webs were combined but their boundary sign sequences differ."""


class PairingError(ValueError):
    """A grey half-edge pairing is malformed for the given red graph."""


class StageMismatchError(ValueError):
    """A reduction stack stage does not apply to the web produced so far."""


class SizeGuardError(RuntimeError):
    """An exhaustive search exceeded its configured size guard."""


class TheoremViolationError(AssertionError):
    """A computation contradicts one of the structural theorems.

    This is never expected to fire on correct inputs; when it does, it
    means either a genuine counterexample or a bug, and the CLI reports
    it with its own exit code so it cannot be mistaken for bad input.
    """
