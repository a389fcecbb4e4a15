"""Exception types raised across the package."""


class NDLError(ValueError):
    """Base class for all errors raised by ndlgraph."""


class GraphFormatError(NDLError):
    """Malformed graph, tableau, deck or switch-path input."""


class InvalidMoveError(NDLError):
    """A switch is not valid against the graph it is applied to."""


class DegreeMismatchError(InvalidMoveError):
    """A 2-switch is valid but fails the N-switch degree equalities."""


class InfeasibleTableauError(NDLError):
    """A tableau contains an entry that is not one of its row lengths."""


class NotGraphicError(NDLError):
    """A sequence, bipartitioned list or tableau has no realization.

    ``failures`` names the offending derived lists when available, e.g.
    ``["D^2", "D^{3,1}"]``.
    """

    def __init__(self, message: str, failures: list[str] | None = None):
        super().__init__(message)
        self.failures = list(failures or [])


class NDLMismatchError(NDLError):
    """Two graphs were expected to share a labeled NDL but do not."""


class InconsistentDeckError(NDLError):
    """A deck fails the arithmetic consistency checks of the counting argument."""


class SizeCapError(NDLError):
    """A brute-force enumeration was asked to exceed its hard size cap."""
