"""Exception types shared across the package."""


class KendedError(Exception):
    """Base class for package-specific errors."""


class CapExceededError(KendedError):
    """An instance is larger than the configured desk-scale cap."""


class FormatError(KendedError, ValueError):
    """A serialized graph record is malformed."""


class Graph6Error(FormatError):
    """Malformed graph6 record."""


class EdgeListError(FormatError):
    """Malformed edge-list record."""


class PlanError(KendedError, ValueError):
    """Malformed or inconsistent sweep plan."""


class InternalInvariantError(KendedError):
    """A property that is a proved theorem failed; this signals a bug here, not in the input."""


class CounterexampleError(KendedError):
    """A verified claim failed on a concrete instance.

    The claims checked by the harness are proved theorems, so this is promoted
    to a hard failure carrying full reproduction data.
    """

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(
            "counterexample for claim %r on graph %s with S=%s, k=%d"
            % (verdict.claim, verdict.graph_id, list(verdict.subset), verdict.k)
        )

    def __reduce__(self):
        return (CounterexampleError, (self.verdict,))
