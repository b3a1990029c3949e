"""Exception types shared across the toolkit."""


class DomKernelError(Exception):
    """Base class for all toolkit errors."""


class InvalidVertexError(DomKernelError):
    """A vertex id is out of range or refers to a deleted vertex."""


class EmptyGraphError(DomKernelError):
    """An operation that needs at least one live vertex got none."""


class InstanceTooLargeError(DomKernelError):
    """Exact solve requested beyond the configured brute-force cap."""


class FormatError(DomKernelError):
    """Malformed edge-list or embedding text."""


class NotPlanarError(DomKernelError):
    """A rotation system fails the Euler check, so it is not a plane embedding."""


class InvalidEmbeddingError(DomKernelError):
    """Rotation lists disagree with the graph's incident edges."""


class InvalidRegionError(DomKernelError):
    """Boundary paths do not bound a disk (bad endpoints, length, or sharing)."""


class InvalidInputError(DomKernelError):
    """A precondition on caller-supplied data failed (e.g. D not double dominating)."""


class RegionCoverageError(DomKernelError):
    """No admissible candidate region covers an uncovered vertex.

    This would falsify the covering lemma the decomposition relies on, so it
    aborts with full diagnostics instead of returning a partial answer.
    """


class InvalidArgumentError(DomKernelError, ValueError):
    """A scalar argument is outside its documented domain."""
