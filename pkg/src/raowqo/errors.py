"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every raowqo error."""


class NotGraphic(Error):
    """No simple graph realizes the degree sequence."""


class CapExceeded(Error):
    """Input too large for an exhaustive procedure's cap."""


class TypeMismatch(Error):
    """Label shape does not fit the order descriptor."""


class OrderMismatch(Error):
    """Two labelled sequences carry different order descriptors."""


class TooShort(Error):
    """Sequence has fewer entries than the requested top-vertex count."""


class TopGraphMismatch(Error):
    """Reductions disagree on the ordered top graph."""


class LabelNotDominated(Error):
    """A top label fails the pointwise dominance requirement."""


class ReconstructionDegreeMismatch(Error):
    """Recombined graph does not realize the claimed sequence (internal bug)."""


class PreconditionViolated(Error):
    """Inputs break a documented precondition."""


class ParseError(Error):
    """External file or descriptor failed to parse."""
