"""Exception hierarchy shared by every module in the package."""


class TreeError(ValueError):
    """Base class for domain errors (invalid trees, bad parameters)."""


class NotATree(TreeError):
    pass


class BadLabel(TreeError):
    pass


class DuplicateEdge(TreeError):
    pass


class NotAnEdge(TreeError):
    pass


class BadPartition(TreeError):
    pass


class BadArity(TreeError):
    pass


class ShapeMismatch(TreeError):
    pass


class BadAssignment(TreeError):
    pass


class BadParameters(TreeError):
    pass


class OutOfRange(TreeError):
    pass


class UnknownLemma(TreeError):
    pass


class FormatError(TreeError):
    """Malformed edge-list text."""
