"""Exceptions shared across the package."""


class PrismHullError(Exception):
    """Base class for errors raised by this package."""


class ParseError(PrismHullError):
    """Malformed edge-list text or family DSL string."""


class VertexRangeError(PrismHullError):
    """A vertex index lies outside the graph's vertex range."""


class CapExceededError(PrismHullError):
    """An input graph is larger than the configured search cap."""


class UnsoundConstraintsError(PrismHullError):
    """Caller-supplied search constraints excluded the true minimum."""
