"""Exception types shared across mapsym."""


class MapsymError(Exception):
    """Base class for every error raised by this package."""


class InputError(MapsymError, ValueError):
    """Malformed input: bad JSON, wrong lengths, out-of-range parameters."""


class PreconditionError(MapsymError, ValueError):
    """A valid object was passed to an operation that needs more of it."""


class UnsupportedSizeError(MapsymError, ValueError):
    """Input is larger than the exhaustive algorithms are meant for."""


class ConstructionError(MapsymError, ValueError):
    """Face cycles (or a derived map) do not describe a map."""


class NotATypeGraphError(MapsymError, ValueError):
    """A two-colour quotient did not match any of the eight type shapes."""


class WrongOrbitCountError(MapsymError, ValueError):
    """Raised when a 4-orbit-only operation gets a k-orbit map with k != 4."""

    def __init__(self, k):
        super().__init__(f"map has {k} flag orbits, expected 4")
        self.k = k


class CatalogConsistencyError(MapsymError, RuntimeError):
    """The embedded catalog disagrees with its own tables (should never happen)."""
