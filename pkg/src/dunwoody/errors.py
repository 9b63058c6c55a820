"""Exception types shared across the package."""


class DunwoodyError(Exception):
    """Base class for all errors raised by this package."""


class MalformedWordError(DunwoodyError, ValueError):
    """A word contains a zero letter or a letter outside the generator range."""


class ShapeError(DunwoodyError, ValueError):
    """A presentation has the wrong shape for the requested operation."""


class DomainError(DunwoodyError, ValueError):
    """Parameters violate the constraints of an operation."""


class NotHeegaardError(DunwoodyError):
    """The operation needs a valid Heegaard diagram and did not get one."""
