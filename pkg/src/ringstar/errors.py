"""Exception types shared across the package."""


class RingError(ValueError):
    """Invalid ring construction or an argument that is not an ideal/prime."""


class ResourceCapError(RuntimeError):
    """A configured size cap (ring order, lattice size) was exceeded."""


class SpecParseError(ValueError):
    """A ring or family spec string could not be parsed.

    ``token`` holds the offending piece of input.
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token
