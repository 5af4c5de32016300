class AlgebraError(Exception):
    """Base class for zdlab errors."""


class InputError(AlgebraError, ValueError):
    """Malformed input or a structure that fails its declared axioms."""


class ClosureError(InputError):
    """A subset is not closed under an operation; ``pair`` names the escape."""

    def __init__(self, message: str, pair: tuple[int, ...] = ()):
        super().__init__(message)
        self.pair = tuple(pair)


class ResourceError(AlgebraError):
    """The requested computation exceeds the desk-scale limits."""
