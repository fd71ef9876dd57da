"""Exception hierarchy shared by all modules."""


class GKMError(ValueError):
    """Base class for every error raised by this package."""


class CartanError(GKMError):
    pass


class NotSymmetric(CartanError):
    pass


class OddOrPositiveDiagonal(CartanError):
    pass


class PositiveOffDiagonal(CartanError):
    pass


class UnknownIndex(GKMError):
    pass


class NonDominantWeight(GKMError):
    pass


class InvalidQuiver(GKMError):
    pass


class InternalInvariantError(GKMError):
    """A realization produced a value that the model forbids (e.g. a positive letter)."""


class UnknownFormat(GKMError):
    pass


class ShapeMismatch(GKMError):
    pass


class IrrationalSpectrum(GKMError):
    pass
