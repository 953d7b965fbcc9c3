"""Exception types shared across the package."""


class GKCheckError(Exception):
    """Base class for every error this package raises on bad input."""


# group construction

class NotAGroup(GKCheckError):
    """A multiplication table violates one of the group axioms."""


class NoIdentity(NotAGroup):
    pass


class NonInvertibleElement(NotAGroup):
    pass


class NotAPermutation(GKCheckError):
    pass


class OrderGuardExceeded(GKCheckError):
    """Closure enumeration passed the configured maximum order."""


class IndexOutOfRange(GKCheckError):
    pass


# automorphisms

class NotAHomomorphism(GKCheckError):
    pass


class NotAnInvolution(GKCheckError):
    pass


class InconsistentImages(GKCheckError):
    """Generator images cannot be extended to a well-defined map."""


# catalog

class UnknownCatalogName(GKCheckError):
    pass


class UnsupportedParameter(GKCheckError):
    pass


# double cosets

class MismatchedParents(GKCheckError):
    pass


class RightSubgroupNotThetaOfLeft(GKCheckError):
    pass


class SigmaNotWellDefined(GKCheckError):
    """Internal guard: sigma failed to act on whole double cosets."""


class SubgroupNotThetaStable(GKCheckError):
    pass


# character tables

class PrimeSearchOverflow(GKCheckError):
    pass


class EigenspaceNotSplit(GKCheckError):
    """Internal guard: class-matrix refinement left a space of dim > 1."""


class DegreeLiftAmbiguous(GKCheckError):
    """Internal guard: degree recovery found no unique integer root."""


class LiftOutOfRange(GKCheckError):
    pass


class IndicatorOutOfRange(GKCheckError):
    pass


class PartnerRowNotFound(GKCheckError):
    pass


# input handling (CLI layer)

class InputError(GKCheckError):
    """Base for problems with user-supplied documents."""


class ParseError(InputError):
    pass


class ValidationError(InputError):
    pass


class UnknownName(InputError):
    pass


class UnknownSuite(InputError):
    pass
