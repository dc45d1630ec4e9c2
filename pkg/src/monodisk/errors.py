"""Exception hierarchy shared by all monodisk modules."""


class MonodiskError(Exception):
    """Base class for every error raised by this package."""


# -- geometry ---------------------------------------------------------------

class NotClosed(MonodiskError):
    """A contour operation requiring closure was given an open contour."""


# -- wedge construction -----------------------------------------------------

class InvalidN(MonodiskError):
    """The wedge order n must be an odd integer >= 3 (>= 2 for plain fans)."""


class GrooveOutOfRange(MonodiskError):
    """Normalized groove length outside [0, 1)."""


class SelfIntersection(MonodiskError):
    """A constructed boundary unexpectedly failed the simplicity check."""


class InadmissibleEndpoint(MonodiskError):
    """Custom groove endpoint lies outside the admissible region."""


class PathCollision(MonodiskError):
    """A groove path (or one of its rotated images) collides with another edge."""


class NotSymmetric(MonodiskError):
    """Operation requires a wedge with a straight symmetric groove."""


class SubdivisionCollision(MonodiskError):
    """Groove too long: an intermediate fan side hits the wedge boundary."""


# -- tiling assembly --------------------------------------------------------

class SideSelfIntersects(MonodiskError):
    """Radial side path is not simple."""


class RotationOverlap(MonodiskError):
    """Radial side path collides with its own rotated image."""


class WordInvalid(MonodiskError):
    """Edge word fails the (n, k) slot-count constraints."""


class NotCFamily(MonodiskError):
    """Edge-word readback is only defined for C-family tilings."""


class UnrecognizedSpan(MonodiskError):
    """A boundary arc span matches neither the long nor the short edge."""


# -- counting ---------------------------------------------------------------

class BothZero(MonodiskError):
    """Necklace counts need at least one bead."""


class TooLarge(MonodiskError):
    """Brute-force necklace enumeration guard (a + b <= 24)."""


class TooMany(MonodiskError):
    """Member enumeration guard (necklace sum <= 10**6)."""


class UnsupportedN(MonodiskError):
    """Reference quasi-polynomials exist only for n in {3, 5}."""


class FitInconsistent(MonodiskError):
    """Fitted quasi-polynomial failed held-out verification."""


class CriticalOnlyForN3(MonodiskError):
    """The pinch-limit family exists only for n = 3."""


# -- persistence ------------------------------------------------------------

class SchemaViolation(MonodiskError):
    """Tiling document violates the JSON schema.

    ``pointer`` holds a JSON-pointer-style path to the offending node.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{message} (at {pointer or '/'})")
        self.pointer = pointer


class VersionUnsupported(MonodiskError):
    """Unknown schema_version in a tiling document."""
