class PostulatumException(Exception):
    """Raised when postulatum experiences a fatal error"""

    exit_code = 1


class VerificationFailed(PostulatumException):
    """Raised when one or more pinned claims fail to verify

    Attributes:
        failed -- names of the failing claims
    """

    exit_code = 1

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__(f"verification failed: {', '.join(self.failed)}")


class ParseError(PostulatumException):
    """Raised when a rational, point, chord or ray literal cannot be parsed

    Attributes:
        token -- the offending input token
    """

    exit_code = 2

    def __init__(self, token, hint=""):
        self.token = token
        msg = f"cannot parse '{token}'"
        if hint:
            msg = f"{msg} ({hint})"
        super().__init__(msg)


class UnknownModel(PostulatumException):
    """Raised when a model name is not in the registry"""

    exit_code = 2


class DomainError(PostulatumException):
    """Raised when an input violates a geometric precondition"""

    exit_code = 3


class PointOnLine(DomainError):
    """The point lies on the line it is classified against"""


class PointOutsideSpace(DomainError):
    """The point is not in the closed unit square"""


class NotOnBoundary(DomainError):
    """A chord endpoint is not on the boundary of the square"""


class AdjacentSidesOnly(DomainError):
    """The chord endpoints admit no opposite-side assignment"""


class DegenerateChord(DomainError):
    """Both chord endpoints coincide"""


class DegenerateDirection(DomainError):
    """A direction was requested between coincident points"""


class AntipodalPair(DomainError):
    """Two sphere points are antipodal, the great circle through them is not unique"""


class CoincidentPoints(DomainError):
    """Two sphere points coincide"""


class NotOnC(DomainError):
    """A sphere point does not lie on the equator (C)"""


class IrrationalCirclePoint(DomainError):
    """A ray on (C) does not normalise to a rational point of the plane"""


class OutputError(PostulatumException):
    """Raised when an output file cannot be written"""

    exit_code = 4
