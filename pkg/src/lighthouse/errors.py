"""Exception hierarchy shared by all lighthouse modules."""


class LighthouseError(ValueError):
    """Base class for every error raised by this package."""


class PointInsideCircle(LighthouseError):
    pass


class NoTangents(LighthouseError):
    pass


class DegenerateInput(LighthouseError):
    pass


class InvalidN(LighthouseError):
    pass


class IndexOutOfRange(LighthouseError, IndexError):
    pass


class NoIlluminator(LighthouseError):
    """No admissible ray from any source lighthouse closes the shadow."""


class UnsupportedN(LighthouseError):
    pass


class NoRootInBracket(LighthouseError):
    pass


class PointInsideBody(LighthouseError):
    pass


class UnboundedRegion(LighthouseError):
    """The dark region behind the target did not close within the growth limit."""
