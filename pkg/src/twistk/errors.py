"""Exception types raised across the package."""


class TwistKError(ValueError):
    """Base class for every input error raised by twistk."""


class InvalidBase(TwistKError):
    pass


class InadmissibleEuler(TwistKError):
    pass


class InadmissibleDualEuler(InadmissibleEuler):
    pass


class TorsionBase(TwistKError):
    pass


class DegreeZeroNotZ(TwistKError):
    pass


class TopNotZ(TwistKError):
    pass


class TopDegreeMismatch(TwistKError):
    pass


class NotTerminal(TwistKError):
    pass


class BadArguments(TwistKError):
    pass


class BadTruncation(TwistKError):
    pass


class NoClosingSign(TwistKError):
    pass


class ContainsEta(TwistKError):
    pass
