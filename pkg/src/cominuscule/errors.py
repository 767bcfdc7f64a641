"""Exception hierarchy shared by every module."""


class CominusculeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(CominusculeError, ValueError):
    pass


class NotARoot(CominusculeError, ValueError):
    pass


class NotCominuscule(CominusculeError, ValueError):
    pass


class InternalInconsistency(CominusculeError, RuntimeError):
    """A computed quantity violated a mathematical guarantee; always a bug."""


class NotContained(CominusculeError, ValueError):
    pass


class MalformedTable(CominusculeError, ValueError):
    pass


class EmptyIdeal(CominusculeError, ValueError):
    pass


class NotCominusculeDiagram(CominusculeError, ValueError):
    pass


class ParseError(CominusculeError, ValueError):
    pass


class RouteDisagreement(CominusculeError, RuntimeError):
    """Two decision routes disagreed on a pair. Fatal by design."""

    def __init__(self, message, pair=None, verdicts=None):
        super().__init__(message)
        self.pair = pair
        self.verdicts = verdicts
