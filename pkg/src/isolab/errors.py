"""Exception hierarchy. Every error raised by the package derives from IsolabError."""


class IsolabError(Exception):
    """Base class."""


# map construction
class MapError(IsolabError):
    pass


class NonInvolutiveTwin(MapError):
    pass


class MalformedRotation(MapError):
    pass


class DisconnectedGraph(MapError):
    pass


class EulerViolation(MapError):
    pass


# assumptions and regions
class AssumptionViolated(IsolabError):
    """Map fails the standing assumption: G and G* simple, all vertex and face degrees >= 3."""


class NotInterior(IsolabError):
    pass


class TouchesTruncationBoundary(NotInterior):
    pass


class PreconditionNotMet(IsolabError):
    pass


class NotSimplyConnected(PreconditionNotMet):
    pass


class EmptySet(IsolabError):
    pass


class EmptyFaceSet(IsolabError):
    pass


class CapExceeded(IsolabError):
    pass


class RadiusExceedsInterior(IsolabError):
    pass


class HypothesisFailed(IsolabError):
    pass


# hyperbolicity
class Disconnected(IsolabError):
    pass


class BallTouchesTruncationBoundary(IsolabError):
    pass


class NoDetourExists(IsolabError):
    pass


class NotTriangulation(IsolabError):
    pass


class TooSmallT(IsolabError):
    pass


# generators
class ScheduleTooLargeForRadius(IsolabError):
    pass


class SpacingViolated(IsolabError):
    pass


class RuleViolated(IsolabError):
    """Explicit multiplicity list breaks l_{n+1} >= C_n. Raised only on request; generators record it as a flag."""


# cli
class BadFlags(IsolabError):
    pass


class FileIO(IsolabError):
    pass
