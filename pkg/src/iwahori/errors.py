"""Exception hierarchy.  Every domain failure derives from ``IwahoriError``."""


class IwahoriError(Exception):
    pass


class InvalidDatum(IwahoriError):
    pass


class NonDominantInput(IwahoriError):
    pass


class EmptyRootSystem(IwahoriError):
    pass


class DatumMismatch(IwahoriError):
    pass


class InfiniteWJ(IwahoriError):
    pass


class NonSigmaStableJ(IwahoriError):
    pass


class IncompatibleTwist(IwahoriError):
    pass


class IncompatibleQuotient(IwahoriError):
    pass


class NoStep(IwahoriError):
    pass


class NonDominantResult(IwahoriError):
    pass


class UnsupportedKind(IwahoriError):
    pass


class ConstraintViolated(IwahoriError):
    pass


class NotInLoopGroup(IwahoriError):
    pass


class LiftNotFound(IwahoriError):
    pass


class ZeroDenominator(IwahoriError):
    pass
