"""Exception hierarchy. Every error raised on bad input derives from ``IntervalCatError``."""


class IntervalCatError(Exception):
    pass


class ParseError(IntervalCatError, ValueError):
    pass


class CycleError(IntervalCatError, ValueError):
    pass


class SizeError(IntervalCatError, ValueError):
    pass


class ElementError(IntervalCatError, KeyError):
    pass


class MorphismError(IntervalCatError, ValueError):
    pass


class IdealMapError(IntervalCatError, ValueError):
    pass


class AssociativityError(IntervalCatError, ValueError):
    pass


class SingularError(IntervalCatError, ValueError):
    pass


class IntervalError(IntervalCatError, ValueError):
    pass


class BaseError(IntervalCatError, ValueError):
    """Module lives over the wrong base poset."""


class FunctorialityError(IntervalCatError, ValueError):
    pass


class LengthError(IntervalCatError, RuntimeError):
    pass


class ThicknessError(IntervalCatError, ValueError):
    pass


class CoprimalityError(IntervalCatError, ValueError):
    pass
