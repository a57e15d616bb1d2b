"""Exception hierarchy shared by every module of the package."""


class ChordalBraidError(ValueError):
    """Base class for all errors raised by this package."""


# graph
class UnknownVertex(ChordalBraidError):
    pass


class SelfLoop(ChordalBraidError):
    pass


class NotChordal(ChordalBraidError):
    pass


class NotASimplex(ChordalBraidError):
    pass


class NotSimplicial(ChordalBraidError):
    pass


class InvalidPeo(ChordalBraidError):
    pass


# free groups
class UnknownSymbol(ChordalBraidError):
    pass


class AlphabetMismatch(ChordalBraidError):
    pass


class MissingImage(ChordalBraidError):
    pass


# pure braids
class BadIndex(ChordalBraidError):
    pass


class IndexSetMismatch(ChordalBraidError):
    pass


class NotASubset(ChordalBraidError):
    pass


class NotInKernel(ChordalBraidError):
    pass


class BudgetExceeded(ChordalBraidError):
    pass


# limit groups
class NotAnEdge(ChordalBraidError):
    pass


class GraphMismatch(ChordalBraidError):
    pass


class WrongIndexing(ChordalBraidError):
    pass


class InvariantViolation(ChordalBraidError):
    """An internal consistency check failed; indicates a bug, not bad input."""


# invariants
class TooLarge(ChordalBraidError):
    pass


class ParseError(ChordalBraidError):
    pass
