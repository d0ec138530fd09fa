"""Exception hierarchy shared by all modules."""


class DigraphError(ValueError):
    """Base class for every error raised by this package."""


class InvariantViolation(DigraphError):
    """A loop, a symmetric pair or an out-of-range endpoint."""


class ParseError(DigraphError):
    pass


class InvalidVertex(DigraphError):
    pass


class BadPartition(DigraphError):
    pass


class LoopCreated(DigraphError):
    """Two adjacent vertices were placed in the same quotient block."""


class SymmetricPair(DigraphError):
    """Two quotient blocks have edges in both directions."""


class NotTripartite(DigraphError):
    pass


class NotTournament(DigraphError):
    pass


class SizeGuardExceeded(DigraphError):
    pass


class InvalidPartialMap(DigraphError):
    pass


class NotOneArcTransitive(DigraphError):
    pass


class ClassesNotIsomorphic(DigraphError):
    pass


class NotApplicable(DigraphError):
    pass


class NotEquivalence(DigraphError):
    pass


class NotCompleteMultipartite(DigraphError):
    pass


class NotPoset(DigraphError):
    pass


class EdgeAbsent(DigraphError):
    pass


class NotACycle(DigraphError):
    pass


class NotAWalk(DigraphError):
    pass
