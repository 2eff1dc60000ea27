"""Exception hierarchy shared by every module of the package."""


class TournamentError(ValueError):
    """Base class for all errors raised by tournament_lab."""


class ParseError(TournamentError):
    """Malformed tournament input (bad code, bad matrix, bad name)."""


class DuplicatePair(ParseError):
    pass


class MissingPair(ParseError):
    pass


class LoopArc(ParseError):
    pass


class LabelOutOfRange(ParseError):
    pass


class UnknownName(ParseError):
    pass


class ArcNotPresent(TournamentError):
    pass


class EmptySet(TournamentError):
    pass


class ArityMismatch(TournamentError):
    pass


class TooLarge(TournamentError):
    """Input exceeds a configured size cap."""


class TooSmall(TournamentError):
    """Quantity undefined for so few vertices."""


class BudgetExceeded(TournamentError):
    pass


class CacheCorrupt(TournamentError):
    pass


class UnknownPredicate(TournamentError):
    pass


class BadForm(TournamentError):
    """Unknown form identifier, bad parameter range or bad slot arity."""


class BadArity(BadForm):
    pass


class BadRange(BadForm):
    pass


class UnknownCheck(TournamentError):
    pass
