"""Exception hierarchy shared by all modules."""


class TotaroError(ValueError):
    """Base class for every error raised by the library."""


class ZeroArgument(TotaroError):
    pass


class InvalidPolynomial(TotaroError):
    pass


class RamifiedPrime(TotaroError):
    pass


class BaseMismatch(TotaroError):
    pass


class InvalidClass(TotaroError):
    """Local invariants that do not describe a Brauer class."""


class SearchExhausted(TotaroError):
    """A bounded search found nothing. Raise the bound; this is not a proof of nonexistence."""


class Degenerate(TotaroError):
    pass


class RankMismatch(TotaroError):
    pass


class NonInvertibleEntry(TotaroError):
    pass


class EvenDegree(TotaroError):
    pass


class CoresNonzero(TotaroError):
    pass


class EvenIndex(TotaroError):
    pass


class UnsupportedIndex(TotaroError):
    pass


class InvalidSpec(TotaroError):
    pass
