"""Domain error hierarchy.

Every failure that stems from mathematical or protocol-level input (as
opposed to programmer error) derives from CryptocombError so callers and
the CLI can map the whole family to a single exit code.
"""


class CryptocombError(Exception):
    """Base class for all domain errors raised by this package."""


class Cancelled(CryptocombError):
    """A long-running computation observed its cancellation signal."""


# braid words


class StrandMismatch(CryptocombError):
    """Two braid words on different strand counts were combined."""


class NoMatch(CryptocombError):
    """A rewriting rule does not apply at the requested position."""


class IllegalDestabilize(CryptocombError):
    """The word does not end with a removable top-strand crossing."""


# polynomials and key derivation


class NotDivisible(CryptocombError):
    """Exact Laurent division left a nonzero remainder."""


class HalfIntegerExponents(CryptocombError):
    """Key derivation needs integer powers of t but found odd powers of q."""


class NotAKnot(CryptocombError):
    """The braid closure has more than one component."""


class TooManyStrands(CryptocombError):
    """The braid exceeds the configured strand cap for trace computation."""


# key agreement


class KeyMismatch(CryptocombError):
    """Internal consistency failure: the parties derived different keys."""


# succession probabilities


class DegenerateEvidence(CryptocombError):
    """All posterior weights vanished; the observation has probability zero."""


class KExceedsPopulation(CryptocombError):
    """More draws were requested than the urn can supply without replacement."""


class NoConditioningEvents(CryptocombError):
    """No simulated trial satisfied the conditioning event."""


# push game


class MalformedRegion(CryptocombError):
    """A region has the wrong arity or references an unknown vertex."""


class NotSimplexGraph(MalformedRegion):
    """The vertex/region structure does not describe a simplex graph."""


class BadRegion(CryptocombError):
    """A push referenced a region index outside the board."""


class ImproperColoring(CryptocombError):
    """The supplied coloring does not give every region all n+1 colors."""


class HypothesesNotMet(CryptocombError):
    """A closed-form count was requested outside its hypotheses."""


class TooMany(CryptocombError):
    """Enumeration would exceed the caller's cap."""


# graph entropy


class ZeroPsi(CryptocombError):
    """Total connectedness is zero, so the entropy distribution is undefined."""
