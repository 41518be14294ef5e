"""Domain errors shared across the package.

Every expected failure raises a subclass of :class:`PismetricError`; the CLI
and the HTTP service map these to exit code 1 / status 400 with the class
name in the message. Anything else escaping the library is a bug.
"""


class PismetricError(Exception):
    """Base class for all domain errors."""


class RingSyntaxError(PismetricError):
    """Ring description text could not be parsed."""


class NotChainRing(PismetricError):
    """A Z<n> token names a ring that is not a local chain ring.

    Z_n for composite non-prime-power n is a product of smaller rings; the
    caller must spell out the factored form.
    """


class DisconnectedRing(PismetricError):
    """The product of exactly two fields: its graph is disconnected."""


class EmptyGraph(PismetricError):
    """A single field has no nonzero proper ideal, hence no vertices."""


class DisconnectedGraph(PismetricError):
    """An imported plain graph is disconnected; distances are undefined."""


class GraphFormatError(PismetricError):
    """Malformed graph document (JSON import)."""


class NotCovered(PismetricError):
    """No closed-form result applies to the given ring."""


class TooLarge(PismetricError):
    """Instance exceeds a hard size cap (brute-force oracle)."""
