"""Exception and warning types shared across the package."""


class CyclovortexError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CyclovortexError, ValueError):
    """A value violates a documented invariant (raised at construction or parse time)."""


class ZeroFieldError(CyclovortexError):
    """The cyclotron frequency is zero; no finite cyclotron orbit exists."""


class InvalidStepError(CyclovortexError, ValueError):
    """Integrator time step is not a positive finite number."""


class BadDistributionError(CyclovortexError, ValueError):
    """An electron phase distribution does not satisfy its constraints."""


class DegenerateError(CyclovortexError, ValueError):
    """A geometric quantity is undefined for the given configuration."""


class ParseError(CyclovortexError, ValueError):
    """A config document is malformed (carries line/key diagnostics in the message)."""


class EmptyBinWarning(UserWarning):
    """Issued when radial-profile bins receive no samples; their current is reported as 0."""
