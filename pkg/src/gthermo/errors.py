"""Exception hierarchy for gthermo."""


class GThermoError(Exception):
    """Base class for all gthermo errors."""


class NonPhysical(GThermoError):
    """A covariance matrix violates the uncertainty bound (d_min < 1/2)."""


class NumericalDomain(GThermoError):
    """An input lies outside the numerical domain of a formula."""


class DomainError(GThermoError):
    """A parameter is outside its declared range."""


class CorrelationBoundViolation(DomainError):
    """A correlation amplitude exceeds the physicality bound of its family."""


class UnknownScenario(GThermoError):
    """No closed-form predictor is registered under the requested tag."""


class CoherentSystemSignal(GThermoError):
    """Work extraction requires a system mode with zero coherent signal."""


class TruncationOverflow(GThermoError):
    """The Fock-space cutoff cap was reached before the tail criterion."""


class EnvelopeExceeded(GThermoError):
    """Inputs are outside the validated operating envelope of the Fock oracle."""


class DegenerateEntropy(GThermoError):
    """An entropy increment is too small to support a finite-difference ratio."""
