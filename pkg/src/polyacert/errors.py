"""Exception types shared across the package.

Every certified code path fails loudly rather than degrade silently: a
bracket that cannot be verified, a floor that cannot be separated from an
integer boundary, or a certification step with a non-positive margin each
raise a dedicated exception carrying the offending data.
"""
from __future__ import annotations


class PolyacertError(Exception):
    """Base class for all package-specific errors."""


class NegativeInputError(PolyacertError, ValueError):
    """Square-root bracket requested for a negative radicand."""


class DomainError(PolyacertError, ValueError):
    """Argument outside the documented domain of an operation."""


class BadDimensionError(DomainError):
    """Dimension argument below the supported minimum."""


class GuessFailedError(PolyacertError):
    """Bracket verification kept failing after all retry attempts.

    Verification never trusts the numeric guess, so this only signals that
    the guess was persistently off by more than the accuracy parameter.
    """


class UnresolvedFloorError(PolyacertError):
    """A floor term could not be separated from an integer boundary.

    Attributes:
        abscissa: where on the curve the term was evaluated
        interval: the last (tightest) rational bracket tried
    """

    def __init__(self, abscissa, interval, message: str | None = None):
        self.abscissa = abscissa
        self.interval = interval
        super().__init__(
            message
            or f"floor unresolved at abscissa {abscissa}: bracket {interval} "
            "straddles an integer after all refinements"
        )


class HypothesisViolatedError(PolyacertError, ValueError):
    """A tabulated function failed one of the counting-theorem hypotheses."""

    def __init__(self, predicate: str, detail: str = ""):
        self.predicate = predicate
        super().__init__(f"hypothesis violated: {predicate}" + (f" ({detail})" if detail else ""))


class M0ExceedsBError(PolyacertError, ValueError):
    """The quarter-level crossing index exceeds the domain endpoint."""


class IrrationalApertureError(PolyacertError, ValueError):
    """Certified sector counting needs the aperture as an exact rational multiple of pi."""


class ScanAmbiguousError(PolyacertError):
    """Two sign changes landed in one scan cell even after step halving."""


class AccuracyLossError(PolyacertError):
    """A floating-point special-function evaluation is not trustworthy."""


class EpsTooCoarseError(PolyacertError, ValueError):
    """Accuracy parameter too coarse for the requested construction."""


class StepFailedError(PolyacertError):
    """Certification step produced a non-positive margin.

    Attributes:
        lam: spectral parameter of the failing step
        e_lower: the non-positive certified margin
        partial: the certificate accumulated before the failure
    """

    def __init__(self, lam, e_lower, partial=None):
        self.lam = lam
        self.e_lower = e_lower
        self.partial = partial
        super().__init__(f"certification failed at lambda={lam}: margin {e_lower} <= 0")


class StallError(PolyacertError):
    """Certification step size stayed non-positive after all eps retries."""
