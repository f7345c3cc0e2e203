"""Exception hierarchy. Every class carries a stable ``code`` used in CLI error JSON."""

from typing import Optional


class CasimirError(Exception):
    """Base class for all casimir_drag errors"""

    code = "CASIMIR_ERROR"

    def to_dict(self) -> dict:
        return {"error": {"code": self.code, "message": str(self)}}


class DomainError(CasimirError, ValueError):
    """Input outside the domain of a formula"""

    code = "DOMAIN_ERROR"


class MetricInvariantError(DomainError):
    """A LocalMetric component violates signature or observer conditions"""

    code = "METRIC_INVARIANT"

    def __init__(self, message: str, component: Optional[str] = None):
        super().__init__(message)
        self.component = component


class ObserverNotTimelikeError(DomainError):
    """Apparatus velocity outside the admissible interval"""

    code = "OBSERVER_NOT_TIMELIKE"


class CoordinatePatchError(DomainError):
    """Cylinder coordinates invalid at the requested radius"""

    code = "COORDINATE_PATCH_INVALID"


class HorizonError(DomainError):
    """Radius at or inside the outer Kerr horizon"""

    code = "INSIDE_HORIZON"


class ModeBranchError(DomainError):
    """Mode outside the allowed (positive-norm) branch"""

    code = "MODE_OUTSIDE_ALLOWED_BRANCH"


class SeriesRangeError(CasimirError, ArithmeticError):
    """Bessel series argument too small for direct summation"""

    code = "SERIES_RANGE"


class ConvergenceError(CasimirError, RuntimeError):
    """Adaptive quadrature missed its tolerance; carries the best estimate"""

    code = "NO_CONVERGENCE"

    def __init__(self, message: str, best_estimate: float, error_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class UsageError(CasimirError, ValueError):
    """Bad arguments or configuration"""

    code = "USAGE"
