"""
Modified Bessel function K_2 and the Bessel series of the massive Casimir energy.

K_2 comes from the exponentially scaled K_0 and K_1 of scipy.special (Cephes
Chebyshev expansions) through the upward recurrence K_2 = K_0 + (2/z) K_1.
The integral oracle evaluates K_2(z) = int_0^inf exp(-z cosh t) cosh(2t) dt
with QUADPACK and shares no kernel with the main path.
"""

import logging
import math
from typing import Tuple

import numpy as np
from scipy import integrate, special

from .errors import ConvergenceError, DomainError, SeriesRangeError, UsageError
from .types import SeriesResult

logger = logging.getLogger(__name__)

# Beyond this argument K_2 is returned as exact zero instead of subnormal noise
K2_UNDERFLOW_THRESHOLD = 700.0
MAX_SERIES_TERMS = 10**8
_MAX_BLOCK = 1 << 16


def _check_argument(z: float) -> float:
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"K_2 argument must be finite, got {z}")
    if z <= 0:
        raise DomainError(f"K_2 argument must be positive, got {z}")
    return z


def k2_underflows(z: float) -> bool:
    """True when bessel_k2(z) is flushed to zero"""
    return _check_argument(z) > K2_UNDERFLOW_THRESHOLD


def bessel_k2_array(z: np.ndarray) -> np.ndarray:
    """Vectorized K_2 for positive arguments; entries above the threshold are 0"""
    z = np.asarray(z, dtype=float)
    out = np.zeros_like(z)
    mask = z <= K2_UNDERFLOW_THRESHOLD
    zz = z[mask]
    out[mask] = (special.k0e(zz) + 2.0 * special.k1e(zz) / zz) * np.exp(-zz)
    return out


def bessel_k2(z: float) -> float:
    """
    Modified Bessel function of the second kind of order 2.

    Args:
        z: Positive finite argument

    Returns:
        K_2(z), strictly positive and decreasing; exactly 0.0 for
        z > K2_UNDERFLOW_THRESHOLD

    Raises:
        DomainError: If z <= 0 or z is not finite
    """
    z = _check_argument(z)
    if z > K2_UNDERFLOW_THRESHOLD:
        logger.debug("K_2(%g) flushed to zero", z)
        return 0.0
    return float(bessel_k2_array(np.array([z]))[0])


def k2_quadrature(z: float, tol: float = 1e-12, limit: int = 500) -> Tuple[float, int]:
    """
    K_2(z) from its integral representation by adaptive quadrature.

    The integrand is scaled by exp(z) so it stays O(1) near t = 0; the scale is
    restored on return. The integration range ends where z (cosh t - 1) = 800
    and the peak of the integrand, sinh t = 2/z, is passed as a breakpoint.

    Args:
        z: Positive finite argument
        tol: Relative tolerance, 0 < tol < 1e-6
        limit: Maximum number of QUADPACK subintervals

    Raises:
        DomainError: If z is not a positive finite number
        UsageError: If tol is out of range
        ConvergenceError: If the estimated error exceeds tol * |result|
    """
    z = _check_argument(z)
    if not 0 < tol < 1e-6:
        raise UsageError(f"tol must lie in (0, 1e-6), got {tol}")

    # QUADPACK rejects relative tolerances below 50 machine epsilons
    epsrel = max(tol, 50.0 * np.finfo(float).eps)
    t_max = math.acosh(1.0 + 800.0 / z)
    t_peak = math.asinh(2.0 / z)

    def integrand(t: float) -> float:
        # cosh t - 1 written as 2 sinh^2(t/2) to keep small t exact
        return math.exp(-2.0 * z * math.sinh(0.5 * t) ** 2) * math.cosh(2.0 * t)

    points = [t_peak] if t_peak < t_max else None
    out = integrate.quad(
        integrand,
        0.0,
        t_max,
        points=points,
        epsabs=0.0,
        epsrel=epsrel,
        limit=limit,
        full_output=1,
    )
    value, abserr, info = out[0], out[1], out[2]
    subintervals = int(info.get("last", 0))
    logger.debug("K_2 oracle z=%g: %d subintervals, abserr=%g", z, subintervals, abserr)

    scale = math.exp(-z)
    if not abserr <= tol * abs(value):
        raise ConvergenceError(
            f"K_2 quadrature at z={z} reached relative error {abserr / abs(value):.3e} "
            f"above tol={tol}",
            best_estimate=value * scale,
            error_estimate=abserr * scale,
        )
    return value * scale, subintervals


def bessel_k2_integral_oracle(z: float, tol: float = 1e-12, limit: int = 500) -> float:
    """K_2(z) by adaptive quadrature; see k2_quadrature"""
    return k2_quadrature(z, tol, limit)[0]


def _signed_terms(n: np.ndarray, x: float, b: int) -> np.ndarray:
    terms = bessel_k2_array(n * x) / n**2
    if b:
        terms = np.where(n % 2 == 1, -terms, terms)
    return terms


def _check_series_args(x: float, b: int) -> Tuple[float, int]:
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"series argument x = 2 m L_p must be positive, got {x}")
    if b not in (0, 1):
        raise UsageError(f"b must be 0 (Dirichlet) or 1 (mixed), got {b}")
    return x, int(b)


def casimir_series(x: float, b: int, rel_tol: float = 1e-10) -> SeriesResult:
    """
    S(x, b) = sum_{n>=1} (-1)^(b n) n^-2 K_2(n x), summed until the tail bound
    drops below rel_tol * |partial sum|.

    The tail after term N is bounded by |T_{N+1}| / (1 - exp(-x)), using
    K_2(z + d) <= K_2(z) exp(-d) and the decrease of n^-2.

    Args:
        x: 2 m L_p, positive
        b: 0 for Dirichlet, 1 for mixed boundary conditions
        rel_tol: Target relative accuracy, 0 < rel_tol <= 1e-8

    Returns:
        SeriesResult with the partial sum, the number of terms and the tail bound

    Raises:
        SeriesRangeError: If the term budget ceil(40/x) + 64 exceeds 1e8
    """
    x, b = _check_series_args(x, b)
    if not 0 < rel_tol <= 1e-8:
        raise UsageError(f"rel_tol must lie in (0, 1e-8], got {rel_tol}")

    n_max = math.ceil(40.0 / x) + 64
    if n_max > MAX_SERIES_TERMS:
        raise SeriesRangeError(
            f"x = {x:g} needs {n_max} series terms (budget {MAX_SERIES_TERMS}); "
            "use the massless limit instead"
        )

    geometric = 1.0 / -math.expm1(-x)
    total = 0.0
    start = 1
    block = 64
    while start <= n_max:
        stop = min(start + block - 1, n_max)
        # one extra term bounds the tail after the last term of the block
        n = np.arange(start, stop + 2, dtype=float)
        terms = _signed_terms(n, x, b)
        partial = total + np.cumsum(terms[:-1])
        tails = np.abs(terms[1:]) * geometric
        done = tails <= rel_tol * np.abs(partial)
        if done.any():
            j = int(np.argmax(done))
            logger.debug(
                "casimir_series x=%g b=%d: %d terms, tail bound %.3e", x, b, start + j, tails[j]
            )
            return SeriesResult(value=float(partial[j]), terms_used=start + j, tail_bound=float(tails[j]))
        total = float(partial[-1])
        start = stop + 1
        block = min(2 * block, _MAX_BLOCK)

    tail = abs(float(_signed_terms(np.array([n_max + 1.0]), x, b)[0])) * geometric
    logger.warning("casimir_series x=%g exhausted its %d-term budget", x, n_max)
    return SeriesResult(value=total, terms_used=n_max, tail_bound=tail)


def casimir_series_partial(x: float, b: int, n_terms: int) -> float:
    """Plain partial sum of S(x, b) with exactly n_terms terms"""
    x, b = _check_series_args(x, b)
    if n_terms < 1:
        raise UsageError(f"n_terms must be >= 1, got {n_terms}")
    n = np.arange(1, n_terms + 1, dtype=float)
    return float(np.sum(_signed_terms(n, x, b)))
