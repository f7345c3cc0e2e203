"""
Independent verification paths.

Each oracle avoids the numerical kernel of the path it checks: quadrature
instead of Chebyshev expansions for K_2, fixed-N sums instead of adaptive
truncation, numpy.linalg inversion instead of the analytic inverse, and
numerical differentiation of Boyer-Lindquist components instead of the
closed-form circular geodesics.
"""

import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from .backgrounds import (
    cylinder_drag_velocity,
    cylinder_local_metric,
    kerr_angular_velocity_bounds,
    kerr_drag_angular_velocity,
    kerr_equatorial_local_metric,
    kerr_horizon_radius,
)
from .casimir import casimir_energy_density, casimir_energy_flat_massive
from .errors import CasimirError, DomainError, UsageError
from .geometry import inverse_components
from .regimes import (
    cylinder_energy_x,
    cylinder_energy_y,
    kerr_critical_set,
    kerr_energy_x,
    kerr_energy_y,
    neutron_star_benchmark,
)
from .specfun import bessel_k2, k2_quadrature
from .types import (
    BoundaryCondition,
    CavityConfig,
    CylinderParams,
    KerrParams,
    LocalMetric,
    OracleReport,
    Orientation,
)

logger = logging.getLogger(__name__)

GAP_FLOOR = 1e-300
K2_ORACLE_TOL = 1e-11
NEUTRON_STAR_X = 2.3e-5
# Fraction of the admissible half-width kept clear by random samples
SAMPLE_MARGIN = 0.2
# Minimum |3 R^2 - 2| of a sample, away from the zero-energy velocities
SAMPLE_ZERO_GAP = 0.05
INVERSE_COMPONENTS = ("tt", "tx", "xx", "yy", "zz")
# Terms beyond n x > 745 underflow to exactly zero
_EXP_CUTOFF = 745.0


def relative_gap(main_value: float, oracle_value: float) -> float:
    return abs(main_value - oracle_value) / max(abs(oracle_value), GAP_FLOOR)


def make_report(
    name: str, main_value: float, oracle_value: float, budget: int, tolerance: float
) -> OracleReport:
    return OracleReport(
        quantity_name=name,
        main_value=main_value,
        oracle_value=oracle_value,
        relative_gap=relative_gap(main_value, oracle_value),
        budget=budget,
        tolerance=tolerance,
    )


def em_bruteforce(
    m: float,
    L_p: float,
    b: int,
    N: int,
    k2: Optional[Callable[[float], float]] = None,
) -> float:
    """
    Fixed-N partial sum of the massive flat Casimir energy,
    -m^2 / (8 pi^2 L_p^2) sum_{n=1}^{N} (-1)^(b n) n^-2 K_2(2 m L_p n).

    Args:
        m: Field mass, positive
        L_p: Proper separation, positive
        b: 0 or 1
        N: Number of terms, N >= 1
        k2: K_2 implementation; defaults to the quadrature oracle

    Returns:
        The partial sum, accumulated with math.fsum
    """
    if int(N) != N or N < 1:
        raise UsageError(f"N must be a positive integer, got {N}")
    if not (m > 0 and L_p > 0):
        raise UsageError(f"m and L_p must be positive, got m={m}, L_p={L_p}")
    if b not in (0, 1):
        raise UsageError(f"b must be 0 or 1, got {b}")
    if k2 is None:
        k2 = lambda z: k2_quadrature(z, K2_ORACLE_TOL)[0]  # noqa: E731

    x = 2.0 * m * L_p
    terms = []
    for n in range(1, int(N) + 1):
        if n * x > _EXP_CUTOFF:
            break
        sign = -1.0 if (b and n % 2 == 1) else 1.0
        terms.append(sign * k2(n * x) / n**2)
    return -(m**2) / (8.0 * math.pi**2 * L_p**2) * math.fsum(terms)


def metric_inverse_oracle(metric: LocalMetric) -> Tuple[float, float, float, float, float]:
    """
    Numerical inverse (g^tt, g^tx, g^xx, g^yy, g^zz) from numpy.linalg.inv.

    Raises:
        DomainError: If the (t, x) block is singular
    """
    block = np.array([[metric.g_tt, metric.g_tx], [metric.g_tx, metric.g_xx]])
    try:
        inv = np.linalg.inv(block)
    except np.linalg.LinAlgError as e:
        raise DomainError(f"singular (t, x) metric block: {e}")
    diag = np.linalg.inv(np.diag([metric.g_yy, metric.g_zz]))
    return (
        float(inv[0, 0]),
        float(inv[0, 1]),
        float(inv[1, 1]),
        float(diag[0, 0]),
        float(diag[1, 1]),
    )


def _lagrangian_derivatives(M: float, a: float, r: float) -> Tuple[float, float, float]:
    """Five-point radial derivatives of the equatorial g_tt, 2 g_tphi and g_phiphi"""
    h = 1e-3 * r

    def components(rr: float) -> np.ndarray:
        return np.array(
            [1.0 - 2.0 * M / rr, 4.0 * M * a / rr, -(rr**2 + a**2 + 2.0 * M * a**2 / rr)]
        )

    d = (
        -components(r + 2 * h) + 8 * components(r + h) - 8 * components(r - h) + components(r - 2 * h)
    ) / (12.0 * h)
    return float(d[0]), float(d[1]), float(d[2])


def geodesic_oracle(M: float, a: float, r: float) -> Tuple[float, float]:
    """
    Circular equatorial geodesic angular velocities as the roots of
    d/dr (g_tt + 2 Omega g_tphi + Omega^2 g_phiphi) = 0, with the radial
    derivatives taken numerically. Returns (retrograde, prograde).
    """
    d_tt, d_tphi, d_phiphi = _lagrangian_derivatives(M, a, r)
    roots = np.roots([d_phiphi, d_tphi, d_tt])
    if np.iscomplexobj(roots) and np.any(np.abs(roots.imag) > 0):
        raise DomainError(f"no circular geodesic at r={r}")
    lo, hi = sorted(float(x) for x in np.real(roots))
    return lo, hi


def geodesic_residual(M: float, a: float, r: float, Omega: float) -> float:
    """Circular-orbit condition at Omega, normalized by the size of its terms"""
    d_tt, d_tphi, d_phiphi = _lagrangian_derivatives(M, a, r)
    value = d_tt + Omega * d_tphi + Omega**2 * d_phiphi
    scale = abs(d_tt) + abs(Omega * d_tphi) + abs(Omega**2 * d_phiphi)
    return abs(value) / scale


def _relative_shift(rng: np.random.Generator) -> float:
    """(velocity - drag) / half-width; R^2 = 1 - t^2 for both backgrounds"""
    while True:
        t = rng.uniform(-1.0 + SAMPLE_MARGIN, 1.0 - SAMPLE_MARGIN)
        if abs(1.0 - 3.0 * t**2) >= SAMPLE_ZERO_GAP:
            return t


def sample_cylinder_params(rng: np.random.Generator) -> CylinderParams:
    """Random admissible cylinder point with cos(2k ln r) > 0.2"""
    while True:
        k = rng.uniform(-1.0, 1.0)
        r = rng.uniform(0.5, 3.0)
        if math.cos(2.0 * k * math.log(r)) > 0.2:
            break
    v_d = cylinder_drag_velocity(k, r)
    half_width = math.sqrt(v_d**2 + 1.0)
    v = v_d + _relative_shift(rng) * half_width
    return CylinderParams(k=k, r=r, v=v)


def sample_kerr_params(rng: np.random.Generator) -> KerrParams:
    """Random admissible equatorial orbit between 1.2 and 5 horizon radii"""
    M = rng.uniform(0.5, 2.0)
    a = rng.uniform(-0.99, 0.99) * M
    r = kerr_horizon_radius(M, a) * rng.uniform(1.2, 5.0)
    lo, hi = kerr_angular_velocity_bounds(M, a, r)
    omega_d = kerr_drag_angular_velocity(M, a, r)
    Omega = omega_d + _relative_shift(rng) * 0.5 * (hi - lo)
    return KerrParams(M=M, a=a, r=r, Omega=Omega)


def sample_cavity(rng: np.random.Generator, orientation: Orientation) -> CavityConfig:
    mass = rng.uniform(0.1, 1.0) if rng.uniform() < 0.5 else 0.0
    return CavityConfig(
        orientation=orientation,
        bc=BoundaryCondition.MIXED if rng.uniform() < 0.5 else BoundaryCondition.DIRICHLET,
        mass=mass,
        plate_separation_L=rng.uniform(0.5, 2.0),
    )


def _safe(name: str, check: Callable[[], OracleReport]) -> OracleReport:
    try:
        return check()
    except CasimirError as e:
        logger.error("oracle check %s raised %s: %s", name, e.code, e)
        return OracleReport(name, math.nan, math.nan, math.inf, 0, 0.0)


def _sample_reports(seed_seq: np.random.SeedSequence, index: int) -> List[OracleReport]:
    rng = np.random.default_rng(seed_seq)
    reports: List[OracleReport] = []

    def k2_check() -> OracleReport:
        z = 10.0 ** rng.uniform(-6.0, math.log10(50.0))
        value, subintervals = k2_quadrature(z, K2_ORACLE_TOL)
        return make_report(f"bessel_k2[{index}]", bessel_k2(z), value, subintervals, 1e-10)

    def em_check() -> OracleReport:
        x = 2.0 * rng.uniform(0.25, 2.0)
        L_p = rng.uniform(0.5, 2.0)
        b = int(rng.integers(0, 2))
        m = x / (2.0 * L_p)
        n_terms = math.ceil(60.0 / x) + 10
        main = casimir_energy_flat_massive(m, L_p, b)
        return make_report(f"flat_massive_Em[{index}]", main, em_bruteforce(m, L_p, b, n_terms), n_terms, 1e-9)

    def cylinder_check(orientation: Orientation) -> OracleReport:
        params = sample_cylinder_params(rng)
        cavity = sample_cavity(rng, orientation)
        closed = cylinder_energy_x if orientation is Orientation.X else cylinder_energy_y
        main = closed(params.k, params.r, params.v, cavity)
        generic = casimir_energy_density(cylinder_local_metric(params), cavity).energy_density
        return make_report(f"cylinder_eps_{orientation.value}[{index}]", main, generic, 0, 1e-12)

    def kerr_check(orientation: Orientation) -> OracleReport:
        params = sample_kerr_params(rng)
        cavity = sample_cavity(rng, orientation)
        closed = kerr_energy_x if orientation is Orientation.X else kerr_energy_y
        main = closed(params, cavity)
        generic = casimir_energy_density(kerr_equatorial_local_metric(params), cavity).energy_density
        return make_report(f"kerr_eps_{orientation.value}[{index}]", main, generic, 0, 1e-12)

    def inverse_check() -> OracleReport:
        params = sample_kerr_params(rng)
        metric = kerr_equatorial_local_metric(params)
        analytic = inverse_components(metric)
        numeric = metric_inverse_oracle(metric)
        gaps = [relative_gap(c, o) for c, o in zip(analytic, numeric)]
        i = int(np.argmax(gaps))
        name = INVERSE_COMPONENTS[i]
        return make_report(f"metric_inverse_{name}[{index}]", analytic[i], numeric[i], 2, 1e-12)

    def geodesic_check() -> OracleReport:
        params = sample_kerr_params(rng)
        critical = kerr_critical_set(params.M, params.a, params.r)
        oracle = geodesic_oracle(params.M, params.a, params.r)
        gaps = [relative_gap(c, o) for c, o in zip(critical.geodesic, oracle)]
        i = int(np.argmax(gaps))
        return make_report(f"kerr_geodesic[{index}]", critical.geodesic[i], oracle[i], 5, 1e-10)

    def neutron_star_check() -> OracleReport:
        bench = neutron_star_benchmark()
        return make_report(f"neutron_star_x[{index}]", bench.x, NEUTRON_STAR_X, 0, 0.3)

    reports.append(_safe("bessel_k2", k2_check))
    reports.append(_safe("flat_massive_Em", em_check))
    for orientation in Orientation:
        reports.append(_safe("cylinder_eps", lambda: cylinder_check(orientation)))
        reports.append(_safe("kerr_eps", lambda: kerr_check(orientation)))
    reports.append(_safe("metric_inverse", inverse_check))
    reports.append(_safe("kerr_geodesic", geodesic_check))
    reports.append(_safe("neutron_star_x", neutron_star_check))
    return reports


def verify_all(seed: int = 0, samples: int = 10, workers: int = 1) -> List[OracleReport]:
    """
    Run every dual-path check on deterministic pseudo-random admissible inputs.

    Samples draw from independent child streams of SeedSequence(seed), so the
    reports do not depend on the worker count.

    Args:
        seed: Root seed
        samples: Number of samples, >= 1
        workers: joblib workers

    Returns:
        Reports ordered by sample index, then by check
    """
    if int(samples) != samples or samples < 1:
        raise UsageError(f"samples must be a positive integer, got {samples}")
    children = np.random.SeedSequence(seed).spawn(int(samples))
    if workers > 1:
        blocks = Parallel(n_jobs=workers)(
            delayed(_sample_reports)(child, i) for i, child in enumerate(children)
        )
    else:
        blocks = [_sample_reports(child, i) for i, child in enumerate(children)]
    reports = [report for block in blocks for report in block]
    failed = [r.quantity_name for r in reports if not r.passed]
    if failed:
        logger.warning("%d of %d oracle checks failed: %s", len(failed), len(reports), ", ".join(failed))
    return reports
