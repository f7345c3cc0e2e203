import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Dict, Any, Tuple
from enum import Enum

from .errors import MetricInvariantError, UsageError


class Orientation(Enum):
    """Direction normal to the plates"""

    X = "x"  # along the drag direction
    Y = "y"  # radial

    @property
    def g_xi(self) -> int:
        """0 for the x-orientation, 1 for the y-orientation"""
        return 0 if self is Orientation.X else 1


class BoundaryCondition(Enum):
    """Boundary conditions imposed on the plates"""

    DIRICHLET = "dirichlet"  # b = 0
    MIXED = "mixed"  # b = 1, Dirichlet on one plate and Neumann on the other

    @property
    def b(self) -> int:
        return 0 if self is BoundaryCondition.DIRICHLET else 1


class LengthMode(Enum):
    """How plate_separation_L is interpreted"""

    COORDINATE = "coordinate"
    PROPER = "proper"


class Regime(Enum):
    """Sign classification of the Casimir energy"""

    ATTRACTIVE = "Attractive"
    REPULSIVE = "Repulsive"
    NULL = "Null"
    FORBIDDEN = "Forbidden"


# The regime label of a background/orientation pair is just the enum value
RegimeLabel = Regime


class BackgroundType(Enum):
    """Supported spacetimes"""

    FLAT = "flat"
    CYLINDER = "cylinder"
    KERR = "kerr"


class UnitSystem(Enum):
    """Unit system of CLI inputs and outputs; computation is always geometric"""

    GEOMETRIC = "geometric"
    SI = "si"


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise MetricInvariantError(f"{name} must be finite, got {value}", component=name)


@dataclass(frozen=True)
class LocalMetric:
    """
    Comoving-frame metric components of the apparatus frame.

    Signature -2: g_tt > 0 for an allowed observer and the spatial diagonal is
    negative. Only g_tx couples time with the drag direction x.
    """

    g_tt: float
    g_tx: float
    g_xx: float
    g_yy: float
    g_zz: float

    def __post_init__(self):
        _require_finite(
            g_tt=self.g_tt, g_tx=self.g_tx, g_xx=self.g_xx, g_yy=self.g_yy, g_zz=self.g_zz
        )
        if not self.g_tt > 0:
            raise MetricInvariantError(
                f"g_tt must be positive for an allowed observer, got {self.g_tt}",
                component="g_tt",
            )
        for name in ("g_xx", "g_yy", "g_zz"):
            value = getattr(self, name)
            if not value < 0:
                raise MetricInvariantError(
                    f"{name} must be negative (signature -2), got {value}",
                    component=name,
                )

    @classmethod
    def minkowski(cls) -> "LocalMetric":
        return cls(1.0, 0.0, -1.0, -1.0, -1.0)

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.g_tt, self.g_tx, self.g_xx, self.g_yy, self.g_zz)


@dataclass(frozen=True)
class CavityConfig:
    """Configuration of the parallel-plate cavity"""

    orientation: Orientation = Orientation.X
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    mass: float = 0.0  # inverse length, geometric units
    plate_separation_L: float = 1.0
    length_mode: LengthMode = LengthMode.COORDINATE

    def __post_init__(self):
        # Accept plain strings the way the CLI and dict configs pass them
        if not isinstance(self.orientation, Orientation):
            object.__setattr__(self, "orientation", Orientation(str(self.orientation).lower()))
        if not isinstance(self.bc, BoundaryCondition):
            object.__setattr__(self, "bc", _parse_bc(self.bc))
        if not isinstance(self.length_mode, LengthMode):
            object.__setattr__(self, "length_mode", LengthMode(str(self.length_mode).lower()))
        if not (math.isfinite(self.mass) and self.mass >= 0):
            raise UsageError(f"mass must be a finite non-negative number, got {self.mass}")
        if not (math.isfinite(self.plate_separation_L) and self.plate_separation_L > 0):
            raise UsageError(
                f"plate_separation_L must be positive, got {self.plate_separation_L}"
            )

    @property
    def b(self) -> int:
        return self.bc.b

    @property
    def g_xi(self) -> int:
        return self.orientation.g_xi


def _parse_bc(value: Any) -> BoundaryCondition:
    if value in (0, "0"):
        return BoundaryCondition.DIRICHLET
    if value in (1, "1"):
        return BoundaryCondition.MIXED
    return BoundaryCondition(str(value).lower())


@dataclass(frozen=True)
class FlatParams:
    """Minkowski background (no parameters)"""


@dataclass(frozen=True)
class CylinderParams:
    """Cylindrically symmetric source with constant linear momentum"""

    k: float  # source linear-momentum parameter
    r: float  # cylindrical radius
    v: float = 0.0  # apparatus velocity along the symmetry axis

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.k, self.r, self.v)):
            raise UsageError("cylinder parameters must be finite")
        if not self.r > 0:
            raise UsageError(f"r must be positive (metric singular at r = 0), got {self.r}")

    @property
    def q_minus(self) -> float:
        return (1.0 - 2.0 * math.sqrt(1.0 + 3.0 * self.k**2)) / 3.0

    @property
    def q_plus(self) -> float:
        return (1.0 + 2.0 * math.sqrt(1.0 + 3.0 * self.k**2)) / 3.0


@dataclass(frozen=True)
class KerrParams:
    """Equatorial circular orbit in Kerr geometry (theta fixed to pi/2)"""

    M: float
    a: float
    r: float
    Omega: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.M, self.a, self.r, self.Omega)):
            raise UsageError("Kerr parameters must be finite")
        if not self.M > 0:
            raise UsageError(f"M must be positive, got {self.M}")
        if not self.r > 0:
            raise UsageError(f"r must be positive, got {self.r}")
        if abs(self.a) > self.M:
            raise UsageError(f"|a| must not exceed M (got a={self.a}, M={self.M})")


@dataclass(frozen=True)
class SeriesResult:
    """Truncated Bessel series with an absolute bound on the neglected tail"""

    value: float
    terms_used: int
    tail_bound: float


@dataclass(frozen=True)
class EnergyResult:
    """Casimir energy density of one cavity in one local frame"""

    energy_density: float
    flat_reference_Em: float
    prefactor: float  # metric-dependent factor multiplying E_m
    regime: Regime
    proper_length: float = 0.0
    sign_flipped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy_density": self.energy_density,
            "flat_reference_Em": self.flat_reference_Em,
            "prefactor": self.prefactor,
            "proper_length": self.proper_length,
            "regime": self.regime.value,
            "sign_flipped": self.sign_flipped,
        }


@dataclass(frozen=True)
class CriticalSet:
    """
    Critical velocities of a background: drag, admissibility bounds, zero-energy
    velocities of the y-orientation and, where defined, the unit sign-flip
    velocities (cylinder) and circular geodesics (Kerr).
    """

    drag: float
    bounds: Tuple[float, float]
    zero_energy: Tuple[float, float]
    sign_flip_unit: Optional[Tuple[float, float]] = None
    geodesic: Optional[Tuple[float, float]] = None

    def is_nested(self) -> bool:
        lo, hi = self.bounds
        z_lo, z_hi = self.zero_energy
        return lo < z_lo < self.drag < z_hi < hi

    def to_dict(self) -> Dict[str, float]:
        data = {
            "drag": self.drag,
            "bound_minus": self.bounds[0],
            "bound_plus": self.bounds[1],
            "zero_minus": self.zero_energy[0],
            "zero_plus": self.zero_energy[1],
        }
        if self.sign_flip_unit is not None:
            data["flip_minus"], data["flip_plus"] = self.sign_flip_unit
        if self.geodesic is not None:
            data["geo_minus"], data["geo_plus"] = self.geodesic
        return data


@dataclass(frozen=True)
class OracleReport:
    """Main-path value against an independent oracle"""

    quantity_name: str
    main_value: float
    oracle_value: float
    relative_gap: float
    budget: int  # terms or quadrature subintervals
    tolerance: float = 1e-9

    @property
    def passed(self) -> bool:
        return math.isfinite(self.relative_gap) and self.relative_gap <= self.tolerance


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a parameter sweep"""

    r: float
    omega_or_v: float
    allowed: bool
    eps_x: Optional[float] = None
    eps_y: Optional[float] = None
    regime_x: Regime = Regime.FORBIDDEN
    regime_y: Regime = Regime.FORBIDDEN


@dataclass
class LabConfig:
    """Configuration for the CasimirLab instance"""

    null_tol: float = 1e-9  # |energy| <= null_tol * |E_m| is labelled Null
    admissibility_margin: float = 1e-12  # relative margin from the velocity bounds
    series_rel_tol: float = 1e-10
    massless_crossover: float = 1e-6  # 2 m L_p below this uses the massless form; 0 disables
    default_mass: float = 0.0
    default_plate_separation: float = 1.0
    workers: int = 1  # sweep parallelism
    log_level: str = "WARNING"


@dataclass
class LabResponse:
    """Response from the lab"""

    result: EnergyResult
    metadata: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class WeakFieldBenchmark:
    """Slowly rotating compact star seen from a co-rotating surface apparatus"""

    M: float  # geometric units (m)
    a: float  # m
    r: float  # m
    Omega: float  # 1/m
    x: float  # 1 - R
    R: float
    energy_ratio_y: float  # eps_y / E_m at fixed proper separation
    weak_field_ok: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SweepGrid:
    """
    Rectangular (r, velocity) grid over a dragging background.

    velocity is Omega for Kerr and v for the cylinder. Leaving both velocity
    limits as None spans the admissible band of each r.
    """

    background: BackgroundType
    r_min: float
    r_max: float
    r_steps: int
    velocity_steps: int
    velocity_min: Optional[float] = None
    velocity_max: Optional[float] = None
    M: float = 1.0  # Kerr
    a: float = 0.0  # Kerr
    k: float = 0.0  # cylinder
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    mass: float = 0.0
    plate_separation_L: float = 1.0
    length_mode: LengthMode = LengthMode.COORDINATE

    def __post_init__(self):
        if not isinstance(self.background, BackgroundType):
            object.__setattr__(self, "background", BackgroundType(str(self.background).lower()))
        if not isinstance(self.bc, BoundaryCondition):
            object.__setattr__(self, "bc", _parse_bc(self.bc))
        if not isinstance(self.length_mode, LengthMode):
            object.__setattr__(self, "length_mode", LengthMode(str(self.length_mode).lower()))
        if self.background is BackgroundType.FLAT:
            raise UsageError("sweeps need a dragging background (cylinder or kerr)")
        if self.r_steps < 2 or self.velocity_steps < 2:
            raise UsageError(
                f"step counts must be >= 2, got r_steps={self.r_steps}, "
                f"velocity_steps={self.velocity_steps}"
            )
        if not 0 < self.r_min <= self.r_max:
            raise UsageError(f"need 0 < r_min <= r_max, got [{self.r_min}, {self.r_max}]")
        if (self.velocity_min is None) != (self.velocity_max is None):
            raise UsageError("give both velocity limits or neither (auto band)")
        if self.velocity_min is not None and not self.velocity_min <= self.velocity_max:
            raise UsageError(
                f"velocity_min must not exceed velocity_max, got "
                f"[{self.velocity_min}, {self.velocity_max}]"
            )

    @property
    def auto_band(self) -> bool:
        return self.velocity_min is None

    def cavity(self, orientation: Orientation) -> CavityConfig:
        return CavityConfig(
            orientation=orientation,
            bc=self.bc,
            mass=self.mass,
            plate_separation_L=self.plate_separation_L,
            length_mode=self.length_mode,
        )
