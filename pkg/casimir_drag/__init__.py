from .lab import CasimirLab
from .types import (
    BackgroundType,
    BoundaryCondition,
    CavityConfig,
    CriticalSet,
    CylinderParams,
    EnergyResult,
    FlatParams,
    KerrParams,
    LabConfig,
    LabResponse,
    LengthMode,
    LocalMetric,
    OracleReport,
    Orientation,
    Regime,
    RegimeLabel,
    SeriesResult,
    SweepGrid,
    SweepRow,
    UnitSystem,
    WeakFieldBenchmark,
)
from .errors import (
    CasimirError,
    ConvergenceError,
    CoordinatePatchError,
    DomainError,
    HorizonError,
    MetricInvariantError,
    ModeBranchError,
    ObserverNotTimelikeError,
    SeriesRangeError,
    UsageError,
)
from .config import load_config_from_env
from .casimir import (
    casimir_energy_density,
    casimir_energy_flat_massive,
    casimir_energy_flat_massless,
    repulsion_condition,
    sign_flip_condition,
)
from .regimes import (
    classify_regime,
    cylinder_critical_set,
    cylinder_energy_x,
    cylinder_energy_y,
    kerr_critical_set,
    kerr_energy_ratio,
    kerr_energy_x,
    kerr_energy_y,
    kerr_weak_field_x,
    neutron_star_benchmark,
    weak_field_check,
)
from .units import convert_units

__all__ = [
    "CasimirLab",
    "BackgroundType",
    "BoundaryCondition",
    "CavityConfig",
    "CriticalSet",
    "CylinderParams",
    "EnergyResult",
    "FlatParams",
    "KerrParams",
    "LabConfig",
    "LabResponse",
    "LengthMode",
    "LocalMetric",
    "OracleReport",
    "Orientation",
    "Regime",
    "RegimeLabel",
    "SeriesResult",
    "SweepGrid",
    "SweepRow",
    "UnitSystem",
    "WeakFieldBenchmark",
    "CasimirError",
    "ConvergenceError",
    "CoordinatePatchError",
    "DomainError",
    "HorizonError",
    "MetricInvariantError",
    "ModeBranchError",
    "ObserverNotTimelikeError",
    "SeriesRangeError",
    "UsageError",
    "load_config_from_env",
    "casimir_energy_density",
    "casimir_energy_flat_massive",
    "casimir_energy_flat_massless",
    "repulsion_condition",
    "sign_flip_condition",
    "classify_regime",
    "cylinder_critical_set",
    "cylinder_energy_x",
    "cylinder_energy_y",
    "kerr_critical_set",
    "kerr_energy_ratio",
    "kerr_energy_x",
    "kerr_energy_y",
    "kerr_weak_field_x",
    "neutron_star_benchmark",
    "weak_field_check",
    "convert_units",
]
