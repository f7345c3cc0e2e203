import logging
from typing import Any, Dict, Optional, Union

from .backgrounds import BackgroundHandler, BackgroundParams, FlatHandler
from .casimir import casimir_energy_density
from .config import coerce_config
from .errors import DomainError, UsageError
from .types import (
    BackgroundType,
    CavityConfig,
    CriticalSet,
    LabConfig,
    LabResponse,
    Regime,
)

logger = logging.getLogger(__name__)


class CasimirLab:
    """
    Evaluates Casimir cavities in registered backgrounds.

    Workflow:
    1. Initialize the lab with config
    2. Register backgrounds using connect_background()
    3. Register cavities using add_cavity()
    4. Evaluate using evaluate() with background labels and cavity names
    """

    def __init__(self, config: Optional[Union[LabConfig, Dict[str, Any]]] = None):
        """
        Initialize lab with optional configuration

        Args:
            config: Optional LabConfig instance or dict, e.g.
                {
                    "null_tol": 1e-9,
                    "admissibility_margin": 1e-12,
                    "series_rel_tol": 1e-10,
                    "workers": 4
                }
        """
        self.config = coerce_config(config)
        self._backgrounds: Dict[str, Dict[str, Any]] = {}
        self._cavities: Dict[str, CavityConfig] = {}

    def _get_background_handler(self, background_type: BackgroundType) -> BackgroundHandler:
        """Get a new instance of the appropriate background handler"""
        if background_type == BackgroundType.FLAT:
            return FlatHandler()
        elif background_type == BackgroundType.CYLINDER:
            from .backgrounds import CylinderHandler

            return CylinderHandler()
        elif background_type == BackgroundType.KERR:
            from .backgrounds import KerrHandler

            return KerrHandler()
        raise UsageError(f"No handler available for background type: {background_type}")

    def connect_background(
        self,
        label: str,
        background_type: Union[BackgroundType, str],
        params: BackgroundParams,
    ) -> None:
        """
        Register a background for later use (Setup Step #2).

        Args:
            label: Unique identifier used in evaluate() calls
            background_type: Type of background (from BackgroundType enum)
            params: Parameters matching the background type
                - FlatParams for BackgroundType.FLAT
                - CylinderParams for BackgroundType.CYLINDER
                - KerrParams for BackgroundType.KERR
        """
        if not isinstance(background_type, BackgroundType):
            background_type = BackgroundType(str(background_type).lower())
        handler = self._get_background_handler(background_type)
        if not handler.validate_params(params):
            raise UsageError(f"Invalid params for background '{label}'")
        handler.initialize(params)
        self._backgrounds[label] = {"type": background_type, "handler": handler}
        logger.info("connected background %s: %s", label, handler.describe())

    def add_cavity(self, name: str, cavity: Union[CavityConfig, Dict[str, Any]]) -> None:
        """
        Register a cavity (Setup Step #3).

        Args:
            name: Unique identifier used in evaluate() calls
            cavity: CavityConfig or a dict of its fields; mass and separation
                default to LabConfig.default_mass / default_plate_separation
        """
        if isinstance(cavity, dict):
            values = {
                "mass": self.config.default_mass,
                "plate_separation_L": self.config.default_plate_separation,
                **cavity,
            }
            cavity = CavityConfig(**values)
        self._cavities[name] = cavity

    def _handler(self, label: str) -> BackgroundHandler:
        if label not in self._backgrounds:
            raise UsageError(f"Background '{label}' not found. Use connect_background() first.")
        return self._backgrounds[label]["handler"]

    def _cavity(self, name: str) -> CavityConfig:
        if name not in self._cavities:
            raise UsageError(f"Cavity '{name}' not found. Use add_cavity() first.")
        return self._cavities[name]

    def critical(self, background_label: str) -> Optional[CriticalSet]:
        """Critical velocities of a registered background (None for flat spacetime)"""
        return self._handler(background_label).critical_set()

    def evaluate(
        self,
        background_label: str,
        cavity_name: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> LabResponse:
        """
        Casimir energy density of a registered cavity in a registered background.

        Args:
            background_label: Label from connect_background
            cavity_name: Name from add_cavity
            metadata: Optional extra metadata copied into the response

        Returns:
            LabResponse with the EnergyResult and metadata keys background,
            cavity, proper_length, critical_set, regime, sign_flipped

        Raises:
            DomainError: If the apparatus is not an allowed observer
        """
        handler = self._handler(background_label)
        cavity = self._cavity(cavity_name)
        metric = handler.local_metric(self.config.admissibility_margin)
        result = casimir_energy_density(
            metric,
            cavity,
            self.config.null_tol,
            self.config.series_rel_tol,
            self.config.massless_crossover,
        )
        critical = handler.critical_set()
        response_metadata = {
            **(metadata or {}),
            "background": handler.describe(),
            "cavity": cavity_name,
            "proper_length": result.proper_length,
            "critical_set": critical.to_dict() if critical is not None else None,
            "regime": result.regime.value,
            "sign_flipped": result.sign_flipped,
        }
        return LabResponse(result=result, metadata=response_metadata)

    def classify(self, background_label: str, cavity_name: str) -> Regime:
        """Regime label; Forbidden when the apparatus is not an allowed observer"""
        try:
            return self.evaluate(background_label, cavity_name).result.regime
        except DomainError as e:
            logger.debug("classify %s/%s: %s", background_label, cavity_name, e)
            return Regime.FORBIDDEN
