from abc import ABC, abstractmethod
from dataclasses import asdict
from typing import Any, Dict, Optional, Union

from ..errors import UsageError
from ..types import BackgroundType, CriticalSet, CylinderParams, FlatParams, KerrParams, LocalMetric

BackgroundParams = Union[FlatParams, CylinderParams, KerrParams]


class BackgroundHandler(ABC):
    """Abstract base class for background spacetimes seen from a moving apparatus"""

    background_type: BackgroundType

    def __init__(self):
        self._initialized = False
        self._params: Optional[BackgroundParams] = None

    def initialize(self, params: BackgroundParams) -> None:
        """
        Store the background parameters (called once during connect_background)

        Args:
            params: Parameter dataclass matching this handler

        Raises:
            UsageError: If validate_params rejects params
        """
        if not self.validate_params(params):
            raise UsageError(
                f"{type(params).__name__} is not valid for a {self.background_type.value} background"
            )
        self._params = params
        self._initialized = True

    @property
    def params(self) -> BackgroundParams:
        if not self._initialized:
            raise RuntimeError("Handler not initialized. Call initialize() first.")
        return self._params

    @abstractmethod
    def validate_params(self, params: BackgroundParams) -> bool:
        """
        Check that params has the type this handler expects

        Returns:
            True if valid, False otherwise
        """

    @abstractmethod
    def is_admissible(self, margin: float = 1e-12) -> bool:
        """True when the apparatus worldline is timelike with the given relative margin"""

    @abstractmethod
    def local_metric(self, margin: float = 1e-12) -> LocalMetric:
        """
        Comoving-frame metric of the apparatus

        Raises:
            DomainError: If the apparatus is not an allowed observer
        """

    def critical_set(self) -> Optional[CriticalSet]:
        """Critical velocities of the background; None when there is no frame dragging"""
        return None

    def describe(self) -> Dict[str, Any]:
        return {"type": self.background_type.value, **asdict(self.params)}
