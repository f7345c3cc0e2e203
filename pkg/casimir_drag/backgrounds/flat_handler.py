from .base import BackgroundHandler, BackgroundParams
from ..types import BackgroundType, FlatParams, LocalMetric


class FlatHandler(BackgroundHandler):
    """Minkowski spacetime; every apparatus frame is the static one"""

    background_type = BackgroundType.FLAT

    def validate_params(self, params: BackgroundParams) -> bool:
        return isinstance(params, FlatParams)

    def is_admissible(self, margin: float = 1e-12) -> bool:
        return True

    def local_metric(self, margin: float = 1e-12) -> LocalMetric:
        return LocalMetric.minkowski()
