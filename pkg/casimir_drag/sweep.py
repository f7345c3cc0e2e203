"""
Parameter sweeps over (r, velocity) grids and their CSV / JSON output.

Rows come out in row-major order (r outer, velocity inner) whatever the
number of joblib workers.
"""

import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed

from .backgrounds import (
    cylinder_drag_velocity,
    cylinder_velocity_bounds,
    kerr_angular_velocity_bounds,
    kerr_drag_angular_velocity,
)
from .casimir import casimir_energy_density
from .config import coerce_config
from .errors import DomainError, UsageError
from .regimes import background_local_metric, cylinder_critical_set, kerr_critical_set
from .types import (
    BackgroundType,
    CriticalSet,
    CylinderParams,
    KerrParams,
    LabConfig,
    Orientation,
    SweepGrid,
    SweepRow,
)

logger = logging.getLogger(__name__)

CSV_HEADER = ("r", "omega", "allowed", "eps_x", "eps_y", "regime_x", "regime_y")

Block = Tuple[int, np.ndarray]


def format_float(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.17g}"


def grid_params(grid: SweepGrid, r: float, velocity: float) -> Union[CylinderParams, KerrParams]:
    if grid.background is BackgroundType.KERR:
        return KerrParams(M=grid.M, a=grid.a, r=r, Omega=velocity)
    return CylinderParams(k=grid.k, r=r, v=velocity)


def grid_critical_set(grid: SweepGrid, r: float) -> CriticalSet:
    if grid.background is BackgroundType.KERR:
        return kerr_critical_set(grid.M, grid.a, r)
    return cylinder_critical_set(grid.k, r)


def velocity_axis(grid: SweepGrid, r: float, margin: float = 1e-12) -> np.ndarray:
    """
    Velocities sampled at radius r.

    The auto band runs from drag - (1 - 2 margin) w to drag + (1 - 2 margin) w,
    w being the admissible half-width, so both endpoints pass the admissibility
    check.

    Raises:
        UsageError: If the auto band is requested where r has no admissible band
    """
    if not grid.auto_band:
        return np.linspace(grid.velocity_min, grid.velocity_max, grid.velocity_steps)
    try:
        if grid.background is BackgroundType.KERR:
            drag = kerr_drag_angular_velocity(grid.M, grid.a, r)
            lo, hi = kerr_angular_velocity_bounds(grid.M, grid.a, r)
        else:
            grid_critical_set(grid, r)
            drag = cylinder_drag_velocity(grid.k, r)
            lo, hi = cylinder_velocity_bounds(grid.k, r)
    except DomainError as e:
        raise UsageError(f"no admissible band at r={r} ({e.code}); give an explicit velocity range")
    half_width = (1.0 - 2.0 * margin) * 0.5 * (hi - lo)
    return np.linspace(drag - half_width, drag + half_width, grid.velocity_steps)


def evaluate_point(grid: SweepGrid, r: float, velocity: float, config: LabConfig) -> SweepRow:
    """One grid point; points outside the admissible domain are marked not allowed"""
    params = grid_params(grid, r, velocity)
    try:
        metric = background_local_metric(params, config.admissibility_margin)
    except DomainError:
        return SweepRow(r=r, omega_or_v=velocity, allowed=False)
    results = {
        orientation: casimir_energy_density(
            metric,
            grid.cavity(orientation),
            config.null_tol,
            config.series_rel_tol,
            config.massless_crossover,
        )
        for orientation in Orientation
    }
    x, y = results[Orientation.X], results[Orientation.Y]
    return SweepRow(
        r=r,
        omega_or_v=velocity,
        allowed=True,
        eps_x=x.energy_density,
        eps_y=y.energy_density,
        regime_x=x.regime,
        regime_y=y.regime,
    )


def _evaluate_block(grid: SweepGrid, block: Block, config: LabConfig) -> Tuple[int, List[SweepRow]]:
    start, radii = block
    rows = []
    for r in radii:
        r = float(r)
        for velocity in velocity_axis(grid, r, config.admissibility_margin):
            rows.append(evaluate_point(grid, r, float(velocity), config))
    return start, rows


class SweepChunker:
    """Splits the radial axis of a sweep into contiguous blocks"""

    def chunk_rows(self, grid: SweepGrid, chunk_size: int) -> List[Block]:
        """
        Args:
            grid: Sweep grid
            chunk_size: Radii per block, >= 1

        Returns:
            (index of the first radius, radii) pairs covering the axis in order
        """
        if chunk_size < 1:
            raise UsageError(f"chunk_size must be >= 1, got {chunk_size}")
        radii = np.linspace(grid.r_min, grid.r_max, grid.r_steps)
        return [(start, radii[start : start + chunk_size]) for start in range(0, len(radii), chunk_size)]


class SweepAggregator:
    """Reassembles evaluated blocks into row-major order"""

    def aggregate(self, blocks: Sequence[Tuple[int, List[SweepRow]]]) -> List[SweepRow]:
        rows: List[SweepRow] = []
        for _, block_rows in sorted(blocks, key=lambda block: block[0]):
            rows.extend(block_rows)
        return rows


def evaluate_grid(
    grid: SweepGrid,
    config: Optional[Union[LabConfig, Dict[str, Any]]] = None,
    chunk_size: Optional[int] = None,
) -> List[SweepRow]:
    """
    Evaluate every grid point.

    Args:
        grid: Sweep grid
        config: LabConfig or dict; workers > 1 evaluates blocks with joblib
        chunk_size: Radii per block (default: spread over the workers)

    Returns:
        r_steps * velocity_steps rows in row-major order
    """
    config = coerce_config(config)
    if chunk_size is None:
        chunk_size = max(1, math.ceil(grid.r_steps / (4 * config.workers)))
    blocks = SweepChunker().chunk_rows(grid, chunk_size)
    logger.info(
        "sweep %s: %d x %d points in %d blocks, %d workers",
        grid.background.value,
        grid.r_steps,
        grid.velocity_steps,
        len(blocks),
        config.workers,
    )
    if config.workers > 1:
        done = Parallel(n_jobs=config.workers)(
            delayed(_evaluate_block)(grid, block, config) for block in blocks
        )
    else:
        done = [_evaluate_block(grid, block, config) for block in blocks]
    return SweepAggregator().aggregate(done)


def critical_curves(grid: SweepGrid) -> List[Dict[str, Any]]:
    """Critical values per radius; radii without an admissible band carry an error code"""
    curves = []
    for r in np.linspace(grid.r_min, grid.r_max, grid.r_steps):
        r = float(r)
        try:
            curves.append({"r": r, **grid_critical_set(grid, r).to_dict()})
        except DomainError as e:
            curves.append({"r": r, "error": e.code})
    return curves


def row_to_fields(row: SweepRow) -> List[str]:
    return [
        format_float(row.r),
        format_float(row.omega_or_v),
        "true" if row.allowed else "false",
        format_float(row.eps_x),
        format_float(row.eps_y),
        row.regime_x.value,
        row.regime_y.value,
    ]


def write_csv(rows: Sequence[SweepRow], path: Union[str, Path]) -> Path:
    """Write rows as UTF-8 CSV with LF line endings and 17 significant digits"""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row_to_fields(row))
    logger.info("wrote %d rows to %s", len(rows), path)
    return path


def curves_path_for(csv_path: Union[str, Path]) -> Path:
    """fig.csv -> fig.curves.json"""
    return Path(csv_path).with_suffix(".curves.json")


def write_curves_json(
    curves: List[Dict[str, Any]], path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None
) -> Path:
    path = Path(path)
    document = {"metadata": metadata or {}, "curves": curves}
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(document, f, indent=2)
        f.write("\n")
    return path
