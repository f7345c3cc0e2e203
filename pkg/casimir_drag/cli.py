"""
Command-line interface.

Usage examples:
  basis-casimir energy --background kerr --M 1 --a 0.7 --r 3 --omega 0.05 --orientation y
  basis-casimir critical --background cylinder --k 0.3 --r 2
  basis-casimir sweep --background kerr --M 1 --a 0.7 --r-min 1.8 --r-max 8 \\
      --r-steps 200 --omega-steps 200 --output fig3.csv
  basis-casimir verify --seed 7 --samples 10
  basis-casimir convert --kind mass_solar --value 1.4
"""

import argparse
import dataclasses
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from .config import load_config_from_env
from .errors import CasimirError, UsageError
from .lab import CasimirLab
from .oracle import verify_all
from .sweep import critical_curves, curves_path_for, evaluate_grid, write_csv, write_curves_json
from .types import (
    BackgroundType,
    CylinderParams,
    FlatParams,
    KerrParams,
    LabConfig,
    OracleReport,
    SweepGrid,
    SweepRow,
    UnitSystem,
)
from .units import DIRECTIONS, UNIT_KINDS, convert_units

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """Argument errors surface as UsageError so they are reported as error JSON"""

    def error(self, message: str):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _configure_logging(level: str) -> None:
    if not isinstance(logging.getLevelName(level.upper()), int):
        raise UsageError(f"unknown log level {level!r}")
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _units_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--units",
        choices=[u.value for u in UnitSystem],
        default=UnitSystem.GEOMETRIC.value,
        help="unit system of inputs and outputs (computation is geometric)",
    )
    return parent


def _background_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--background", choices=[b.value for b in BackgroundType], required=True)
    parent.add_argument("--k", type=float, help="cylinder momentum parameter")
    parent.add_argument("--r", type=float, help="radius (m in SI)")
    parent.add_argument("--v", type=float, default=0.0, help="cylinder apparatus velocity (m/s in SI)")
    parent.add_argument("--M", type=float, help="Kerr mass (kg in SI)")
    parent.add_argument("--a", type=float, default=0.0, help="Kerr spin parameter (m in SI)")
    parent.add_argument("--omega", type=float, default=0.0, help="Kerr angular velocity (rad/s in SI)")
    return parent


def _cavity_parent(with_orientation: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    if with_orientation:
        parent.add_argument("--orientation", choices=["x", "y"], default="x")
    parent.add_argument("--bc", choices=["dirichlet", "mixed"], default="dirichlet")
    parent.add_argument("--mass", type=float, default=None, help="field mass (kg in SI)")
    parent.add_argument("--L", type=float, default=None, help="plate separation (m in SI)")
    parent.add_argument("--length-mode", choices=["coordinate", "proper"], default="coordinate")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="basis-casimir", description=__doc__.splitlines()[1])
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--log-level", default=None, help="logging level (overrides -v)")
    parser.add_argument("--env-file", default=None, help=".env file with CASIMIR_* settings")
    sub = parser.add_subparsers(dest="command", required=True)

    units = _units_parent()
    background = _background_parent()

    sub.add_parser(
        "energy",
        parents=[units, background, _cavity_parent(True)],
        help="energy density of one cavity",
    )
    sub.add_parser("critical", parents=[units, background], help="critical velocities")

    sweep = sub.add_parser("sweep", parents=[units, _cavity_parent(False)], help="grid sweep to CSV")
    sweep.add_argument("--background", choices=["cylinder", "kerr"], required=True)
    sweep.add_argument("--M", type=float, default=1.0)
    sweep.add_argument("--a", type=float, default=0.0)
    sweep.add_argument("--k", type=float, default=0.0)
    sweep.add_argument("--r-min", type=float, required=True)
    sweep.add_argument("--r-max", type=float, required=True)
    sweep.add_argument("--r-steps", type=int, required=True)
    sweep.add_argument("--omega-min", "--v-min", dest="omega_min", type=float, default=None)
    sweep.add_argument("--omega-max", "--v-max", dest="omega_max", type=float, default=None)
    sweep.add_argument("--omega-steps", "--v-steps", dest="omega_steps", type=int, required=True)
    sweep.add_argument("--output", required=True, help="CSV path; curves go to <stem>.curves.json")
    sweep.add_argument("--workers", type=_positive_int, default=None)

    verify = sub.add_parser("verify", help="run the oracle checks")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=_positive_int, default=10)
    verify.add_argument("--workers", type=_positive_int, default=1)

    convert = sub.add_parser("convert", help="SI <-> geometric conversion")
    convert.add_argument("--kind", choices=UNIT_KINDS, required=True)
    convert.add_argument("--value", type=float, required=True)
    convert.add_argument("--direction", choices=DIRECTIONS, default="to_geometric")
    return parser


def _si(args: argparse.Namespace) -> bool:
    return getattr(args, "units", UnitSystem.GEOMETRIC.value) == UnitSystem.SI.value


def _to_geo(args: argparse.Namespace, value: Optional[float], kind: str) -> Optional[float]:
    if value is None or not _si(args):
        return value
    return convert_units(value, kind, "to_geometric")


def _to_si(args: argparse.Namespace, value: Optional[float], kind: str) -> Optional[float]:
    if value is None or not _si(args):
        return value
    return convert_units(value, kind, "to_si")


def _velocity_kind(background: str) -> str:
    return "angular_velocity_si" if background == BackgroundType.KERR.value else "velocity_si"


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.background} background needs {', '.join(missing)}")


def background_params(args: argparse.Namespace):
    """Background parameters in geometric units"""
    if args.background == BackgroundType.FLAT.value:
        return FlatParams()
    if args.background == BackgroundType.CYLINDER.value:
        _require(args, "k", "r")
        return CylinderParams(
            k=args.k,
            r=_to_geo(args, args.r, "length_m"),
            v=_to_geo(args, args.v, "velocity_si"),
        )
    _require(args, "M", "r")
    return KerrParams(
        M=_to_geo(args, args.M, "mass_kg"),
        a=_to_geo(args, args.a, "length_m"),
        r=_to_geo(args, args.r, "length_m"),
        Omega=_to_geo(args, args.omega, "angular_velocity_si"),
    )


def _critical_doc(args: argparse.Namespace, critical: Optional[Dict[str, float]]) -> Optional[Dict[str, float]]:
    if critical is None:
        return None
    kind = _velocity_kind(args.background)
    return {key: _to_si(args, value, kind) for key, value in critical.items()}


def _cavity_values(args: argparse.Namespace, config: LabConfig) -> Dict[str, Any]:
    mass = config.default_mass if args.mass is None else _to_geo(args, args.mass, "field_mass_kg")
    L = config.default_plate_separation if args.L is None else _to_geo(args, args.L, "length_m")
    return {
        "bc": args.bc,
        "mass": mass,
        "plate_separation_L": L,
        "length_mode": args.length_mode,
    }


def _emit(document: Any) -> None:
    sys.stdout.write(json.dumps(document, indent=2) + "\n")


def cmd_energy(args: argparse.Namespace, config: LabConfig) -> int:
    lab = CasimirLab(config)
    lab.connect_background("cli", args.background, background_params(args))
    lab.add_cavity("cli", {"orientation": args.orientation, **_cavity_values(args, config)})
    response = lab.evaluate("cli", "cli")
    result = response.result
    _emit(
        {
            "energy_density": _to_si(args, result.energy_density, "energy_density_geometric"),
            "flat_reference_Em": _to_si(args, result.flat_reference_Em, "energy_density_geometric"),
            "prefactor": result.prefactor,
            "proper_length": result.proper_length,
            "regime": result.regime.value,
            "sign_flipped": result.sign_flipped,
            "critical_set": _critical_doc(args, response.metadata["critical_set"]),
            "units": args.units,
        }
    )
    return EXIT_OK


def cmd_critical(args: argparse.Namespace, config: LabConfig) -> int:
    if args.background == BackgroundType.FLAT.value:
        raise UsageError("flat spacetime has no frame dragging and no critical velocities")
    lab = CasimirLab(config)
    lab.connect_background("cli", args.background, background_params(args))
    _emit(_critical_doc(args, lab.critical("cli").to_dict()))
    return EXIT_OK


def _row_to_si(args: argparse.Namespace, row: SweepRow) -> SweepRow:
    return dataclasses.replace(
        row,
        omega_or_v=_to_si(args, row.omega_or_v, _velocity_kind(args.background)),
        eps_x=_to_si(args, row.eps_x, "energy_density_geometric"),
        eps_y=_to_si(args, row.eps_y, "energy_density_geometric"),
    )


def cmd_sweep(args: argparse.Namespace, config: LabConfig) -> int:
    velocity_kind = _velocity_kind(args.background)
    grid = SweepGrid(
        background=args.background,
        r_min=_to_geo(args, args.r_min, "length_m"),
        r_max=_to_geo(args, args.r_max, "length_m"),
        r_steps=args.r_steps,
        velocity_steps=args.omega_steps,
        velocity_min=_to_geo(args, args.omega_min, velocity_kind),
        velocity_max=_to_geo(args, args.omega_max, velocity_kind),
        M=_to_geo(args, args.M, "mass_kg"),
        a=_to_geo(args, args.a, "length_m"),
        k=args.k,
        **_cavity_values(args, config),
    )
    if args.workers is not None:
        config = dataclasses.replace(config, workers=args.workers)

    rows = [_row_to_si(args, row) for row in evaluate_grid(grid, config)]
    curves = [
        {key: value if key in ("r", "error") else _to_si(args, value, velocity_kind) for key, value in entry.items()}
        for entry in critical_curves(grid)
    ]
    csv_path = write_csv(rows, args.output)
    metadata = {
        "background": grid.background.value,
        "M": args.M,
        "a": args.a,
        "k": args.k,
        "bc": grid.bc.value,
        "units": args.units,
        "velocity": "omega" if grid.background is BackgroundType.KERR else "v",
    }
    json_path = write_curves_json(curves, curves_path_for(csv_path), metadata)
    _emit({"csv": str(csv_path), "curves": str(json_path), "rows": len(rows)})
    return EXIT_OK


def format_report(reports: Sequence[OracleReport]) -> str:
    lines = [
        f"{'quantity':<28} {'main':>24} {'oracle':>24} {'gap':>10} {'tol':>8} status",
    ]
    for r in reports:
        lines.append(
            f"{r.quantity_name:<28} {r.main_value:>24.17g} {r.oracle_value:>24.17g} "
            f"{r.relative_gap:>10.3e} {r.tolerance:>8.1e} {'PASS' if r.passed else 'FAIL'}"
        )
    failed = sum(1 for r in reports if not r.passed)
    lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace, config: LabConfig) -> int:
    reports = verify_all(args.seed, args.samples, args.workers)
    sys.stdout.write(format_report(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_convert(args: argparse.Namespace, config: LabConfig) -> int:
    _emit(
        {
            "kind": args.kind,
            "direction": args.direction,
            "value": args.value,
            "result": convert_units(args.value, args.kind, args.direction),
        }
    )
    return EXIT_OK


COMMANDS = {
    "energy": cmd_energy,
    "critical": cmd_critical,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "convert": cmd_convert,
}


def _fail(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = load_config_from_env(args.env_file)
        level = args.log_level or {0: config.log_level, 1: "INFO"}.get(args.verbose, "DEBUG")
        _configure_logging(level)
        return COMMANDS[args.command](args, config)
    except CasimirError as e:
        logger.debug("command failed", exc_info=True)
        _fail(e.code, str(e))
        return EXIT_ERROR
    except OSError as e:
        _fail("IO_ERROR", str(e))
        return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
