"""Parameter sweeps, zero-crossing threshold search, and CSV/JSON output."""

from __future__ import annotations

import itertools
import json
import math
from concurrent import futures
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from importlib import metadata
from pathlib import Path

import numpy as np

from .entanglement import EN_FLOOR, ModePair, entanglement_at
from .errors import BracketError, MagnomechError, ParameterError, StabilityError
from .params import SystemParams, field_names

STATUS_OK = "ok"
STATUS_UNSTABLE = "unstable"
STATUS_ERROR = "error"

CSV_HEADER = "axis1,axis2,E_N,status"


@dataclass(frozen=True)
class AxisSpec:
    """One sweep axis over a :class:`SystemParams` field.

    Bounds are in the field's internal unit (rad/s, or kelvin for
    ``temperature``).  A single-point axis pins the parameter at ``lo``.
    """

    param: str
    lo: float
    hi: float
    points: int
    scale: str = "linear"

    def __post_init__(self):
        if self.param not in field_names():
            raise ParameterError(f"{self.param!r} is not a system parameter field")
        if self.scale not in ("linear", "log"):
            raise ParameterError(
                f"axis scale must be 'linear' or 'log', got {self.scale!r}")
        if self.points < 1:
            raise ParameterError("an axis needs at least one point")
        if self.points > 1 and not self.lo < self.hi:
            raise ParameterError("an axis with several points needs lo < hi")
        if self.scale == "log" and self.lo <= 0.0:
            raise ParameterError("a log-scaled axis needs lo > 0")

    def values(self) -> np.ndarray:
        if self.points == 1:
            return np.asarray([float(self.lo)])
        if self.scale == "log":
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)


@dataclass(frozen=True)
class SweepSpec:
    """A 1-D or 2-D grid over parameter axes, for one mode pair."""

    base: SystemParams
    axes: tuple[AxisSpec, ...]
    pair: ModePair
    output_path: str | None = None

    def __post_init__(self):
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        if not 1 <= len(axes) <= 2:
            raise ParameterError("a sweep takes one or two axes")
        if len(axes) == 2 and axes[0].param == axes[1].param:
            raise ParameterError("the two sweep axes must name different parameters")


@dataclass(frozen=True)
class SweepResult:
    """Row-major table of E_N over a sweep grid.

    ``en`` holds NaN wherever ``status`` is not ``"ok"``; unstable points
    carry no negativity value at all rather than a misleading zero.
    """

    axis_names: tuple[str, ...]
    axis_values: tuple[np.ndarray, ...]
    en: np.ndarray
    status: tuple[str, ...]
    pair: ModePair
    metadata: dict

    def rows(self):
        """Yield (axis1, axis2 | None, en | None, status) in row-major order."""
        for i, combo in enumerate(itertools.product(*self.axis_values)):
            c1 = float(combo[0])
            c2 = float(combo[1]) if len(combo) > 1 else None
            value = float(self.en[i]) if self.status[i] == STATUS_OK else None
            yield c1, c2, value, self.status[i]

    @property
    def en_grid(self) -> np.ndarray:
        """E_N reshaped to the grid (NaN where not ok)."""
        shape = tuple(len(v) for v in self.axis_values)
        return self.en.reshape(shape)


def _package_version() -> str:
    try:
        return metadata.version("magnomech")
    except metadata.PackageNotFoundError:
        return "unknown"


def _grid_tasks(spec: SweepSpec) -> list:
    tasks = []
    names = tuple(axis.param for axis in spec.axes)
    for combo in itertools.product(*(axis.values() for axis in spec.axes)):
        changes = {name: float(value) for name, value in zip(names, combo)}
        try:
            point_params = spec.base.replace(**changes)
        except ParameterError:
            point_params = None
        tasks.append((point_params, spec.pair))
    return tasks


def _evaluate(task) -> tuple[float, str]:
    point_params, pair = task
    if point_params is None:
        return math.nan, STATUS_ERROR
    try:
        point = entanglement_at(point_params, pair)
    except (MagnomechError, np.linalg.LinAlgError):
        return math.nan, STATUS_ERROR
    if not point.stable:
        return math.nan, STATUS_UNSTABLE
    return point.en, STATUS_OK


def run_sweep(spec: SweepSpec, jobs: int = 1) -> SweepResult:
    """Evaluate E_N at every grid point of ``spec``.

    Grid points are independent pure evaluations, so they may be farmed
    out to a process pool (``jobs > 1``); the output ordering is row-major
    over the axes either way, and parallel runs reproduce the serial table
    bit for bit.  Per-point numerical failures are recorded in the status
    column instead of aborting the sweep.
    """
    tasks = _grid_tasks(spec)
    if jobs > 1 and len(tasks) > 1:
        chunksize = max(1, len(tasks) // (8 * jobs))
        with futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate, tasks, chunksize=chunksize))
    else:
        outcomes = [_evaluate(task) for task in tasks]
    en = np.asarray([value for value, _ in outcomes])
    status = tuple(state for _, state in outcomes)
    metadata_block = {
        "package_version": _package_version(),
        "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "pair": list(spec.pair.labels()),
        "axes": [asdict(axis) for axis in spec.axes],
        "base_params": asdict(spec.base),
        "jobs": jobs,
        "points": len(tasks),
        "counts": {state: status.count(state)
                   for state in (STATUS_OK, STATUS_UNSTABLE, STATUS_ERROR)},
    }
    return SweepResult(
        axis_names=tuple(axis.param for axis in spec.axes),
        axis_values=tuple(axis.values() for axis in spec.axes),
        en=en, status=status, pair=spec.pair, metadata=metadata_block)


def save_result(result: SweepResult, csv_path) -> tuple[Path, Path]:
    """Write the result table as CSV plus a JSON metadata sidecar.

    The CSV body is fully deterministic (floats in round-trip ``repr``
    precision, empty E_N cells for non-ok points); everything
    non-deterministic, like the timestamp, lives in the sidecar.
    """
    csv_path = Path(csv_path)
    lines = [CSV_HEADER]
    for c1, c2, value, state in result.rows():
        cell_axis2 = "" if c2 is None else repr(c2)
        cell_en = "" if value is None else repr(value)
        lines.append(f"{c1!r},{cell_axis2},{cell_en},{state}")
    csv_path.write_text("\n".join(lines) + "\n")
    sidecar = csv_path.with_suffix(".json")
    payload = dict(result.metadata)
    payload["csv"] = csv_path.name
    payload["axis_names"] = list(result.axis_names)
    sidecar.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return csv_path, sidecar


def _en_at(base: SystemParams, axis: str, value: float, pair: ModePair) -> float:
    point = entanglement_at(base.replace(**{axis: value}), pair)
    if not point.stable:
        raise StabilityError(
            f"unstable point at {axis} = {value!r} inside the threshold bracket")
    return point.en


def find_threshold(base: SystemParams, axis: str, lo: float, hi: float,
                   pair: ModePair, rel_tol: float = 1e-4) -> float:
    """Bisect for the ``axis`` value where E_N crosses its zero floor.

    Expects a live lower end (E_N > floor at ``lo``) and a dead upper end
    (E_N <= floor at ``hi``), both stable; raises :class:`BracketError`
    otherwise, and :class:`StabilityError` if an unstable point shows up
    inside the bracket.  Bisection runs until the bracket is narrower than
    ``rel_tol`` times the axis magnitude and returns its midpoint.
    """
    if axis not in field_names():
        raise ParameterError(f"{axis!r} is not a system parameter field")
    if not lo < hi:
        raise BracketError(f"need lo < hi, got {lo!r} >= {hi!r}")
    en_lo = _en_at(base, axis, lo, pair)
    en_hi = _en_at(base, axis, hi, pair)
    if en_lo <= EN_FLOOR:
        raise BracketError(
            f"E_N at the lower end ({en_lo!r}) is already at the zero floor")
    if en_hi > EN_FLOOR:
        raise BracketError(
            f"E_N at the upper end ({en_hi!r}) has not reached the zero floor")
    scale = max(abs(lo), abs(hi))
    while (hi - lo) > rel_tol * scale:
        mid = 0.5 * (lo + hi)
        if _en_at(base, axis, mid, pair) > EN_FLOOR:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
