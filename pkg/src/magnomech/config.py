"""Flat ``key = value`` config files and the bundled reference configs.

Format: one ``key = value`` pair per line, ``#`` starts a comment.  Keys
follow :class:`~magnomech.params.SystemParams` field names with a unit
suffix: ``_hz`` for quantities given in ordinary hertz (converted to
angular rad/s on load) and ``_k`` for the temperature in kelvin.  Unknown
keys are rejected.

Sweep definitions extend the same format with ``pair``, an optional
``output``, and per-axis keys::

    axis1_param  = delta_c
    axis1_min_hz = -20e6
    axis1_max_hz = 40e6
    axis1_points = 100
    axis1_scale  = linear        # optional, default linear
    pair         = m1,m2

A ``temperature`` axis uses ``axis1_min_k`` / ``axis1_max_k`` instead.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .entanglement import ModePair
from .errors import ConfigError, ParameterError
from .params import TWO_PI, SystemParams, field_names
from .sweep import AxisSpec, SweepSpec


def _param_key(name: str) -> str:
    return "temperature_k" if name == "temperature" else f"{name}_hz"


PARAM_KEYS = {_param_key(name): name for name in field_names()}

_AXIS_KEY = re.compile(r"^axis([12])_(param|min_hz|min_k|max_hz|max_k|points|scale)$")


def parse_kv(text: str) -> dict[str, str]:
    """Parse the flat key = value format into a string dict."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _float_entry(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"key {key!r}: {value!r} is not a number") from None


def _params_from_entries(entries: dict[str, str]) -> SystemParams:
    unknown = sorted(set(entries) - set(PARAM_KEYS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    missing = sorted(set(PARAM_KEYS) - set(entries))
    if missing:
        raise ConfigError(f"missing config keys: {', '.join(missing)}")
    kwargs = {}
    for key, field in PARAM_KEYS.items():
        value = _float_entry(key, entries[key])
        kwargs[field] = value if field == "temperature" else TWO_PI * value
    try:
        return SystemParams(**kwargs)
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc


def load_params(path) -> SystemParams:
    """Load a :class:`SystemParams` from a config file (strict key set)."""
    return _params_from_entries(parse_kv(Path(path).read_text()))


def load_base_params(path) -> SystemParams:
    """SystemParams from a config that may also carry a sweep definition.

    The sweep-only keys (axis blocks, ``pair``, ``output``) are ignored so
    single-point commands can reuse sweep configs; any other unknown key
    is still rejected.
    """
    entries = parse_kv(Path(path).read_text())
    param_entries = {key: value for key, value in entries.items()
                     if key not in ("pair", "output") and not _AXIS_KEY.match(key)}
    return _params_from_entries(param_entries)


def _pair_from_value(value: str) -> ModePair:
    labels = [part.strip() for part in value.split(",")]
    if len(labels) != 2:
        raise ConfigError(f"pair must be 'modeA,modeB', got {value!r}")
    try:
        return ModePair.from_labels(*labels)
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc


def _axis_from_entries(index: int, entries: dict[str, str]) -> AxisSpec:
    prefix = f"axis{index}"
    if "param" not in entries:
        raise ConfigError(f"{prefix}: missing {prefix}_param")
    param = entries.pop("param")
    if param not in field_names():
        raise ConfigError(f"{prefix}: {param!r} is not a system parameter")
    suffix = "k" if param == "temperature" else "hz"
    other = "hz" if suffix == "k" else "k"
    for bound in ("min", "max"):
        if f"{bound}_{other}" in entries:
            raise ConfigError(
                f"{prefix}: use {prefix}_{bound}_{suffix} for {param}")
        if f"{bound}_{suffix}" not in entries:
            raise ConfigError(f"{prefix}: missing {prefix}_{bound}_{suffix}")
    if "points" not in entries:
        raise ConfigError(f"{prefix}: missing {prefix}_points")
    factor = 1.0 if param == "temperature" else TWO_PI
    lo = factor * _float_entry(f"{prefix}_min_{suffix}", entries.pop(f"min_{suffix}"))
    hi = factor * _float_entry(f"{prefix}_max_{suffix}", entries.pop(f"max_{suffix}"))
    points_text = entries.pop("points")
    try:
        points = int(points_text)
    except ValueError:
        raise ConfigError(
            f"{prefix}: {points_text!r} is not an integer point count") from None
    scale = entries.pop("scale", "linear")
    try:
        return AxisSpec(param=param, lo=lo, hi=hi, points=points, scale=scale)
    except ParameterError as exc:
        raise ConfigError(f"{prefix}: {exc}") from exc


def load_sweep_spec(path) -> SweepSpec:
    """Load a :class:`SweepSpec` (base params + axes + pair) from a file."""
    entries = parse_kv(Path(path).read_text())
    param_entries: dict[str, str] = {}
    axis_entries: dict[int, dict[str, str]] = {1: {}, 2: {}}
    pair_value = None
    output = None
    for key, value in entries.items():
        if key == "pair":
            pair_value = value
            continue
        if key == "output":
            output = value
            continue
        matched = _AXIS_KEY.match(key)
        if matched:
            axis_entries[int(matched.group(1))][matched.group(2)] = value
        else:
            param_entries[key] = value
    base = _params_from_entries(param_entries)
    if pair_value is None:
        raise ConfigError("sweep config needs a 'pair = modeA,modeB' entry")
    pair = _pair_from_value(pair_value)
    if not axis_entries[1]:
        raise ConfigError("sweep config needs at least an axis1_* block")
    if axis_entries[2] and not axis_entries[1]:
        raise ConfigError("axis2 given without axis1")
    axes = tuple(_axis_from_entries(index, axis_entries[index])
                 for index in (1, 2) if axis_entries[index])
    try:
        return SweepSpec(base=base, axes=axes, pair=pair, output_path=output)
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc


def bundled_config_dir() -> Path:
    """Directory holding the reference configs shipped with the package."""
    return Path(str(resources.files("magnomech").joinpath("configs")))


def bundled_config_names() -> list[str]:
    return sorted(p.name for p in bundled_config_dir().glob("*.cfg"))


def bundled_config_path(name: str) -> Path:
    """Path to one bundled config by file name."""
    path = bundled_config_dir() / name
    if not path.is_file():
        raise ConfigError(f"no bundled config named {name!r}; "
                          f"available: {', '.join(bundled_config_names())}")
    return path
