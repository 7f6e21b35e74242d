"""Sensor and hardware profiles, the default WBAN catalog, and config-file IO.

Config files are JSON with a ``schema_version`` key (currently 1). Every
physical quantity carries its SI unit in the field name::

    {
      "schema_version": 1,
      "sensors": [{"name": "EEG", "f_max_hz": 500}],
      "radio": {"t_send_s": 0.0026, "p_send_w": 0.0305, "p_standby_w": 2.5e-6,
                "v_supply_v": 2.5, "max_payload_bytes": 20},
      "battery": {"capacity_j": 2700},
      "buffer": {"cells": 160, "energy_j_per_day": 0.43},
      "compute": [{"sensor": "ECG", "label": "CsBased",
                   "e_c_j_per_day": 3.1, "calibrated": true}]
    }

Every section is optional. Sensor entries whose ``name`` matches a default
sensor override only the fields they list; other names add a new sensor and
must give every field. Compute entries replace the (sensor, label) profile.
"""
from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import ParseError, ValidationError

SCHEMA_VERSION = 1


class RateClass(str, Enum):
    LOW = "LowSampleRate"
    HIGH = "HighSampleRate"


class ComputeLabel(str, Enum):
    TRADITIONAL_ANOMALY = "TraditionalAnomaly"
    CS_BASED = "CsBased"
    NONE = "None"


def _require(cond, field_name, message):
    if not cond:
        raise ValidationError(field_name, message)


def _finite(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


@dataclass(frozen=True)
class SensorSpec:
    name: str
    resolution_bits: int
    f_min_hz: float
    f_max_hz: float
    rate_class: RateClass = RateClass.LOW

    def __post_init__(self):
        _require(isinstance(self.name, str) and self.name, "name", "must be a non-empty string")
        _require(
            isinstance(self.resolution_bits, int) and not isinstance(self.resolution_bits, bool),
            "resolution_bits", "must be an integer",
        )
        _require(1 <= self.resolution_bits <= 32, "resolution_bits", "must lie in [1, 32]")
        _require(_finite(self.f_min_hz) and self.f_min_hz > 0, "f_min_hz", "must be > 0")
        _require(_finite(self.f_max_hz), "f_max_hz", "must be finite")
        _require(self.f_min_hz <= self.f_max_hz, "f_min_hz", "must not exceed f_max_hz")
        object.__setattr__(self, "rate_class", RateClass(self.rate_class))

    @property
    def max_transmission_rate_bits(self) -> float:
        return max_transmission_rate_bits(self)


@dataclass(frozen=True)
class RadioProfile:
    """Cyclic-transmission radio constants (BLE CC2541 measurements by default).

    ``v_supply_v`` is informational; energy math uses the measured powers.
    """

    t_send_s: float = 2.6e-3
    p_send_w: float = 30.5e-3
    p_standby_w: float = 2.5e-6
    v_supply_v: float = 2.5
    max_payload_bytes: int = 20

    def __post_init__(self):
        _require(_finite(self.t_send_s) and self.t_send_s > 0, "t_send_s", "must be > 0")
        _require(_finite(self.p_standby_w) and self.p_standby_w > 0, "p_standby_w", "must be > 0")
        _require(_finite(self.p_send_w) and self.p_send_w > self.p_standby_w,
                 "p_send_w", "must exceed p_standby_w")
        _require(_finite(self.v_supply_v), "v_supply_v", "must be finite")
        _require(isinstance(self.max_payload_bytes, int) and self.max_payload_bytes >= 1,
                 "max_payload_bytes", "must be an integer >= 1")

    @property
    def send_energy_j(self) -> float:
        return self.t_send_s * self.p_send_w


@dataclass(frozen=True)
class BatteryModel:
    # 250 mAh at 3 V; reproduces the published lifetime/energy pairs.
    capacity_j: float = 2700.0

    def __post_init__(self):
        _require(_finite(self.capacity_j) and self.capacity_j > 0, "capacity_j", "must be > 0")


@dataclass(frozen=True)
class BufferModel:
    cells: int = 160
    energy_j_per_day: float = 0.43

    def __post_init__(self):
        _require(isinstance(self.cells, int) and self.cells > 0, "cells", "must be a positive integer")
        _require(_finite(self.energy_j_per_day) and self.energy_j_per_day >= 0,
                 "energy_j_per_day", "must be >= 0")


@dataclass(frozen=True)
class ComputeProfile:
    e_c_j_per_day: float
    label: ComputeLabel = ComputeLabel.NONE
    calibrated: bool = True

    def __post_init__(self):
        _require(_finite(self.e_c_j_per_day) and self.e_c_j_per_day >= 0,
                 "e_c_j_per_day", "must be >= 0")
        object.__setattr__(self, "label", ComputeLabel(self.label))
        _require(isinstance(self.calibrated, bool), "calibrated", "must be a boolean")


DEFAULT_SENSORS = (
    SensorSpec("HeartRate", 10, 2.0, 8.0),
    SensorSpec("BloodPressure", 16, 0.001, 100.0),
    SensorSpec("OxygenSaturation", 8, 0.001, 2.0),
    SensorSpec("Temperature", 8, 0.001, 1.0),
    SensorSpec("BloodSugar", 16, 0.001, 100.0),
    SensorSpec("Accelerometer", 12, 2.0, 400.0),
    SensorSpec("ECG", 12, 100.0, 1000.0, RateClass.HIGH),
    SensorSpec("EEG", 12, 100.0, 1000.0, RateClass.HIGH),
)

# EEG values are back-solved from the seizure-detection energy tables.
# ECG values are placeholders: the arrhythmia figures give no readable numbers.
DEFAULT_COMPUTE = {
    ("EEG", ComputeLabel.TRADITIONAL_ANOMALY): ComputeProfile(35.99, ComputeLabel.TRADITIONAL_ANOMALY),
    ("EEG", ComputeLabel.CS_BASED): ComputeProfile(6.65, ComputeLabel.CS_BASED),
    ("ECG", ComputeLabel.TRADITIONAL_ANOMALY): ComputeProfile(0.0, ComputeLabel.TRADITIONAL_ANOMALY, calibrated=False),
    ("ECG", ComputeLabel.CS_BASED): ComputeProfile(0.0, ComputeLabel.CS_BASED, calibrated=False),
}


@dataclass(frozen=True)
class Catalog:
    sensors: tuple[SensorSpec, ...] = DEFAULT_SENSORS
    radio: RadioProfile = field(default_factory=RadioProfile)
    battery: BatteryModel = field(default_factory=BatteryModel)
    buffer: BufferModel = field(default_factory=BufferModel)
    compute: dict = field(default_factory=lambda: dict(DEFAULT_COMPUTE))

    def __post_init__(self):
        object.__setattr__(self, "sensors", tuple(self.sensors))
        names = [s.name for s in self.sensors]
        if len(set(names)) != len(names):
            raise ValidationError("sensors", "duplicate sensor names")

    @property
    def names(self) -> list[str]:
        return [s.name for s in self.sensors]

    def sensor(self, name: str) -> SensorSpec:
        for s in self.sensors:
            if s.name.lower() == name.lower():
                return s
        raise KeyError(f"unknown sensor {name!r}; catalog has: {', '.join(self.names)}")

    def compute_profile(self, sensor: str, label: ComputeLabel) -> ComputeProfile | None:
        return self.compute.get((sensor, ComputeLabel(label)))

    def replace(self, **changes) -> Catalog:
        return dataclasses.replace(self, **changes)


def default_catalog() -> Catalog:
    return Catalog()


def max_transmission_rate_bits(spec: SensorSpec) -> float:
    """Raw data rate at the top of the sampling range, bits/s."""
    return spec.resolution_bits * spec.f_max_hz


# --- config IO ---------------------------------------------------------------

_SENSOR_KEYS = {f.name for f in dataclasses.fields(SensorSpec)}
_RADIO_KEYS = {f.name for f in dataclasses.fields(RadioProfile)}
_BATTERY_KEYS = {f.name for f in dataclasses.fields(BatteryModel)}
_BUFFER_KEYS = {f.name for f in dataclasses.fields(BufferModel)}
_COMPUTE_KEYS = {"sensor", "label", "e_c_j_per_day", "calibrated"}
_TOP_KEYS = {"schema_version", "sensors", "radio", "battery", "buffer", "compute"}


def _check_keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise ValidationError(where, "must be an object")
    extra = set(obj) - allowed
    if extra:
        raise ValidationError(f"{where}.{sorted(extra)[0]}", "unknown field")


def _build(cls, kwargs, where):
    try:
        return cls(**kwargs)
    except ValidationError as exc:
        raise ValidationError(f"{where}.{exc.field}", str(exc).split(": ", 1)[-1]) from None
    except (TypeError, ValueError) as exc:
        raise ValidationError(where, str(exc)) from None


def catalog_from_dict(data: dict) -> Catalog:
    _check_keys(data, _TOP_KEYS, "config")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValidationError("schema_version", f"unsupported version {version!r}")

    base = default_catalog()
    sensors = list(base.sensors)
    for i, entry in enumerate(data.get("sensors", [])):
        where = f"sensors[{i}]"
        _check_keys(entry, _SENSOR_KEYS, where)
        if "name" not in entry:
            raise ValidationError(f"{where}.name", "required")
        idx = next((j for j, s in enumerate(sensors) if s.name == entry["name"]), None)
        if idx is None:
            sensors.append(_build(SensorSpec, entry, where))
        else:
            sensors[idx] = _build(SensorSpec, {**dataclasses.asdict(sensors[idx]), **entry}, where)

    def section(name, cls, keys, default):
        if name not in data:
            return default
        _check_keys(data[name], keys, name)
        return _build(cls, {**dataclasses.asdict(default), **data[name]}, name)

    radio = section("radio", RadioProfile, _RADIO_KEYS, base.radio)
    battery = section("battery", BatteryModel, _BATTERY_KEYS, base.battery)
    buffer = section("buffer", BufferModel, _BUFFER_KEYS, base.buffer)

    compute = dict(base.compute)
    for i, entry in enumerate(data.get("compute", [])):
        where = f"compute[{i}]"
        _check_keys(entry, _COMPUTE_KEYS, where)
        for key in ("sensor", "label", "e_c_j_per_day"):
            if key not in entry:
                raise ValidationError(f"{where}.{key}", "required")
        try:
            label = ComputeLabel(entry["label"])
        except ValueError:
            raise ValidationError(f"{where}.label", f"unknown label {entry['label']!r}") from None
        profile = _build(ComputeProfile, {
            "e_c_j_per_day": entry["e_c_j_per_day"],
            "label": label,
            "calibrated": entry.get("calibrated", True),
        }, where)
        compute[(entry["sensor"], label)] = profile

    return Catalog(tuple(sensors), radio, battery, buffer, compute)


def catalog_to_dict(catalog: Catalog) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "sensors": [
            {**dataclasses.asdict(s), "rate_class": s.rate_class.value} for s in catalog.sensors
        ],
        "radio": dataclasses.asdict(catalog.radio),
        "battery": dataclasses.asdict(catalog.battery),
        "buffer": dataclasses.asdict(catalog.buffer),
        "compute": [
            {"sensor": sensor, "label": label.value,
             "e_c_j_per_day": p.e_c_j_per_day, "calibrated": p.calibrated}
            for (sensor, label), p in catalog.compute.items()
        ],
    }


def load_catalog(path) -> Catalog:
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        return default_catalog()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    return catalog_from_dict(data)


def save_catalog(catalog: Catalog, path) -> None:
    Path(path).write_text(json.dumps(catalog_to_dict(catalog), indent=2) + "\n", encoding="utf-8")
