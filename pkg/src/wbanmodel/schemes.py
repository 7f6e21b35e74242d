"""The four transmission schemes evaluated end to end, savings ratios and sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from . import cs
from .catalog import Catalog, ComputeLabel, ComputeProfile, RadioProfile, SensorSpec, default_catalog
from .energy import (
    SECONDS_PER_DAY,
    EnergyBreakdown,
    adc_extrapolated,
    battery_lifetime_days,
    per_packet_energy,
    sampling_energy_per_day,
    standby_saturated,
    transmission_energy_per_day,
)
from .errors import DomainError, MissingComputeProfile, RateOutOfRange
from .storage import DAYS_PER_MONTH, MONTHS_PER_YEAR, StorageEstimate, event_storage, yearly_storage


@dataclass(frozen=True)
class EventProfile:
    """Anomaly statistics. Rates are per 30-day month."""

    events_per_month: float
    event_duration_s: float
    transmit_extra_s: float = 0.0

    def __post_init__(self):
        for name in ("events_per_month", "event_duration_s", "transmit_extra_s"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")

    @classmethod
    def arrhythmia(cls, events_per_day: float, strip_s: float = 60.0) -> EventProfile:
        """One raw ECG strip per detected event; the event itself adds no airtime."""
        return cls(events_per_day * DAYS_PER_MONTH, 0.0, strip_s)

    @property
    def seconds_per_event(self) -> float:
        return self.event_duration_s + self.transmit_extra_s

    @property
    def duty_fraction(self) -> float:
        return self.events_per_month * self.seconds_per_event / (DAYS_PER_MONTH * SECONDS_PER_DAY)

    @property
    def active_seconds_per_year(self) -> float:
        return self.events_per_month * MONTHS_PER_YEAR * self.seconds_per_event


# 4.7 seizures per month lasting 3.8 min on average.
SEIZURE_DEFAULT = EventProfile(4.7, 228.0, 0.0)


class Latency(str, Enum):
    LOW = "Low"
    VARIES = "Varies"


class RawData(str, Enum):
    ALL = "AllRawData"
    PORTION = "PortionCollected"
    PORTION_COMPRESSED = "PortionCompressed"


class Extensibility(str, Enum):
    HIGH = "High"
    LOW = "Low"


@dataclass(frozen=True)
class Qualitative:
    latency: Latency
    raw_data: RawData
    extensibility: Extensibility


@dataclass(frozen=True)
class Baseline:
    name = "baseline"
    qualitative = Qualitative(Latency.LOW, RawData.ALL, Extensibility.HIGH)


@dataclass(frozen=True)
class Aggregation:
    """Pack ``samples_per_packet`` samples per radio packet (None = as many as fit)."""

    samples_per_packet: int | None = None
    name = "aggregate"
    qualitative = Qualitative(Latency.VARIES, RawData.ALL, Extensibility.HIGH)


@dataclass(frozen=True)
class AnomalyDriven:
    events: EventProfile = SEIZURE_DEFAULT
    compute: ComputeProfile | None = None
    name = "anomaly"
    qualitative = Qualitative(Latency.LOW, RawData.PORTION, Extensibility.LOW)


@dataclass(frozen=True)
class CsBased:
    """On-sensor CS processing.

    Event data is charged at the uncompressed rate by default, which is what
    the published CS energy table implies; storage is always divided by alpha.
    ``transmit_compressed=True`` divides the transmission term by alpha as well.
    """

    events: EventProfile = SEIZURE_DEFAULT
    compute: ComputeProfile | None = None
    cs_config: cs.CsConfig = field(default_factory=lambda: cs.CsConfig.from_alpha(256, 8))
    transmit_compressed: bool = False
    name = "cs"
    qualitative = Qualitative(Latency.LOW, RawData.PORTION_COMPRESSED, Extensibility.LOW)

    @property
    def alpha(self) -> float:
        return self.cs_config.alpha


SchemeConfig = Union[Baseline, Aggregation, AnomalyDriven, CsBased]


@dataclass(frozen=True)
class SchemeResult:
    sensor: str
    scheme: str
    f_s: float
    energy: EnergyBreakdown
    lifetime_days: float
    storage: StorageEstimate
    qualitative: Qualitative
    saturated: bool = False
    uncalibrated_compute: bool = False
    extrapolated_adc: bool = False


def max_samples_per_packet(spec: SensorSpec, radio: RadioProfile) -> int:
    payload_bits = 8 * radio.max_payload_bytes
    if spec.resolution_bits > payload_bits:
        raise DomainError(f"{spec.name}: a {spec.resolution_bits}-bit sample exceeds the {payload_bits}-bit payload")
    return payload_bits // spec.resolution_bits


def _resolve_compute(spec, scheme, catalog, allow_uncalibrated):
    label = ComputeLabel.TRADITIONAL_ANOMALY if isinstance(scheme, AnomalyDriven) else ComputeLabel.CS_BASED
    profile = scheme.compute or catalog.compute_profile(spec.name, label)
    if profile is None:
        raise MissingComputeProfile(f"no {label.value} compute profile for {spec.name}; pass one explicitly")
    if not profile.calibrated and not allow_uncalibrated:
        raise MissingComputeProfile(
            f"the {label.value} compute profile for {spec.name} is uncalibrated; supply e_c explicitly")
    return profile


def evaluate(spec: SensorSpec, scheme: SchemeConfig, f_s: float,
             catalog: Catalog | None = None, *, allow_out_of_range: bool = False,
             allow_uncalibrated: bool = False) -> SchemeResult:
    catalog = catalog or default_catalog()
    radio = catalog.radio
    if not allow_out_of_range and not spec.f_min_hz <= f_s <= spec.f_max_hz:
        raise RateOutOfRange(f"{spec.name}: f_s={f_s} Hz outside [{spec.f_min_hz}, {spec.f_max_hz}]")
    if f_s <= 0:
        raise RateOutOfRange("f_s must be > 0")

    e_s = sampling_energy_per_day(f_s, spec.resolution_bits)
    e_c = e_buf = 0.0
    uncalibrated = False

    if isinstance(scheme, Baseline):
        f_t = f_s
        e_t = transmission_energy_per_day(f_t, radio)
        storage = yearly_storage(f_s, spec.resolution_bits)
    elif isinstance(scheme, Aggregation):
        k_max = max_samples_per_packet(spec, radio)
        k = k_max if scheme.samples_per_packet is None else scheme.samples_per_packet
        if not 1 <= k <= k_max:
            raise DomainError(f"{spec.name}: samples_per_packet must lie in [1, {k_max}], got {k}")
        f_t = f_s / k
        e_t = transmission_energy_per_day(f_t, radio)
        e_buf = catalog.buffer.energy_j_per_day
        storage = yearly_storage(f_s, spec.resolution_bits)
    elif isinstance(scheme, (AnomalyDriven, CsBased)):
        profile = _resolve_compute(spec, scheme, catalog, allow_uncalibrated)
        uncalibrated = not profile.calibrated
        e_c = profile.e_c_j_per_day
        f_t = f_s
        e_t = scheme.events.duty_fraction * transmission_energy_per_day(f_t, radio)
        alpha = 1.0
        if isinstance(scheme, CsBased):
            alpha = scheme.alpha
            if scheme.transmit_compressed:
                e_t /= alpha
        storage = event_storage(scheme.events.active_seconds_per_year, f_s, spec.resolution_bits, alpha)
    else:
        raise TypeError(f"unknown scheme {scheme!r}")

    energy = EnergyBreakdown(e_s=e_s, e_t=e_t, e_c=e_c, e_buf=e_buf)
    return SchemeResult(
        sensor=spec.name,
        scheme=scheme.name,
        f_s=f_s,
        energy=energy,
        lifetime_days=battery_lifetime_days(energy.e_total, catalog.battery),
        storage=storage,
        qualitative=scheme.qualitative,
        saturated=standby_saturated(f_t, radio),
        uncalibrated_compute=uncalibrated,
        extrapolated_adc=adc_extrapolated(spec.resolution_bits),
    )


class Metric(str, Enum):
    ENERGY = "energy"
    STORAGE = "storage"


def _metric(result: SchemeResult, metric: Metric) -> float:
    if Metric(metric) is Metric.ENERGY:
        return result.energy.e_total
    return result.storage.bytes_per_year


def savings_ratio(baseline: SchemeResult, other: SchemeResult, metric: Metric = Metric.ENERGY) -> float:
    denom = _metric(other, metric)
    if denom == 0:
        raise ZeroDivisionError(f"{other.scheme} has zero {Metric(metric).value}")
    return _metric(baseline, metric) / denom


def strip_energy(f_s: float, radio: RadioProfile, strip_s: float = 60.0) -> float:
    """Energy to send one raw strip of ``strip_s`` seconds at one sample per packet."""
    return strip_s * f_s * per_packet_energy(f_s, radio)


def integer_grid(start: int, stop: int, step: int = 1) -> list[int]:
    """Inclusive grid start, start+step, ..., <= stop."""
    if step <= 0 or stop < start:
        raise ValueError(f"empty grid: start={start}, stop={stop}, step={step}")
    return list(range(start, stop + 1, step))


def geometric_grid(start: float, stop: float, factor: float = 2.0) -> list[float]:
    if start <= 0 or stop < start or factor <= 1:
        raise ValueError(f"empty grid: start={start}, stop={stop}, factor={factor}")
    out, v = [], float(start)
    while v <= stop * (1 + 1e-12):
        out.append(v)
        v *= factor
    return out


def sweep_arrhythmia(spec: SensorSpec, n_events_per_day, compute: ComputeProfile,
                     kind: str = "anomaly", f_s: float | None = None,
                     catalog: Catalog | None = None, alpha: float = 8.0,
                     strip_s: float = 60.0) -> list[tuple[float, SchemeResult]]:
    """Evaluate the ECG-style event scheme at each events-per-day value."""
    f_s = spec.f_max_hz if f_s is None else f_s
    points = []
    for n in n_events_per_day:
        if n < 0:
            raise ValueError("events per day must be >= 0")
        events = EventProfile.arrhythmia(n, strip_s)
        if kind == "anomaly":
            scheme = AnomalyDriven(events, compute)
        elif kind == "cs":
            scheme = CsBased(events, compute, cs.CsConfig.from_alpha(256, alpha))
        else:
            raise ValueError(f"unknown sweep scheme {kind!r}")
        points.append((n, evaluate(spec, scheme, f_s, catalog, allow_uncalibrated=True)))
    return points


def sweep_compression(alphas, spec: SensorSpec | None = None, f_s: float | None = None,
                      catalog: Catalog | None = None, compute: ComputeProfile | None = None,
                      events: EventProfile = SEIZURE_DEFAULT, n: int = 256, k: int = 8,
                      trials: int = 200, seed: int = 0, orthonormal: bool = False):
    """Storage/energy of the CS scheme and projection distortion for each alpha."""
    catalog = catalog or default_catalog()
    spec = spec or catalog.sensor("EEG")
    f_s = spec.f_max_hz if f_s is None else f_s
    points = []
    for alpha in alphas:
        cfg = cs.CsConfig.from_alpha(n, alpha, seed)
        result = evaluate(spec, CsBased(events, compute, cfg), f_s, catalog, allow_uncalibrated=True)
        stats = cs.inner_product_distortion(cfg, trials, k, orthonormal=orthonormal)
        points.append((alpha, result, stats))
    return points


def qualitative_comparison() -> dict[str, Qualitative]:
    return {
        "Baseline": Baseline.qualitative,
        "Aggregation": Aggregation.qualitative,
        "AnomalyDriven": AnomalyDriven.qualitative,
        "CsBased": CsBased.qualitative,
    }
