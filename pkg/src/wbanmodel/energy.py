"""Per-day energy of sampling and cyclic radio transmission, and battery lifetime."""
from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import BatteryModel, RadioProfile
from .errors import DomainError

SECONDS_PER_DAY = 86400
PICOJOULE = 1e-12
# Medium-resolution ADC regime where the 4^(N-9) pJ bound was fitted.
ADC_FIT_RANGE = (8, 16)


@dataclass(frozen=True)
class EnergyBreakdown:
    """Daily energy split, J/day. ``e_total`` is derived and never passed in."""

    e_s: float = 0.0
    e_t: float = 0.0
    e_c: float = 0.0
    e_buf: float = 0.0
    e_total: float = field(init=False)

    def __post_init__(self):
        for name in ("e_s", "e_t", "e_c", "e_buf"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        object.__setattr__(self, "e_total", self.e_s + self.e_t + self.e_c + self.e_buf)


def enob_from_snr(snr_db: float) -> float:
    if snr_db <= 1.76:
        raise DomainError(f"SNR of {snr_db} dB leaves no effective bits (need > 1.76 dB)")
    return (snr_db - 1.76) / 6.02


def adc_extrapolated(n_bits: int) -> bool:
    lo, hi = ADC_FIT_RANGE
    return not lo <= n_bits <= hi


def adc_energy_bound(n_bits: int) -> float:
    """Upper bound on ADC energy per conversion, in joules.

    Uses ENOB <= N - 1, so the bound 4^(ENOB+1-9) pJ becomes 4^(N-9) pJ.
    Outside 8..16 bits the same formula is returned; check
    :func:`adc_extrapolated` to flag those results.
    """
    return 4.0 ** (n_bits - 9) * PICOJOULE


def sampling_energy_per_day(f_s: float, n_bits: int) -> float:
    if f_s <= 0:
        raise DomainError("sampling rate must be > 0")
    return f_s * SECONDS_PER_DAY * adc_energy_bound(n_bits)


def standby_time(f_t: float, radio: RadioProfile) -> float:
    # Clamped at zero: above 1/t_send the radio never idles.
    return max(0.0, 1.0 / f_t - radio.t_send_s)


def standby_saturated(f_t: float, radio: RadioProfile) -> bool:
    """True when the packet period is no longer than the send time."""
    return 1.0 / f_t <= radio.t_send_s


def per_packet_energy(f_t: float, radio: RadioProfile) -> float:
    """Energy of one send/standby cycle at packet rate ``f_t`` (J)."""
    if f_t <= 0:
        raise DomainError("transmission rate must be > 0")
    return radio.t_send_s * radio.p_send_w + standby_time(f_t, radio) * radio.p_standby_w


def transmission_energy_per_day(f_t: float, radio: RadioProfile) -> float:
    return per_packet_energy(f_t, radio) * f_t * SECONDS_PER_DAY


def battery_lifetime_days(e_total: float, battery: BatteryModel) -> float:
    if e_total <= 0:
        raise DomainError("total energy must be > 0 to compute a lifetime")
    return battery.capacity_j / e_total
