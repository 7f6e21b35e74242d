import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wbanmodel.catalog import BatteryModel, RadioProfile, default_catalog
from wbanmodel.energy import (
    EnergyBreakdown,
    adc_energy_bound,
    adc_extrapolated,
    battery_lifetime_days,
    enob_from_snr,
    per_packet_energy,
    sampling_energy_per_day,
    standby_saturated,
    transmission_energy_per_day,
)
from wbanmodel.errors import DomainError

RADIO = RadioProfile()
# exact-arithmetic constants for the oracle
T_SEND, P_SEND, P_STANDBY = F(26, 10000), F(305, 10000), F(25, 10_000_000)


def packet_oracle(f_t):
    """Cycle energy in exact rationals, standby clamped at zero."""
    period = 1 / F(f_t)
    return T_SEND * P_SEND + max(F(0), period - T_SEND) * P_STANDBY


@pytest.mark.parametrize("snr, enob", [(74.0, 12.0), (7.78, 1.0), (1.77, 0.01 / 6.02)])
def test_enob(snr, enob):
    assert enob_from_snr(snr) == pytest.approx(enob)


@pytest.mark.parametrize("snr", [1.76, 1.0, -3.0])
def test_enob_domain(snr):
    with pytest.raises(DomainError):
        enob_from_snr(snr)


@pytest.mark.parametrize("n, pj", [(9, 1), (12, 64), (16, 16384), (8, 0.25)])
def test_adc_bound(n, pj):
    assert adc_energy_bound(n) == pytest.approx(pj * 1e-12, rel=1e-15)


def test_adc_extrapolation_flag():
    assert not adc_extrapolated(8) and not adc_extrapolated(16)
    assert adc_extrapolated(6) and adc_extrapolated(20)
    assert adc_energy_bound(20) == pytest.approx(4.0 ** 11 * 1e-12)


@pytest.mark.parametrize("f_s, bits, expected", [
    (100, 16, 0.1415577600),   # blood pressure, 1e-1 in the E_s table
    (1000, 12, 5.5296e-3),     # EEG, 5e-3
    (8, 10, 2.7648e-6),        # heart rate at 8 Hz, 2e-6
    (2, 10, 6.912e-7),
])
def test_sampling_energy(f_s, bits, expected):
    assert sampling_energy_per_day(f_s, bits) == pytest.approx(expected, rel=1e-12)


def test_sampling_energy_domain():
    with pytest.raises(DomainError):
        sampling_energy_per_day(0, 12)


@pytest.mark.parametrize("f_t", [8, 400, 0.001, 2, 100, 1 / 0.0026])
def test_per_packet_matches_exact_oracle(f_t):
    assert per_packet_energy(f_t, RADIO) == pytest.approx(float(packet_oracle(f_t)), rel=1e-12)


def test_per_packet_examples():
    assert per_packet_energy(8, RADIO) == pytest.approx(79.60594e-6, rel=1e-6)
    # 2.5 ms period < 2.6 ms send time: standby clamped, exactly the send energy
    assert per_packet_energy(400, RADIO) == RADIO.t_send_s * RADIO.p_send_w
    assert standby_saturated(400, RADIO)
    assert not standby_saturated(8, RADIO)
    assert per_packet_energy(0.001, RADIO) == pytest.approx(2.5792935e-3, rel=1e-6)


@pytest.mark.parametrize("f_t, published", [(2, 13.99), (8, 55.23), (100, 686.88), (1000, 6868.8),
                                            (400, 2747.52), (1, 7.13)])
def test_transmission_energy_vs_published(f_t, published):
    assert transmission_energy_per_day(f_t, RADIO) == pytest.approx(published, rel=0.02)


def test_transmission_energy_oracle():
    for f_t in (2, 100, 1000):
        exact = packet_oracle(f_t) * f_t * 86400
        assert transmission_energy_per_day(f_t, RADIO) == pytest.approx(float(exact), rel=1e-12)


def test_per_packet_domain():
    with pytest.raises(DomainError):
        per_packet_energy(0, RADIO)


@pytest.mark.parametrize("e, cap, days", [(0.64, 2700, 4218.75), (2700, 2700, 1.0)])
def test_lifetime(e, cap, days):
    assert battery_lifetime_days(e, BatteryModel(cap)) == pytest.approx(days, rel=1e-12)


def test_lifetime_published_eeg():
    assert battery_lifetime_days(6868.8, BatteryModel()) == pytest.approx(0.39, rel=0.02)


def test_lifetime_domain():
    with pytest.raises(DomainError):
        battery_lifetime_days(0, BatteryModel())


rates = st.floats(1e-4, 1e4, allow_nan=False)


@given(rates, rates)
def test_transmission_energy_increasing(a, b):
    lo, hi = sorted((a, b))
    if hi > lo * (1 + 1e-9):
        assert transmission_energy_per_day(lo, RADIO) < transmission_energy_per_day(hi, RADIO)


@given(rates, rates)
def test_per_packet_nonincreasing(a, b):
    lo, hi = sorted((a, b))
    assert per_packet_energy(hi, RADIO) <= per_packet_energy(lo, RADIO)


def test_per_packet_floor_at_send_rate():
    floor = RADIO.t_send_s * RADIO.p_send_w
    f_sat = 1 / RADIO.t_send_s
    assert per_packet_energy(f_sat, RADIO) == floor
    assert per_packet_energy(f_sat * 2, RADIO) == floor
    assert per_packet_energy(f_sat * 0.999, RADIO) > floor


@given(st.floats(1e-3, 1e5), st.floats(1e-3, 1e5), st.floats(1, 1e5))
def test_lifetime_monotone_and_linear(e1, e2, cap):
    lo, hi = sorted((e1, e2))
    b = BatteryModel(cap)
    if hi > lo:
        assert battery_lifetime_days(hi, b) < battery_lifetime_days(lo, b)
    assert battery_lifetime_days(e1, BatteryModel(2 * cap)) == pytest.approx(
        2 * battery_lifetime_days(e1, b), rel=1e-12)


@given(*[st.floats(0, 1e4) for _ in range(4)])
def test_breakdown_sum_identity(e_s, e_t, e_c, e_buf):
    e = EnergyBreakdown(e_s, e_t, e_c, e_buf)
    assert e.e_total == e_s + e_t + e_c + e_buf


def test_breakdown_rejects_negative():
    with pytest.raises(DomainError):
        EnergyBreakdown(e_t=-1.0)


def test_sampling_negligible_at_max_rate():
    for s in default_catalog().sensors:
        e_s = sampling_energy_per_day(s.f_max_hz, s.resolution_bits)
        e_total = e_s + transmission_energy_per_day(s.f_max_hz, RADIO)
        assert e_s / e_total < 1e-3, s.name
