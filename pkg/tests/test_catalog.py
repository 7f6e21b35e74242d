import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wbanmodel.catalog import (
    Catalog,
    ComputeLabel,
    RadioProfile,
    RateClass,
    SensorSpec,
    catalog_from_dict,
    catalog_to_dict,
    default_catalog,
    load_catalog,
    max_transmission_rate_bits,
    save_catalog,
)
from wbanmodel.errors import ParseError, ValidationError


def test_default_catalog_has_eight_sensors():
    cat = default_catalog()
    assert len(cat.sensors) == 8
    assert cat.names == ["HeartRate", "BloodPressure", "OxygenSaturation", "Temperature",
                         "BloodSugar", "Accelerometer", "ECG", "EEG"]


@pytest.mark.parametrize("name, bits, lo, hi, cls", [
    ("HeartRate", 10, 2, 8, RateClass.LOW),
    ("EEG", 12, 100, 1000, RateClass.HIGH),
    ("OxygenSaturation", 8, 0.001, 2, RateClass.LOW),
    ("ECG", 12, 100, 1000, RateClass.HIGH),
])
def test_default_sensor_rows(name, bits, lo, hi, cls):
    s = default_catalog().sensor(name)
    assert (s.resolution_bits, s.f_min_hz, s.f_max_hz, s.rate_class) == (bits, lo, hi, cls)


def test_high_rate_class_only_for_ecg_eeg():
    high = {s.name for s in default_catalog().sensors if s.rate_class is RateClass.HIGH}
    assert high == {"ECG", "EEG"}


def test_default_hardware():
    cat = default_catalog()
    assert cat.radio == RadioProfile(2.6e-3, 30.5e-3, 2.5e-6, 2.5, 20)
    assert cat.battery.capacity_j == 2700
    assert (cat.buffer.cells, cat.buffer.energy_j_per_day) == (160, 0.43)
    assert cat.compute_profile("EEG", ComputeLabel.TRADITIONAL_ANOMALY).e_c_j_per_day == 35.99
    assert cat.compute_profile("EEG", ComputeLabel.CS_BASED).e_c_j_per_day == 6.65
    assert not cat.compute_profile("ECG", ComputeLabel.CS_BASED).calibrated


@pytest.mark.parametrize("name, rate", [("EEG", 12000), ("HeartRate", 80), ("Accelerometer", 4800),
                                        ("Temperature", 8), ("BloodSugar", 1600)])
def test_max_transmission_rate(name, rate):
    assert max_transmission_rate_bits(default_catalog().sensor(name)) == rate


def test_max_transmission_rate_trivial():
    assert max_transmission_rate_bits(SensorSpec("x", 1, 1, 1)) == 1


def test_rates_below_ble_cap():
    assert all(max_transmission_rate_bits(s) < 270_000 for s in default_catalog().sensors)


def test_unknown_sensor_lists_names():
    with pytest.raises(KeyError, match="HeartRate"):
        default_catalog().sensor("Glucose")


@pytest.mark.parametrize("kwargs, field", [
    (dict(name="x", resolution_bits=0, f_min_hz=1, f_max_hz=2), "resolution_bits"),
    (dict(name="x", resolution_bits=33, f_min_hz=1, f_max_hz=2), "resolution_bits"),
    (dict(name="x", resolution_bits=8, f_min_hz=0, f_max_hz=2), "f_min_hz"),
    (dict(name="x", resolution_bits=8, f_min_hz=3, f_max_hz=2), "f_min_hz"),
    (dict(name="", resolution_bits=8, f_min_hz=1, f_max_hz=2), "name"),
])
def test_sensor_invariants(kwargs, field):
    with pytest.raises(ValidationError) as exc:
        SensorSpec(**kwargs)
    assert exc.value.field == field


def test_radio_invariants():
    with pytest.raises(ValidationError, match="p_send_w"):
        RadioProfile(p_send_w=1e-6, p_standby_w=2e-6)
    with pytest.raises(ValidationError, match="max_payload_bytes"):
        RadioProfile(max_payload_bytes=0)


@given(st.floats(1e-4, 1e4), st.floats(1e-4, 1e4), st.integers(1, 32))
def test_sensor_accepts_ordered_ranges(a, b, bits):
    lo, hi = sorted((a, b))
    s = SensorSpec("s", bits, lo, hi)
    assert s.f_min_hz <= s.f_max_hz


def test_load_override_p_send(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"schema_version": 1, "radio": {"p_send_w": 0.025}}))
    cat = load_catalog(path)
    assert cat.radio.p_send_w == 0.025
    assert cat.radio.t_send_s == 2.6e-3
    assert cat.sensors == default_catalog().sensors
    assert cat.battery == default_catalog().battery


def test_load_f_min_above_f_max(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"sensors": [{"name": "EEG", "f_min_hz": 2000}]}))
    with pytest.raises(ValidationError) as exc:
        load_catalog(path)
    assert exc.value.field == "sensors[0].f_min_hz"


def test_load_empty_file(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text("")
    assert load_catalog(path) == default_catalog()


def test_load_malformed(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_catalog(path)


@pytest.mark.parametrize("data, field", [
    ({"schema_version": 2}, "schema_version"),
    ({"radio": {"p_send_mw": 25}}, "radio.p_send_mw"),
    ({"battery": {"capacity_j": -1}}, "battery.capacity_j"),
    ({"sensors": [{"name": "New", "resolution_bits": 8}]}, "sensors[0]"),
    ({"compute": [{"sensor": "ECG", "label": "Magic", "e_c_j_per_day": 1}]}, "compute[0].label"),
])
def test_config_validation_names_field(data, field):
    with pytest.raises(ValidationError) as exc:
        catalog_from_dict(data)
    assert exc.value.field.startswith(field)


def test_config_adds_sensor_and_compute():
    cat = catalog_from_dict({
        "sensors": [{"name": "Respiration", "resolution_bits": 8, "f_min_hz": 1,
                     "f_max_hz": 25, "rate_class": "LowSampleRate"}],
        "compute": [{"sensor": "ECG", "label": "CsBased", "e_c_j_per_day": 3.0}],
    })
    assert cat.sensor("Respiration").f_max_hz == 25
    p = cat.compute_profile("ECG", ComputeLabel.CS_BASED)
    assert p.e_c_j_per_day == 3.0 and p.calibrated


def test_rate_class_is_stored_not_inferred():
    cat = catalog_from_dict({"sensors": [{"name": "EEG", "rate_class": "LowSampleRate"}]})
    assert cat.sensor("EEG").rate_class is RateClass.LOW


def test_round_trip(tmp_path):
    path = tmp_path / "cat.json"
    save_catalog(default_catalog(), path)
    assert load_catalog(path) == default_catalog()
    assert catalog_from_dict(catalog_to_dict(default_catalog())) == default_catalog()


def test_catalog_is_immutable():
    cat = default_catalog()
    with pytest.raises(AttributeError):
        cat.radio = RadioProfile()
    with pytest.raises(AttributeError):
        cat.sensors[0].f_max_hz = 1


def test_duplicate_names_rejected():
    s = SensorSpec("a", 8, 1, 2)
    with pytest.raises(ValidationError):
        Catalog(sensors=(s, s))
