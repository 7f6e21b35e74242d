import pytest
from hypothesis import given
from hypothesis import strategies as st

from wbanmodel.errors import DomainError
from wbanmodel.storage import SECONDS_PER_YEAR, StorageEstimate, event_storage, yearly_storage

SEIZURE_SECONDS = 4.7 * (365 / 30) * 228


def test_yearly_examples():
    eeg_min = yearly_storage(100, 12)
    assert eeg_min.bytes_per_year == 4_730_400_000
    assert round(eeg_min.display_mib, 2) == 4511.26
    assert yearly_storage(1000, 12).display_gib == pytest.approx(44.06, abs=0.005)
    assert yearly_storage(0, 12).bytes_per_year == 0


def test_binary_units():
    s = StorageEstimate(3 * 2**30)
    assert s.display_gib == 3 and s.display_mib == 3 * 1024


def test_event_examples():
    assert event_storage(SEIZURE_SECONDS, 100, 12).display_mib == pytest.approx(1.87, rel=0.01)
    assert event_storage(SEIZURE_SECONDS, 100, 12, 8).display_mib == pytest.approx(0.23, rel=0.02)
    assert event_storage(0, 1000, 12, 8).bytes_per_year == 0


def test_domain_errors():
    with pytest.raises(DomainError):
        yearly_storage(-1, 8)
    with pytest.raises(DomainError):
        event_storage(10, 1, 8, 0.5)
    with pytest.raises(DomainError):
        event_storage(-1, 1, 8)


@given(st.floats(0, 1e4), st.integers(1, 32), st.floats(0, 100))
def test_yearly_linear(f, bits, c):
    base = yearly_storage(f, bits).bytes_per_year
    assert yearly_storage(c * f, bits).bytes_per_year == pytest.approx(c * base, rel=1e-12, abs=1e-6)
    assert yearly_storage(f, 2 * bits).bytes_per_year == pytest.approx(2 * base, rel=1e-12)


# inputs stay in the normal-float range; subnormal products lose bits when halved
@given(st.just(0.0) | st.floats(1e-3, SECONDS_PER_YEAR), st.just(0.0) | st.floats(1e-6, 1e4), st.integers(1, 32),
       st.sampled_from([1, 2, 4, 8, 16, 32, 64]))
def test_compression_exact_power_of_two(sec, f, bits, alpha):
    assert event_storage(sec, f, bits, alpha).bytes_per_year * alpha == event_storage(sec, f, bits).bytes_per_year


@given(st.floats(0, SECONDS_PER_YEAR), st.floats(0, 1e4), st.integers(1, 32), st.floats(1, 1e3))
def test_compression_scaling(sec, f, bits, alpha):
    scaled = event_storage(sec, f, bits, alpha).bytes_per_year * alpha
    assert scaled == pytest.approx(event_storage(sec, f, bits).bytes_per_year, rel=1e-14)


@given(st.floats(0, SECONDS_PER_YEAR), st.floats(0, 1e4), st.integers(1, 32), st.floats(1, 1e3))
def test_event_never_exceeds_yearly(sec, f, bits, alpha):
    assert (event_storage(sec, f, bits, alpha).bytes_per_year
            <= yearly_storage(f, bits).bytes_per_year * (1 + 1e-12))
