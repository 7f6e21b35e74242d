"""Yearly storage of raw samples, continuous or event-driven."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

SECONDS_PER_YEAR = 31_536_000
DAYS_PER_MONTH = 30
MONTHS_PER_YEAR = 365 / DAYS_PER_MONTH
MIB = 2**20
GIB = 2**30


@dataclass(frozen=True)
class StorageEstimate:
    bytes_per_year: float

    def __post_init__(self):
        if self.bytes_per_year < 0:
            raise DomainError("storage cannot be negative")

    @property
    def display_mib(self) -> float:
        return self.bytes_per_year / MIB

    @property
    def display_gib(self) -> float:
        return self.bytes_per_year / GIB


def yearly_storage(f_s: float, n_bits: int) -> StorageEstimate:
    if f_s < 0:
        raise DomainError("sampling rate must be >= 0")
    return StorageEstimate(f_s * n_bits / 8 * SECONDS_PER_YEAR)


def event_storage(active_seconds_per_year: float, f_s: float, n_bits: int,
                  compression_ratio: float = 1.0) -> StorageEstimate:
    """Bytes kept per year when only event windows are stored, optionally compressed."""
    if active_seconds_per_year < 0:
        raise DomainError("active seconds must be >= 0")
    if compression_ratio < 1:
        raise DomainError("compression ratio must be >= 1")
    raw = active_seconds_per_year * f_s * n_bits / 8
    return StorageEstimate(raw / compression_ratio)
