"""Energy and storage model for wireless body-area network sensors."""
from .catalog import (
    BatteryModel,
    BufferModel,
    Catalog,
    ComputeLabel,
    ComputeProfile,
    RadioProfile,
    RateClass,
    SensorSpec,
    default_catalog,
    load_catalog,
    max_transmission_rate_bits,
)
from .cs import CsConfig, compress, derive_compressed_operator, inner_product_distortion, make_projection
from .energy import (
    EnergyBreakdown,
    adc_energy_bound,
    battery_lifetime_days,
    enob_from_snr,
    per_packet_energy,
    sampling_energy_per_day,
    transmission_energy_per_day,
)
from .schemes import (
    SEIZURE_DEFAULT,
    Aggregation,
    AnomalyDriven,
    Baseline,
    CsBased,
    EventProfile,
    evaluate,
    max_samples_per_packet,
    qualitative_comparison,
    savings_ratio,
)
from .storage import StorageEstimate, event_storage, yearly_storage

__version__ = "0.1.0"
