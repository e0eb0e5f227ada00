"""Sea-level index-point compilation service.

Georeferenced, age-dated sea-level observations organized by area,
publication and indicator, with age-scale standardization, per-area
chart series with error bars, CSV export, and a REST API on top.
"""

from .domain import (
    Age,
    Area,
    GeoPoint,
    Indicator,
    Observation,
    ObservationDraft,
    Publication,
    VerticalLandMovement,
    VlmDraft,
    age_plot_geometry,
    bp_to_calendar,
    validate_geopoint,
    validate_observation,
    validate_vlm,
)
from .store import BoundingBox, Store, StoreSnapshot

__version__ = "0.1.0"

__all__ = [
    "Age",
    "Area",
    "BoundingBox",
    "GeoPoint",
    "Indicator",
    "Observation",
    "ObservationDraft",
    "Publication",
    "Store",
    "StoreSnapshot",
    "VerticalLandMovement",
    "VlmDraft",
    "age_plot_geometry",
    "bp_to_calendar",
    "validate_geopoint",
    "validate_observation",
    "validate_vlm",
    "__version__",
]
