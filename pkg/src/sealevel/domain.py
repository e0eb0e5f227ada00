"""Core types and validation rules for sea-level index points.

Ages live on the astronomical calendar scale (year 0 = 1 BC, negative
years earlier) as plain floats. Values entered on the Before Present
scale are converted on the way in: calendar_year = 1950 - age_bp.
Any BC/AD labelling is a display concern, never a storage one.

Everything here is a pure value operation: deterministic, side-effect
free, safe from any number of threads.
"""

import math
from dataclasses import dataclass

BP_DATUM_YEAR = 1950.0

ABSOLUTE = "absolute"
RELATIVE = "relative"

SCALE_BP = "BP"
SCALE_ADBC = "ADBC"

PUBLICATION_YEAR_MIN = 1500
PUBLICATION_YEAR_MAX = 2200


class DomainError(Exception):
    """A value failed a domain rule.

    ``code`` is a stable machine-readable name (mirrors the class name);
    ``field`` names the offending input where one can be singled out.
    """

    code = "DomainError"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class LatitudeOutOfRange(DomainError):
    code = "LatitudeOutOfRange"


class LongitudeOutOfRange(DomainError):
    code = "LongitudeOutOfRange"


class NonFiniteCoordinate(DomainError):
    code = "NonFiniteCoordinate"


class NonFiniteInput(DomainError):
    code = "NonFiniteInput"


class NonFiniteField(DomainError):
    code = "NonFiniteField"


class NegativeError(DomainError):
    code = "NegativeError"


class InvertedLimits(DomainError):
    code = "InvertedLimits"


class InvertedInterval(DomainError):
    code = "InvertedInterval"


class EmptyName(DomainError):
    code = "EmptyName"


class YearOutOfRange(DomainError):
    code = "YearOutOfRange"


def _finite(value: float, exc: type[DomainError], field: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise exc(f"{field} must be finite, got {value!r}", field=field)
    return value


@dataclass(frozen=True)
class GeoPoint:
    """WGS84 coordinates in decimal degrees; bounds checked on construction."""

    latitude: float
    longitude: float

    def __post_init__(self):
        lat = _finite(self.latitude, NonFiniteCoordinate, "latitude")
        lon = _finite(self.longitude, NonFiniteCoordinate, "longitude")
        if not -90.0 <= lat <= 90.0:
            raise LatitudeOutOfRange(
                f"latitude must be between -90 and 90 degrees, got {lat}",
                field="latitude",
            )
        if not -180.0 <= lon <= 180.0:
            raise LongitudeOutOfRange(
                f"longitude must be between -180 and 180 degrees, got {lon}",
                field="longitude",
            )
        object.__setattr__(self, "latitude", lat)
        object.__setattr__(self, "longitude", lon)


@dataclass(frozen=True)
class Age:
    """A single calendar year (absolute) or an ordered pair of limits (relative).

    Exactly the fields of the active kind are populated; relative limits
    are stored with lower <= upper by year value.
    """

    kind: str
    value: float | None = None
    lower: float | None = None
    upper: float | None = None

    def __post_init__(self):
        if self.kind == ABSOLUTE:
            if self.value is None or self.lower is not None or self.upper is not None:
                raise ValueError("an absolute age carries exactly one value")
            object.__setattr__(self, "value", _finite(self.value, NonFiniteField, "age.value"))
        elif self.kind == RELATIVE:
            if self.value is not None or self.lower is None or self.upper is None:
                raise ValueError("a relative age carries exactly lower and upper limits")
            lower = _finite(self.lower, NonFiniteField, "age.lower")
            upper = _finite(self.upper, NonFiniteField, "age.upper")
            if lower > upper:
                raise InvertedLimits(
                    f"lower limit {lower} exceeds upper limit {upper}",
                    field="age.lower",
                )
            object.__setattr__(self, "lower", lower)
            object.__setattr__(self, "upper", upper)
        else:
            raise ValueError(f"unknown age kind {self.kind!r}")

    @classmethod
    def absolute(cls, value: float) -> "Age":
        return cls(ABSOLUTE, value=value)

    @classmethod
    def relative(cls, lower: float, upper: float) -> "Age":
        return cls(RELATIVE, lower=lower, upper=upper)


@dataclass(frozen=True)
class Area:
    id: int
    name: str


@dataclass(frozen=True)
class Indicator:
    id: int
    name: str


@dataclass(frozen=True)
class Publication:
    id: int
    title: str
    authors: str
    year: int


@dataclass(frozen=True)
class Observation:
    """A georeferenced sample: height relative to present local mean sea
    level (m, positive above), the indicator-derived height error (m),
    references to its area/publication/indicator, and one age."""

    id: int
    location: GeoPoint
    height: float
    error: float
    area_id: int
    publication_id: int
    indicator_id: int
    age: Age


@dataclass(frozen=True)
class VerticalLandMovement:
    """A velocity record in mm/yr (positive = uplift) over an age interval."""

    id: int
    location: GeoPoint
    age_start: float
    age_end: float
    velocity: float
    area_id: int


@dataclass(frozen=True)
class ObservationDraft:
    """A validated observation payload, ready for the store (no id yet)."""

    location: GeoPoint
    height: float
    error: float
    area_id: int
    publication_id: int
    indicator_id: int
    age: Age


@dataclass(frozen=True)
class VlmDraft:
    """A validated vertical-land-movement payload (no id yet)."""

    location: GeoPoint
    age_start: float
    age_end: float
    velocity: float
    area_id: int


def validate_geopoint(latitude: float, longitude: float) -> GeoPoint:
    """Accept exactly the closed box [-90, 90] x [-180, 180].

    Inputs must already be parsed numbers; parsing is the caller's job.
    """
    return GeoPoint(latitude, longitude)


def bp_to_calendar(age_bp: float) -> float:
    """Convert a Before Present age to a calendar year: 1950 - age_bp."""
    age_bp = float(age_bp)
    if not math.isfinite(age_bp):
        raise NonFiniteInput(f"age must be finite, got {age_bp!r}")
    return BP_DATUM_YEAR - age_bp


def validate_observation(
    *,
    latitude: float,
    longitude: float,
    height: float,
    error: float,
    area_id: int,
    publication_id: int,
    indicator_id: int,
    age_kind: str,
    age_scale: str = SCALE_ADBC,
    age_value: float | None = None,
    age_lower: float | None = None,
    age_upper: float | None = None,
) -> ObservationDraft:
    """Normalize a raw observation entry into a storable payload.

    When ``age_scale`` is ``"BP"`` every age input is converted with
    :func:`bp_to_calendar` before the limits are ordered: the conversion
    reverses the order of correctly entered BP limits, so the pair is
    sorted rather than rejected. ``"ADBC"`` input passes through
    unchanged. Referenced ids are taken at face value; the store checks
    that they resolve.
    """
    if age_scale not in (SCALE_BP, SCALE_ADBC):
        raise ValueError(f"age_scale must be {SCALE_BP!r} or {SCALE_ADBC!r}, got {age_scale!r}")
    if age_kind not in (ABSOLUTE, RELATIVE):
        raise ValueError(f"age_kind must be {ABSOLUTE!r} or {RELATIVE!r}, got {age_kind!r}")

    location = validate_geopoint(latitude, longitude)
    height = _finite(height, NonFiniteField, "height")
    error = _finite(error, NonFiniteField, "error")
    if error < 0:
        raise NegativeError(f"error must be >= 0 meters, got {error}", field="error")

    def to_calendar(raw: float, field: str) -> float:
        raw = _finite(raw, NonFiniteField, field)
        return bp_to_calendar(raw) if age_scale == SCALE_BP else raw

    if age_kind == ABSOLUTE:
        if age_value is None:
            raise ValueError("an absolute age requires age_value")
        age = Age.absolute(to_calendar(age_value, "age.value"))
    else:
        if age_lower is None or age_upper is None:
            raise ValueError("a relative age requires age_lower and age_upper")
        first = to_calendar(age_lower, "age.lower")
        second = to_calendar(age_upper, "age.upper")
        age = Age.relative(min(first, second), max(first, second))

    return ObservationDraft(
        location=location,
        height=height,
        error=error,
        area_id=area_id,
        publication_id=publication_id,
        indicator_id=indicator_id,
        age=age,
    )


def validate_vlm(
    *,
    latitude: float,
    longitude: float,
    age_start: float,
    age_end: float,
    velocity: float,
    area_id: int,
) -> VlmDraft:
    """Validate a vertical-land-movement entry.

    Unlike relative age limits there is no scale conversion here, so an
    inverted interval is a data-entry error, not a normalization case.
    """
    location = validate_geopoint(latitude, longitude)
    age_start = _finite(age_start, NonFiniteField, "age_start")
    age_end = _finite(age_end, NonFiniteField, "age_end")
    velocity = _finite(velocity, NonFiniteField, "velocity")
    if age_start > age_end:
        raise InvertedInterval(
            f"age_start {age_start} exceeds age_end {age_end}", field="age_start"
        )
    return VlmDraft(
        location=location,
        age_start=age_start,
        age_end=age_end,
        velocity=velocity,
        area_id=area_id,
    )


def age_plot_geometry(age: Age) -> tuple[float, float, float]:
    """Map an age to ``(center, minus, plus)`` for horizontal error bars.

    Absolute ages plot at their value with zero spread; relative ages plot
    at the interval midpoint with bars reaching back to each limit.
    """
    if age.kind == ABSOLUTE:
        return age.value, 0.0, 0.0
    center = (age.lower + age.upper) / 2.0
    return center, center - age.lower, age.upper - center
