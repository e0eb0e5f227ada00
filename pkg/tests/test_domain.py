"""Value-level rules: coordinates, age conversion, observation normalization."""

import math

import pytest
from hypothesis import given, strategies as st

from sealevel.domain import (
    Age,
    GeoPoint,
    InvertedInterval,
    InvertedLimits,
    LatitudeOutOfRange,
    LongitudeOutOfRange,
    NegativeError,
    NonFiniteCoordinate,
    NonFiniteField,
    NonFiniteInput,
    age_plot_geometry,
    bp_to_calendar,
    validate_geopoint,
    validate_observation,
    validate_vlm,
)

# Dyadic years (multiples of 2^-10): a wide, realistic slice of the age
# axis on which every subtraction below is exact in double precision.
dyadic_years = st.integers(-102_400_000, 102_400_000).map(lambda k: k / 1024.0)


class TestValidateGeopoint:
    def test_in_range_values_pass_unchanged(self):
        point = validate_geopoint(38.7, -9.1)
        assert point == GeoPoint(38.7, -9.1)

    def test_latitude_above_90_rejected(self):
        with pytest.raises(LatitudeOutOfRange) as exc:
            validate_geopoint(91.0, 0.0)
        assert exc.value.field == "latitude"

    def test_closed_interval_boundary_accepted(self):
        assert validate_geopoint(0.0, -180.0) == GeoPoint(0.0, -180.0)
        assert validate_geopoint(90.0, 180.0) == GeoPoint(90.0, 180.0)
        assert validate_geopoint(-90.0, 180.0) == GeoPoint(-90.0, 180.0)

    def test_longitude_out_of_range_rejected(self):
        with pytest.raises(LongitudeOutOfRange) as exc:
            validate_geopoint(0.0, 180.5)
        assert exc.value.field == "longitude"

    @pytest.mark.parametrize("lat,lon", [(float("nan"), 0.0), (0.0, float("inf")), (float("-inf"), 0.0)])
    def test_non_finite_rejected(self, lat, lon):
        with pytest.raises(NonFiniteCoordinate):
            validate_geopoint(lat, lon)

    @given(
        lat=st.floats(min_value=-120, max_value=120, allow_nan=False),
        lon=st.floats(min_value=-240, max_value=240, allow_nan=False),
    )
    def test_accepts_exactly_the_closed_box(self, lat, lon):
        inside = -90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0
        if inside:
            assert validate_geopoint(lat, lon) == GeoPoint(lat, lon)
        else:
            with pytest.raises((LatitudeOutOfRange, LongitudeOutOfRange)):
                validate_geopoint(lat, lon)


class TestBpToCalendar:
    def test_bp_zero_is_1950(self):
        assert bp_to_calendar(0) == 1950.0

    def test_fixed_point_maps_to_year_zero(self):
        assert bp_to_calendar(1950) == 0.0

    def test_holocene_boundary(self):
        # 1950 - 11700, checkable by hand
        assert bp_to_calendar(11700) == -9750.0

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(NonFiniteInput):
            bp_to_calendar(bad)

    @given(y=dyadic_years)
    def test_round_trip(self, y):
        assert bp_to_calendar(1950.0 - y) == y

    @given(a=dyadic_years, b=dyadic_years)
    def test_strictly_decreasing(self, a, b):
        if a < b:
            assert bp_to_calendar(a) > bp_to_calendar(b)
        elif a > b:
            assert bp_to_calendar(a) < bp_to_calendar(b)
        else:
            assert bp_to_calendar(a) == bp_to_calendar(b)


class TestValidateObservation:
    BASE = dict(
        latitude=38.7,
        longitude=-9.1,
        height=1.2,
        error=0.3,
        area_id=1,
        publication_id=1,
        indicator_id=1,
    )

    def test_absolute_bp_age_converted(self):
        draft = validate_observation(**self.BASE, age_kind="absolute", age_scale="BP", age_value=2500)
        assert draft.age == Age.absolute(-550.0)  # 1950 - 2500
        assert draft.height == 1.2 and draft.error == 0.3

    def test_relative_bp_limits_converted_and_reordered(self):
        draft = validate_observation(
            **self.BASE, age_kind="relative", age_scale="BP", age_lower=3000, age_upper=2000
        )
        # converting each limit gives (-1050, -50); stored ascending
        assert draft.age == Age.relative(-1050.0, -50.0)

    def test_negative_error_rejected(self):
        with pytest.raises(NegativeError) as exc:
            validate_observation(**{**self.BASE, "error": -0.1}, age_kind="absolute", age_value=1850)
        assert exc.value.field == "error"

    def test_coordinate_errors_propagate(self):
        with pytest.raises(LatitudeOutOfRange):
            validate_observation(**{**self.BASE, "latitude": 91.0}, age_kind="absolute", age_value=1850)

    @pytest.mark.parametrize("field", ["height", "error"])
    def test_non_finite_fields_rejected(self, field):
        with pytest.raises(NonFiniteField) as exc:
            validate_observation(**{**self.BASE, field: float("nan")}, age_kind="absolute", age_value=1850)
        assert exc.value.field == field

    def test_non_finite_age_rejected(self):
        with pytest.raises(NonFiniteField):
            validate_observation(**self.BASE, age_kind="absolute", age_scale="BP", age_value=float("inf"))

    @given(value=dyadic_years)
    def test_adbc_absolute_passes_through_unchanged(self, value):
        draft = validate_observation(**self.BASE, age_kind="absolute", age_scale="ADBC", age_value=value)
        assert draft.age.value == value

    @given(a=dyadic_years, b=dyadic_years)
    def test_adbc_relative_passes_through_ordered(self, a, b):
        draft = validate_observation(
            **self.BASE, age_kind="relative", age_scale="ADBC", age_lower=a, age_upper=b
        )
        assert (draft.age.lower, draft.age.upper) == (min(a, b), max(a, b))

    def test_unknown_scale_is_a_caller_error(self):
        with pytest.raises(ValueError):
            validate_observation(**self.BASE, age_kind="absolute", age_scale="bp", age_value=1850)


class TestAge:
    def test_inverted_limits_rejected_on_construction(self):
        with pytest.raises(InvertedLimits):
            Age.relative(100.0, -100.0)

    def test_mispopulated_fields_rejected(self):
        with pytest.raises(ValueError):
            Age(kind="absolute", value=1850.0, lower=0.0)
        with pytest.raises(ValueError):
            Age(kind="relative", lower=0.0)
        with pytest.raises(ValueError):
            Age(kind="either", value=1850.0)


class TestAgePlotGeometry:
    def test_absolute_has_no_horizontal_spread(self):
        assert age_plot_geometry(Age.absolute(1850)) == (1850.0, 0.0, 0.0)

    def test_relative_midpoint_and_half_widths(self):
        assert age_plot_geometry(Age.relative(-1050, -50)) == (-550.0, 500.0, 500.0)

    def test_degenerate_interval_collapses_to_a_point(self):
        assert age_plot_geometry(Age.relative(100, 100)) == (100.0, 0.0, 0.0)

    @given(a=dyadic_years, b=dyadic_years)
    def test_bars_reconstruct_the_limits(self, a, b):
        lower, upper = min(a, b), max(a, b)
        center, minus, plus = age_plot_geometry(Age.relative(lower, upper))
        assert minus >= 0.0 and plus >= 0.0
        assert center - minus == lower
        assert center + plus == upper


class TestValidateVlm:
    BASE = dict(latitude=38.7, longitude=-9.1, velocity=0.4, area_id=1)

    def test_valid_record(self):
        draft = validate_vlm(**self.BASE, age_start=-8000, age_end=1950)
        assert draft.age_start == -8000.0 and draft.age_end == 1950.0
        assert draft.velocity == 0.4

    def test_inverted_interval_rejected(self):
        with pytest.raises(InvertedInterval):
            validate_vlm(**self.BASE, age_start=1950, age_end=-8000)

    def test_degenerate_interval_allowed(self):
        draft = validate_vlm(**self.BASE, age_start=1950, age_end=1950)
        assert draft.age_start == draft.age_end

    def test_non_finite_velocity_rejected(self):
        with pytest.raises(NonFiniteField):
            validate_vlm(**{**self.BASE, "velocity": float("nan")}, age_start=0, age_end=1)
