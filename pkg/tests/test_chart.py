"""Chart series built from stored observations."""

import random

import pytest

from sealevel.chart import ChartPoint, all_areas_chart, build_chart
from sealevel.domain import Age
from sealevel.store import Store
from tests.test_store import make_draft, populate_random


@pytest.fixture
def seeded() -> Store:
    store = Store()
    store.add_area("Algarve")
    store.add_publication("Holocene RSL of X", "A. Author", 2015)
    store.add_indicator("high marsh foraminifera")
    return store


def test_empty_request_gives_empty_result():
    assert build_chart(Store(), []) == []


def test_single_area_points_ascend_by_age(seeded):
    for year in (1850.0, -550.0, 1000.0):
        seeded.add_observation(make_draft(age=Age.absolute(year)))
    (series,) = build_chart(seeded, [1])
    assert series.area_name == "Algarve"
    assert [p.x for p in series.points] == [-550.0, 1000.0, 1850.0]


def test_absolute_age_maps_to_zero_width_bars(seeded):
    seeded.add_observation(make_draft(height=1.2, error=0.3, age=Age.absolute(1850.0)))
    (series,) = build_chart(seeded, [1])
    assert series.points == (
        ChartPoint(x=1850.0, x_minus=0.0, x_plus=0.0, y=1.2, y_err=0.3, observation_id=1),
    )


def test_relative_age_maps_to_midpoint_with_bars(seeded):
    seeded.add_observation(make_draft(age=Age.relative(-1050.0, -50.0)))
    (series,) = build_chart(seeded, [1])
    point = series.points[0]
    assert (point.x, point.x_minus, point.x_plus) == (-550.0, 500.0, 500.0)


def test_unknown_area_yields_empty_named_series(seeded):
    (series,) = build_chart(seeded, [99])
    assert series.area_id == 99
    assert series.area_name == ""
    assert series.points == ()


def test_request_order_preserved(seeded):
    seeded.add_area("Second")
    result = build_chart(seeded, [2, 1])
    assert [s.area_id for s in result] == [2, 1]


def test_empty_area_has_empty_points(seeded):
    seeded.add_area("Empty")
    seeded.add_observation(make_draft(area_id=1))
    series = all_areas_chart(seeded)
    assert len(series) == 2
    assert len(series[0].points) == 1
    assert series[1].points == ()


def test_all_areas_equals_explicit_id_list():
    store = Store()
    populate_random(store, random.Random(11), n_obs=120, n_areas=6, n_pubs=4, n_inds=3)
    explicit = build_chart(store, [a.id for a in store.list("area")])
    assert all_areas_chart(store) == explicit


def test_point_count_conservation_and_id_agreement():
    store = Store()
    populate_random(store, random.Random(13), n_obs=150, n_areas=7, n_pubs=5, n_inds=3)
    series = all_areas_chart(store)
    assert sum(len(s.points) for s in series) == len(store.list("observation"))
    for s in series:
        expected_ids = {o.id for o in store.observations_by("area", s.area_id)}
        assert {p.observation_id for p in s.points} == expected_ids


def test_relative_points_reconstruct_stored_limits():
    store = Store()
    populate_random(store, random.Random(17), n_obs=200, n_areas=5, n_pubs=5, n_inds=2)
    observations = {o.id: o for o in store.list("observation")}
    for s in all_areas_chart(store):
        for p in s.points:
            age = observations[p.observation_id].age
            if age.kind == "relative":
                assert (p.x - p.x_minus, p.x + p.x_plus) == (age.lower, age.upper)
            else:
                assert (p.x_minus, p.x_plus) == (0.0, 0.0)
