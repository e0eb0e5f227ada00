"""Store behavior: id assignment, uniqueness, referential integrity,
filters against brute-force oracles, and the on-disk format."""

import json
import random

import pytest

from sealevel.domain import (
    Age,
    EmptyName,
    GeoPoint,
    InvertedInterval,
    ObservationDraft,
    VlmDraft,
    YearOutOfRange,
    validate_observation,
    validate_vlm,
)
from sealevel.store import (
    BoundingBox,
    DuplicateName,
    FORMAT_MAGIC,
    FORMAT_VERSION,
    Store,
    StoreFormatError,
    UnknownArea,
    UnknownId,
    UnknownIndicator,
    UnknownPublication,
)


def make_draft(area_id=1, publication_id=1, indicator_id=1, lat=38.7, lon=-9.1,
               height=1.2, error=0.3, age=None) -> ObservationDraft:
    return ObservationDraft(
        location=GeoPoint(lat, lon),
        height=height,
        error=error,
        area_id=area_id,
        publication_id=publication_id,
        indicator_id=indicator_id,
        age=age or Age.absolute(1850.0),
    )


@pytest.fixture
def seeded() -> Store:
    store = Store()
    store.add_area("Algarve")
    store.add_publication("Holocene RSL of X", "A. Author", 2015)
    store.add_indicator("high marsh foraminifera")
    return store


class TestAddArea:
    def test_first_insert_gets_first_id(self):
        assert Store().add_area("Algarve") == 1

    def test_duplicate_name_case_insensitive_trimmed(self):
        store = Store()
        store.add_area("Algarve")
        with pytest.raises(DuplicateName):
            store.add_area("algarve ")

    def test_empty_name_rejected(self):
        with pytest.raises(EmptyName):
            Store().add_area("")
        with pytest.raises(EmptyName):
            Store().add_area("   ")

    def test_name_stored_trimmed(self):
        store = Store()
        store.add_area("  Algarve ")
        assert store.list("area")[0].name == "Algarve"


class TestAddPublication:
    def test_first_insert(self):
        assert Store().add_publication("Holocene RSL of X", "A. Author", 2015) == 1

    def test_year_out_of_range(self):
        with pytest.raises(YearOutOfRange):
            Store().add_publication("T", "A", 15000)
        with pytest.raises(YearOutOfRange):
            Store().add_publication("T", "A", 1400)

    def test_duplicate_titles_get_distinct_ids(self):
        store = Store()
        first = store.add_publication("Same title", "A", 2000)
        second = store.add_publication("Same title", "B", 2001)
        assert first == 1 and second == 2

    def test_empty_title_or_authors_rejected(self):
        with pytest.raises(EmptyName):
            Store().add_publication("", "A", 2000)
        with pytest.raises(EmptyName):
            Store().add_publication("T", " ", 2000)


class TestAddIndicator:
    def test_first_insert(self):
        assert Store().add_indicator("high marsh foraminifera") == 1

    def test_duplicate_rejected(self):
        store = Store()
        store.add_indicator("forams")
        with pytest.raises(DuplicateName):
            store.add_indicator("Forams")

    def test_blank_rejected(self):
        with pytest.raises(EmptyName):
            Store().add_indicator("  ")


class TestAddObservation:
    def test_valid_payload(self, seeded):
        assert seeded.add_observation(make_draft()) == 1

    def test_unknown_area_on_empty_store(self):
        with pytest.raises(UnknownArea):
            Store().add_observation(make_draft(area_id=99))

    def test_unknown_publication_and_indicator(self, seeded):
        with pytest.raises(UnknownPublication):
            seeded.add_observation(make_draft(publication_id=99))
        with pytest.raises(UnknownIndicator):
            seeded.add_observation(make_draft(indicator_id=99))

    def test_sequential_inserts_get_monotone_ids(self, seeded):
        assert seeded.add_observation(make_draft()) == 1
        assert seeded.add_observation(make_draft()) == 2

    def test_failed_insert_leaves_table_unchanged(self, seeded):
        seeded.add_observation(make_draft())
        before = seeded.snapshot()
        with pytest.raises(UnknownIndicator):
            seeded.add_observation(make_draft(indicator_id=42))
        assert seeded.snapshot() == before


class TestAddVlm:
    def test_valid_record(self, seeded):
        draft = validate_vlm(latitude=38.7, longitude=-9.1, age_start=-8000,
                             age_end=1950, velocity=0.4, area_id=1)
        assert seeded.add_vlm(draft) == 1

    def test_inverted_interval_rejected(self, seeded):
        draft = VlmDraft(location=GeoPoint(38.7, -9.1), age_start=1950.0,
                         age_end=-8000.0, velocity=0.4, area_id=1)
        with pytest.raises(InvertedInterval):
            seeded.add_vlm(draft)

    def test_unknown_area(self):
        draft = validate_vlm(latitude=0, longitude=0, age_start=0, age_end=1,
                             velocity=0.1, area_id=7)
        with pytest.raises(UnknownArea):
            Store().add_vlm(draft)


class TestList:
    def test_empty_store_lists_empty(self):
        store = Store()
        for kind in ("area", "publication", "indicator", "observation", "vlm"):
            assert store.list(kind) == []

    def test_three_areas_in_id_order(self):
        store = Store()
        for name in ("A", "B", "C"):
            store.add_area(name)
        assert [a.id for a in store.list("area")] == [1, 2, 3]

    def test_observation_count_matches_successful_adds(self, seeded):
        added = 0
        for _ in range(5):
            seeded.add_observation(make_draft())
            added += 1
        with pytest.raises(UnknownArea):
            seeded.add_observation(make_draft(area_id=123))
        assert len(seeded.list("observation")) == added

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Store().list("ages")


class TestGetName:
    def test_area_name(self, seeded):
        assert seeded.get_name("area", 1) == "Algarve"

    def test_publication_title(self, seeded):
        assert seeded.get_name("publication", 1) == "Holocene RSL of X"

    def test_unknown_id(self, seeded):
        with pytest.raises(UnknownId):
            seeded.get_name("area", 42)

    def test_kind_outside_closed_set(self, seeded):
        with pytest.raises(ValueError):
            seeded.get_name("indicator", 1)


def populate_random(store: Store, rng: random.Random, n_obs: int,
                    n_areas: int = 10, n_pubs: int = 10, n_inds: int = 5) -> None:
    for i in range(n_areas):
        store.add_area(f"Area {i + 1}")
    for i in range(n_pubs):
        store.add_publication(f"Publication {i + 1}", f"Author {i + 1}", 1950 + i)
    for i in range(n_inds):
        store.add_indicator(f"Indicator {i + 1}")
    for _ in range(n_obs):
        if rng.random() < 0.5:
            age_kind, inputs = "absolute", {"age_value": rng.randint(-12000, 1950)}
        else:
            a, b = sorted((rng.randint(-12000, 1950), rng.randint(-12000, 1950)))
            age_kind, inputs = "relative", {"age_lower": a, "age_upper": b}
        draft = validate_observation(
            latitude=round(rng.uniform(-90, 90), 4),
            longitude=round(rng.uniform(-180, 180), 4),
            height=round(rng.uniform(-30, 10), 3),
            error=round(rng.uniform(0, 2), 3),
            area_id=rng.randint(1, n_areas),
            publication_id=rng.randint(1, n_pubs),
            indicator_id=rng.randint(1, n_inds),
            age_kind=age_kind,
            **inputs,
        )
        store.add_observation(draft)


class TestFilters:
    def test_observations_by_matches_linear_scan(self, seeded):
        seeded.add_area("Second")
        for i in range(6):
            seeded.add_observation(make_draft(area_id=1 + i % 2))
        everything = seeded.list("observation")
        for area_id in (1, 2):
            oracle = [o for o in everything if o.area_id == area_id]
            assert seeded.observations_by("area", area_id) == oracle

    def test_unknown_id_yields_empty_list(self, seeded):
        seeded.add_observation(make_draft())
        assert seeded.observations_by("area", 99) == []
        assert seeded.observations_by("publication", 99) == []

    def test_no_matches_in_queried_area(self, seeded):
        seeded.add_area("Empty area")
        seeded.add_observation(make_draft(area_id=1))
        assert seeded.observations_by("area", 2) == []

    def test_bad_filter_kind(self, seeded):
        with pytest.raises(ValueError):
            seeded.observations_by("vlm", 1)

    def test_random_store_against_oracles(self):
        rng = random.Random(20_1950)
        store = Store()
        populate_random(store, rng, n_obs=300)
        everything = store.list("observation")
        for area_id in range(1, 11):
            oracle = [o for o in everything if o.area_id == area_id]
            assert store.observations_by("area", area_id) == oracle
        for pub_id in range(1, 11):
            oracle = [o for o in everything if o.publication_id == pub_id]
            assert store.observations_by("publication", pub_id) == oracle
        for _ in range(50):
            lats = sorted((rng.uniform(-90, 90), rng.uniform(-90, 90)))
            lons = sorted((rng.uniform(-180, 180), rng.uniform(-180, 180)))
            box = BoundingBox(lats[0], lats[1], lons[0], lons[1])
            oracle = [o for o in everything if box.contains(o.location)]
            assert store.observations_in_bbox(box) == oracle


class TestBoundingBox:
    def test_global_box_returns_all(self, seeded):
        for _ in range(4):
            seeded.add_observation(make_draft())
        box = BoundingBox(-90, 90, -180, 180)
        assert seeded.observations_in_bbox(box) == seeded.list("observation")

    def test_degenerate_box_hits_one_point(self, seeded):
        seeded.add_observation(make_draft(lat=10.0, lon=20.0))
        seeded.add_observation(make_draft(lat=-10.0, lon=-20.0))
        box = BoundingBox(10.0, 10.0, 20.0, 20.0)
        hits = seeded.observations_in_bbox(box)
        assert [o.id for o in hits] == [1]

    def test_inverted_bounds_rejected(self):
        with pytest.raises(ValueError):
            BoundingBox(10, -10, 0, 1)

    def test_antimeridian_wrap_rejected(self):
        with pytest.raises(ValueError):
            BoundingBox(0, 1, 170, -170)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            BoundingBox(-91, 0, 0, 1)


class TestReferentialIntegrity:
    def test_holds_after_random_operations(self):
        rng = random.Random(7)
        store = Store()
        populate_random(store, rng, n_obs=100)
        for i in range(1, 4):
            store.add_vlm(validate_vlm(latitude=0, longitude=0, age_start=-9000,
                                       age_end=1950, velocity=0.1 * i, area_id=i))
        areas = {a.id for a in store.list("area")}
        pubs = {p.id for p in store.list("publication")}
        inds = {i.id for i in store.list("indicator")}
        for obs in store.list("observation"):
            assert obs.area_id in areas
            assert obs.publication_id in pubs
            assert obs.indicator_id in inds
        for vlm in store.list("vlm"):
            assert vlm.area_id in areas


class TestPersistence:
    def test_round_trip_is_field_exact(self, tmp_path):
        path = tmp_path / "store.json"
        store = Store(path)
        populate_random(store, random.Random(3), n_obs=40, n_areas=4, n_pubs=3, n_inds=2)
        store.add_vlm(validate_vlm(latitude=38.7, longitude=-9.1, age_start=-8000,
                                   age_end=1950, velocity=0.4, area_id=1))
        reloaded = Store(path)
        assert reloaded.snapshot() == store.snapshot()

    def test_ids_continue_after_reload(self, tmp_path):
        path = tmp_path / "store.json"
        store = Store(path)
        store.add_area("One")
        store.add_area("Two")
        reloaded = Store(path)
        assert reloaded.add_area("Three") == 3

    def test_explicit_save_of_memory_store(self, tmp_path):
        store = Store()
        store.add_area("A")
        target = tmp_path / "out.json"
        store.save(target)
        assert Store(target).snapshot() == store.snapshot()

    def test_save_without_path_rejected(self):
        with pytest.raises(ValueError):
            Store().save()

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "other.json"
        path.write_text(json.dumps({"format": "something-else", "version": 1}))
        with pytest.raises(StoreFormatError):
            Store(path)

    def test_unsupported_version_rejected(self, tmp_path):
        path = tmp_path / "future.json"
        path.write_text(json.dumps({"format": FORMAT_MAGIC, "version": FORMAT_VERSION + 1}))
        with pytest.raises(StoreFormatError):
            Store(path)

    def test_non_json_rejected(self, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("definitely not json {")
        with pytest.raises(StoreFormatError):
            Store(path)

    def test_dangling_reference_rejected(self, tmp_path):
        store = Store()
        store.add_area("A")
        store.add_publication("T", "A", 2000)
        store.add_indicator("I")
        store.add_observation(make_draft())
        doc = json.loads(json.dumps(store._serialize()))
        doc["areas"] = []
        path = tmp_path / "dangling.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(StoreFormatError):
            Store(path)
