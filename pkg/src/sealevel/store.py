"""Single-file persistent store for the five entity tables.

The on-disk format is one JSON document whose leading keys are a magic
string and a format version (``FORMAT_MAGIC``, ``FORMAT_VERSION``); a file
missing either, or carrying a version this build does not read, is
rejected with :class:`StoreFormatError`. Saves write a temp file and
``os.replace`` it, so a crash leaves either the old or the new file
intact, never a torn one.

One lock serializes writers; readers copy their results while holding the
same lock, so no caller ever observes a half-applied insert. Filters and
the bounding-box query are linear scans, which is ample at compilation
scale (thousands of rows, not millions).
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass
from pathlib import Path

from .domain import (
    Age,
    Area,
    DomainError,
    EmptyName,
    GeoPoint,
    Indicator,
    InvertedInterval,
    Observation,
    ObservationDraft,
    Publication,
    PUBLICATION_YEAR_MAX,
    PUBLICATION_YEAR_MIN,
    VerticalLandMovement,
    VlmDraft,
    YearOutOfRange,
)

FORMAT_MAGIC = "sealevel-store"
FORMAT_VERSION = 1

AREA = "area"
PUBLICATION = "publication"
INDICATOR = "indicator"
OBSERVATION = "observation"
VLM = "vlm"
KINDS = (AREA, PUBLICATION, INDICATOR, OBSERVATION, VLM)


class StoreError(Exception):
    """Base for store-level failures; ``code`` mirrors the class name."""

    code = "StoreError"


class DuplicateName(StoreError):
    code = "DuplicateName"


class UnknownArea(StoreError):
    code = "UnknownArea"


class UnknownPublication(StoreError):
    code = "UnknownPublication"


class UnknownIndicator(StoreError):
    code = "UnknownIndicator"


class UnknownId(StoreError):
    code = "UnknownId"


class StoreFormatError(StoreError):
    code = "StoreFormatError"


@dataclass(frozen=True)
class BoundingBox:
    """A closed latitude/longitude box.

    Boxes crossing the antimeridian are rejected; split them and query
    twice. That keeps point-in-box arithmetic total.
    """

    min_lat: float
    max_lat: float
    min_lon: float
    max_lon: float

    def __post_init__(self):
        for name in ("min_lat", "max_lat", "min_lon", "max_lon"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not (-90.0 <= self.min_lat <= self.max_lat <= 90.0):
            raise ValueError("latitudes must satisfy -90 <= min_lat <= max_lat <= 90")
        if not (-180.0 <= self.min_lon <= self.max_lon <= 180.0):
            raise ValueError(
                "longitudes must satisfy -180 <= min_lon <= max_lon <= 180 "
                "(antimeridian-crossing boxes are not supported)"
            )

    def contains(self, point: GeoPoint) -> bool:
        return (
            self.min_lat <= point.latitude <= self.max_lat
            and self.min_lon <= point.longitude <= self.max_lon
        )


@dataclass(frozen=True)
class StoreSnapshot:
    """A consistent copy of every table plus the id counters."""

    areas: tuple[Area, ...]
    publications: tuple[Publication, ...]
    indicators: tuple[Indicator, ...]
    observations: tuple[Observation, ...]
    vlms: tuple[VerticalLandMovement, ...]
    next_ids: dict[str, int]


class Store:
    """Entity tables with fresh-id assignment and referential integrity.

    Pass ``path`` to bind the store to a file: it is loaded if present and
    every successful write is persisted back immediately. Without a path
    the store is purely in-memory (use :meth:`save` to write it out).
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self._lock = threading.RLock()
        self._path = Path(path) if path is not None else None
        self._areas: dict[int, Area] = {}
        self._publications: dict[int, Publication] = {}
        self._indicators: dict[int, Indicator] = {}
        self._observations: dict[int, Observation] = {}
        self._vlms: dict[int, VerticalLandMovement] = {}
        self._next_ids: dict[str, int] = {kind: 1 for kind in KINDS}
        if self._path is not None and self._path.exists():
            self._load_file(self._path)

    # -- writes ---------------------------------------------------------

    def add_area(self, name: str) -> int:
        clean = name.strip()
        if not clean:
            raise EmptyName("area name must not be empty", field="name")
        with self._lock:
            self._reject_duplicate_name(self._areas.values(), clean, "area")
            area = Area(id=self._take_id(AREA), name=clean)
            self._areas[area.id] = area
            self._autosave()
            return area.id

    def add_publication(self, title: str, authors: str, year: int) -> int:
        title = title.strip()
        authors = authors.strip()
        if not title:
            raise EmptyName("publication title must not be empty", field="title")
        if not authors:
            raise EmptyName("publication authors must not be empty", field="authors")
        if isinstance(year, bool) or int(year) != year:
            raise ValueError(f"publication year must be an integer, got {year!r}")
        year = int(year)
        if not PUBLICATION_YEAR_MIN <= year <= PUBLICATION_YEAR_MAX:
            raise YearOutOfRange(
                f"publication year must be between {PUBLICATION_YEAR_MIN} and "
                f"{PUBLICATION_YEAR_MAX}, got {year}",
                field="year",
            )
        with self._lock:
            pub = Publication(id=self._take_id(PUBLICATION), title=title, authors=authors, year=year)
            self._publications[pub.id] = pub
            self._autosave()
            return pub.id

    def add_indicator(self, name: str) -> int:
        clean = name.strip()
        if not clean:
            raise EmptyName("indicator name must not be empty", field="name")
        with self._lock:
            self._reject_duplicate_name(self._indicators.values(), clean, "indicator")
            indicator = Indicator(id=self._take_id(INDICATOR), name=clean)
            self._indicators[indicator.id] = indicator
            self._autosave()
            return indicator.id

    def add_observation(self, payload: ObservationDraft) -> int:
        """Persist one observation with its age; all-or-nothing.

        Reference checks run before any mutation, so after a failure the
        table is exactly as it was.
        """
        with self._lock:
            if payload.area_id not in self._areas:
                raise UnknownArea(f"area id {payload.area_id} does not exist")
            if payload.publication_id not in self._publications:
                raise UnknownPublication(f"publication id {payload.publication_id} does not exist")
            if payload.indicator_id not in self._indicators:
                raise UnknownIndicator(f"indicator id {payload.indicator_id} does not exist")
            obs = Observation(
                id=self._take_id(OBSERVATION),
                location=payload.location,
                height=payload.height,
                error=payload.error,
                area_id=payload.area_id,
                publication_id=payload.publication_id,
                indicator_id=payload.indicator_id,
                age=payload.age,
            )
            self._observations[obs.id] = obs
            self._autosave()
            return obs.id

    def add_vlm(self, payload: VlmDraft) -> int:
        if payload.age_start > payload.age_end:
            raise InvertedInterval(
                f"age_start {payload.age_start} exceeds age_end {payload.age_end}",
                field="age_start",
            )
        with self._lock:
            if payload.area_id not in self._areas:
                raise UnknownArea(f"area id {payload.area_id} does not exist")
            vlm = VerticalLandMovement(
                id=self._take_id(VLM),
                location=payload.location,
                age_start=payload.age_start,
                age_end=payload.age_end,
                velocity=payload.velocity,
                area_id=payload.area_id,
            )
            self._vlms[vlm.id] = vlm
            self._autosave()
            return vlm.id

    # -- reads ----------------------------------------------------------

    def list(self, kind: str) -> list:
        """Every row of one table, ascending id."""
        table = self._table(kind)
        with self._lock:
            return sorted(table.values(), key=lambda row: row.id)

    def get_name(self, kind: str, entity_id: int) -> str:
        """Display name for an area (its name) or publication (its title)."""
        with self._lock:
            if kind == AREA:
                row = self._areas.get(entity_id)
                if row is not None:
                    return row.name
            elif kind == PUBLICATION:
                row = self._publications.get(entity_id)
                if row is not None:
                    return row.title
            else:
                raise ValueError(f"get_name resolves {AREA!r} or {PUBLICATION!r}, got {kind!r}")
        raise UnknownId(f"no {kind} with id {entity_id}")

    def observations_by(self, filter_kind: str, entity_id: int) -> list[Observation]:
        """Observations referencing one area or publication, ascending id.

        An unknown id yields an empty list rather than an error: the UI
        picks ids from lists it just fetched, so a miss is benign.
        """
        if filter_kind not in (AREA, PUBLICATION):
            raise ValueError(f"filter must be {AREA!r} or {PUBLICATION!r}, got {filter_kind!r}")
        attr = "area_id" if filter_kind == AREA else "publication_id"
        with self._lock:
            return [o for o in self.list(OBSERVATION) if getattr(o, attr) == entity_id]

    def observations_in_bbox(self, box: BoundingBox) -> list[Observation]:
        """Observations whose location lies in the closed box, ascending id."""
        with self._lock:
            return [o for o in self.list(OBSERVATION) if box.contains(o.location)]

    def snapshot(self) -> StoreSnapshot:
        with self._lock:
            return StoreSnapshot(
                areas=tuple(self.list(AREA)),
                publications=tuple(self.list(PUBLICATION)),
                indicators=tuple(self.list(INDICATOR)),
                observations=tuple(self.list(OBSERVATION)),
                vlms=tuple(self.list(VLM)),
                next_ids=dict(self._next_ids),
            )

    # -- persistence ----------------------------------------------------

    def save(self, path: str | os.PathLike | None = None) -> None:
        """Write the whole store to ``path`` (default: the bound path)."""
        target = Path(path) if path is not None else self._path
        if target is None:
            raise ValueError("no persistence path configured and none given")
        self._save_to(target)

    def _autosave(self) -> None:
        if self._path is not None:
            self._save_to(self._path)

    def _save_to(self, target: Path) -> None:
        with self._lock:
            document = self._serialize()
        target.parent.mkdir(parents=True, exist_ok=True)
        tmp = target.with_name(target.name + ".tmp")
        tmp.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, target)

    def _serialize(self) -> dict:
        # format/version lead the document; they are the magic header.
        return {
            "format": FORMAT_MAGIC,
            "version": FORMAT_VERSION,
            "next_ids": dict(self._next_ids),
            "areas": [{"id": a.id, "name": a.name} for a in self.list(AREA)],
            "publications": [
                {"id": p.id, "title": p.title, "authors": p.authors, "year": p.year}
                for p in self.list(PUBLICATION)
            ],
            "indicators": [{"id": i.id, "name": i.name} for i in self.list(INDICATOR)],
            "observations": [
                {
                    "id": o.id,
                    "latitude": o.location.latitude,
                    "longitude": o.location.longitude,
                    "height": o.height,
                    "error": o.error,
                    "area_id": o.area_id,
                    "publication_id": o.publication_id,
                    "indicator_id": o.indicator_id,
                    "age": _age_to_json(o.age),
                }
                for o in self.list(OBSERVATION)
            ],
            "vlms": [
                {
                    "id": v.id,
                    "latitude": v.location.latitude,
                    "longitude": v.location.longitude,
                    "age_start": v.age_start,
                    "age_end": v.age_end,
                    "velocity": v.velocity,
                    "area_id": v.area_id,
                }
                for v in self.list(VLM)
            ],
        }

    def _load_file(self, path: Path) -> None:
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise StoreFormatError(f"{path} is not a {FORMAT_MAGIC} file: {exc}") from exc
        if not isinstance(data, dict) or data.get("format") != FORMAT_MAGIC:
            raise StoreFormatError(f"{path} is not a {FORMAT_MAGIC} file (bad or missing magic)")
        if data.get("version") != FORMAT_VERSION:
            raise StoreFormatError(
                f"{path} has format version {data.get('version')!r}; "
                f"this build reads version {FORMAT_VERSION}"
            )
        try:
            self._areas = {
                int(row["id"]): Area(id=int(row["id"]), name=row["name"])
                for row in data["areas"]
            }
            self._publications = {
                int(row["id"]): Publication(
                    id=int(row["id"]),
                    title=row["title"],
                    authors=row["authors"],
                    year=int(row["year"]),
                )
                for row in data["publications"]
            }
            self._indicators = {
                int(row["id"]): Indicator(id=int(row["id"]), name=row["name"])
                for row in data["indicators"]
            }
            self._observations = {
                int(row["id"]): Observation(
                    id=int(row["id"]),
                    location=GeoPoint(row["latitude"], row["longitude"]),
                    height=float(row["height"]),
                    error=float(row["error"]),
                    area_id=int(row["area_id"]),
                    publication_id=int(row["publication_id"]),
                    indicator_id=int(row["indicator_id"]),
                    age=_age_from_json(row["age"]),
                )
                for row in data["observations"]
            }
            self._vlms = {
                int(row["id"]): VerticalLandMovement(
                    id=int(row["id"]),
                    location=GeoPoint(row["latitude"], row["longitude"]),
                    age_start=float(row["age_start"]),
                    age_end=float(row["age_end"]),
                    velocity=float(row["velocity"]),
                    area_id=int(row["area_id"]),
                )
                for row in data["vlms"]
            }
            next_ids = {kind: int(data["next_ids"][kind]) for kind in KINDS}
        except (KeyError, TypeError, ValueError, DomainError) as exc:
            raise StoreFormatError(f"{path} is corrupt: {exc}") from exc
        # never hand out an id at or below one already present
        for kind, table in (
            (AREA, self._areas),
            (PUBLICATION, self._publications),
            (INDICATOR, self._indicators),
            (OBSERVATION, self._observations),
            (VLM, self._vlms),
        ):
            highest = max(table.keys(), default=0)
            self._next_ids[kind] = max(next_ids[kind], highest + 1)
        dangling = self._dangling_references()
        if dangling:
            raise StoreFormatError(f"{path} is corrupt: dangling references {dangling}")

    # -- internals ------------------------------------------------------

    def _table(self, kind: str) -> dict:
        tables = {
            AREA: self._areas,
            PUBLICATION: self._publications,
            INDICATOR: self._indicators,
            OBSERVATION: self._observations,
            VLM: self._vlms,
        }
        if kind not in tables:
            raise ValueError(f"unknown entity kind {kind!r}")
        return tables[kind]

    def _take_id(self, kind: str) -> int:
        fresh = self._next_ids[kind]
        self._next_ids[kind] = fresh + 1
        return fresh

    def _reject_duplicate_name(self, rows, clean: str, what: str) -> None:
        key = clean.casefold()
        if any(row.name.casefold() == key for row in rows):
            raise DuplicateName(f"{what} named {clean!r} already exists")

    def _dangling_references(self) -> list[str]:
        bad = []
        for obs in self._observations.values():
            if obs.area_id not in self._areas:
                bad.append(f"observation {obs.id} -> area {obs.area_id}")
            if obs.publication_id not in self._publications:
                bad.append(f"observation {obs.id} -> publication {obs.publication_id}")
            if obs.indicator_id not in self._indicators:
                bad.append(f"observation {obs.id} -> indicator {obs.indicator_id}")
        for vlm in self._vlms.values():
            if vlm.area_id not in self._areas:
                bad.append(f"vlm {vlm.id} -> area {vlm.area_id}")
        return bad


def _age_to_json(age: Age) -> dict:
    if age.kind == "absolute":
        return {"kind": age.kind, "value": age.value}
    return {"kind": age.kind, "lower": age.lower, "upper": age.upper}


def _age_from_json(data: dict) -> Age:
    kind = data["kind"]
    if kind == "absolute":
        return Age.absolute(float(data["value"]))
    if kind == "relative":
        return Age.relative(float(data["lower"]), float(data["upper"]))
    raise ValueError(f"unknown age kind {kind!r}")
