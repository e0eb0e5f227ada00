"""CSV serialization for the download buttons.

The cell formats are fixed bit-exactly so independent consumers agree:
RFC-4180 quoting (cells containing comma, quote or newline are quoted,
embedded quotes doubled), CRLF line ends with the final row terminated,
UTF-8 without BOM, coordinates as ``lat,lon`` at six decimal places,
numbers in plain notation, relative ages as ``lower/upper``.
"""

import csv
import io
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .domain import ABSOLUTE, Age, GeoPoint, Observation
from .store import AREA, INDICATOR, PUBLICATION, VLM, UnknownIndicator

OBSERVATION_HEADER = ("ID", "Coordinates", "Height", "Age", "Indicator", "Error")

ENTITY_HEADERS = {
    AREA: ("ID", "Name"),
    PUBLICATION: ("ID", "Title", "Authors", "Year"),
    INDICATOR: ("ID", "Name"),
    VLM: ("ID", "Coordinates", "AgeStart", "AgeEnd", "Velocity", "AreaID"),
}


@dataclass(frozen=True)
class CsvDocument:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError("every row must have exactly one cell per header column")

    def text(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return out.getvalue()


def plain_number(value: float) -> str:
    """Integral values drop the decimal point: 1850.0 -> ``1850``."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def format_coordinates(point: GeoPoint) -> str:
    return f"{point.latitude:.6f},{point.longitude:.6f}"


def format_age(age: Age) -> str:
    if age.kind == ABSOLUTE:
        return plain_number(age.value)
    return f"{plain_number(age.lower)}/{plain_number(age.upper)}"


def observations_to_csv(
    observations: Iterable[Observation],
    resolve_indicator: Callable[[int], str],
) -> CsvDocument:
    """One row per observation, in input order.

    ``resolve_indicator`` maps an indicator id to its display name; a
    KeyError from it surfaces as UnknownIndicator.
    """
    rows = []
    for obs in observations:
        try:
            indicator = resolve_indicator(obs.indicator_id)
        except KeyError:
            raise UnknownIndicator(f"indicator id {obs.indicator_id} did not resolve") from None
        rows.append(
            (
                str(obs.id),
                format_coordinates(obs.location),
                plain_number(obs.height),
                format_age(obs.age),
                indicator,
                plain_number(obs.error),
            )
        )
    return CsvDocument(header=OBSERVATION_HEADER, rows=tuple(rows))


def entities_to_csv(kind: str, rows: Iterable) -> CsvDocument:
    """Kind-specific columns for the area, publication, indicator and VLM lists."""
    if kind in (AREA, INDICATOR):
        cells = [(str(r.id), r.name) for r in rows]
    elif kind == PUBLICATION:
        cells = [(str(r.id), r.title, r.authors, str(r.year)) for r in rows]
    elif kind == VLM:
        cells = [
            (
                str(r.id),
                format_coordinates(r.location),
                plain_number(r.age_start),
                plain_number(r.age_end),
                plain_number(r.velocity),
                str(r.area_id),
            )
            for r in rows
        ]
    else:
        raise ValueError(f"no CSV schema for kind {kind!r}")
    return CsvDocument(header=ENTITY_HEADERS[kind], rows=tuple(cells))
