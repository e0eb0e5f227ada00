"""Per-area chart series: stored observations mapped to scatter points
with vertical (height) and horizontal (age) error bars.

This is read-only over the store; the web UI (or any other consumer)
does the actual drawing.
"""

from dataclasses import dataclass

from .domain import age_plot_geometry
from .store import AREA, Store, UnknownId


@dataclass(frozen=True)
class ChartPoint:
    x: float  # age center, calendar years
    x_minus: float  # years back to the lower limit (0 for absolute ages)
    x_plus: float  # years forward to the upper limit (0 for absolute ages)
    y: float  # height, m relative to present mean sea level
    y_err: float  # symmetric height error, m
    observation_id: int


@dataclass(frozen=True)
class ChartSeries:
    area_id: int
    area_name: str
    points: tuple[ChartPoint, ...]


def build_chart(store: Store, area_ids) -> list[ChartSeries]:
    """One series per requested area, in request order.

    Points are sorted by age center (ties broken by observation id) so
    output is deterministic and line-connected plots come out right.
    Unknown area ids yield a series with an empty name and no points
    rather than an error.
    """
    result = []
    for area_id in area_ids:
        try:
            name = store.get_name(AREA, area_id)
        except UnknownId:
            name = ""
        points = [
            ChartPoint(*age_plot_geometry(obs.age), obs.height, obs.error, obs.id)
            for obs in store.observations_by(AREA, area_id)
        ]
        points.sort(key=lambda p: (p.x, p.observation_id))
        result.append(ChartSeries(area_id=area_id, area_name=name, points=tuple(points)))
    return result


def all_areas_chart(store: Store) -> list[ChartSeries]:
    """Series for every stored area, ascending area id."""
    return build_chart(store, [area.id for area in store.list(AREA)])
