"""HTTP face of the compilation service: JSON endpoints for the web UI,
CSV downloads, and optional static hosting of the UI assets.

Request bodies are parsed by hand so the error contract stays exact:

* 400 ``MalformedBody`` — unparseable JSON, a non-object body, missing or
  mistyped fields, values outside a closed enum;
* 400 domain codes (``LatitudeOutOfRange``, ``NegativeError``, ...) —
  values that parse but break a domain rule;
* 404 ``UnknownArea``/``UnknownPublication``/``UnknownIndicator``/
  ``UnknownId``/``UnknownKind`` — references that do not resolve;
* 409 ``DuplicateName`` — name collisions on create.

Every error body is ``{"code", "message"}`` plus ``"field"`` when one
input is to blame. Handlers hold no state; concurrent requests are
mediated by the store's lock. There is no authentication, by design: put
a reverse proxy in front for anything beyond a trusted network.
"""

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import chart
from .domain import (
    ABSOLUTE,
    DomainError,
    RELATIVE,
    SCALE_ADBC,
    SCALE_BP,
    validate_observation,
    validate_vlm,
)
from .export_csv import entities_to_csv, observations_to_csv
from .store import (
    AREA,
    DuplicateName,
    INDICATOR,
    OBSERVATION,
    PUBLICATION,
    Store,
    UnknownArea,
    UnknownId,
    UnknownIndicator,
    UnknownPublication,
    VLM,
)

DOWNLOAD_KINDS = {
    "areas": AREA,
    "publications": PUBLICATION,
    "indicators": INDICATOR,
    "observations": OBSERVATION,
    "vlm": VLM,
}


class ApiError(Exception):
    """An error ready to be rendered as an HTTP response."""

    def __init__(self, http_status: int, code: str, message: str, field: str | None = None):
        if http_status not in (400, 404, 409):
            raise ValueError(f"unsupported error status {http_status}")
        super().__init__(message)
        self.http_status = http_status
        self.code = code
        self.message = message
        self.field = field


def _error_response(status: int, code: str, message: str, field: str | None = None) -> JSONResponse:
    body = {"code": code, "message": message}
    if field is not None:
        body["field"] = field
    return JSONResponse(body, status_code=status)


def _malformed(message: str, field: str | None = None) -> ApiError:
    return ApiError(400, "MalformedBody", message, field)


async def _json_object(request: Request) -> dict:
    try:
        data = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError):
        raise _malformed("request body is not valid JSON")
    if not isinstance(data, dict):
        raise _malformed("request body must be a JSON object")
    return data


def _get_number(data: dict, key: str, prefix: str = "") -> float:
    field = prefix + key
    if key not in data:
        raise _malformed(f"missing field {field!r}", field)
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _malformed(f"{field!r} must be a number", field)
    return value


def _get_int(data: dict, key: str) -> int:
    if key not in data:
        raise _malformed(f"missing field {key!r}", key)
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise _malformed(f"{key!r} must be an integer", key)
    return value


def _get_str(data: dict, key: str) -> str:
    if key not in data:
        raise _malformed(f"missing field {key!r}", key)
    value = data[key]
    if not isinstance(value, str):
        raise _malformed(f"{key!r} must be a string", key)
    return value


def _get_enum(data: dict, key: str, allowed: tuple, prefix: str = "") -> str:
    field = prefix + key
    value = data.get(key)
    if value not in allowed:
        choices = " or ".join(repr(a) for a in allowed)
        raise _malformed(f"{field!r} must be {choices}", field)
    return value


def _age_json(age) -> dict:
    if age.kind == ABSOLUTE:
        return {"kind": ABSOLUTE, "value": age.value}
    return {"kind": RELATIVE, "lower": age.lower, "upper": age.upper}


def _observation_json(o) -> dict:
    return {
        "id": o.id,
        "latitude": o.location.latitude,
        "longitude": o.location.longitude,
        "height": o.height,
        "error": o.error,
        "area_id": o.area_id,
        "publication_id": o.publication_id,
        "indicator_id": o.indicator_id,
        "age": _age_json(o.age),
    }


def _vlm_json(v) -> dict:
    return {
        "id": v.id,
        "latitude": v.location.latitude,
        "longitude": v.location.longitude,
        "age_start": v.age_start,
        "age_end": v.age_end,
        "velocity": v.velocity,
        "area_id": v.area_id,
    }


def _series_json(s) -> dict:
    return {
        "area_id": s.area_id,
        "area_name": s.area_name,
        "points": [
            {
                "x": p.x,
                "x_minus": p.x_minus,
                "x_plus": p.x_plus,
                "y": p.y,
                "y_err": p.y_err,
                "observation_id": p.observation_id,
            }
            for p in s.points
        ],
    }


def create_app(store: Store, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="sea-level compilation service")

    @app.exception_handler(ApiError)
    async def _handle_api_error(_request, exc: ApiError):
        return _error_response(exc.http_status, exc.code, exc.message, exc.field)

    @app.exception_handler(DomainError)
    async def _handle_domain_error(_request, exc: DomainError):
        return _error_response(400, exc.code, str(exc), exc.field)

    @app.exception_handler(DuplicateName)
    async def _handle_duplicate(_request, exc: DuplicateName):
        return _error_response(409, exc.code, str(exc))

    async def _handle_not_found(_request, exc):
        return _error_response(404, exc.code, str(exc))

    for unknown in (UnknownArea, UnknownPublication, UnknownIndicator, UnknownId):
        app.add_exception_handler(unknown, _handle_not_found)

    # -- list endpoints ---------------------------------------------

    @app.get("/API/Area/")
    async def list_areas():
        return JSONResponse([{"id": a.id, "name": a.name} for a in store.list(AREA)])

    @app.get("/API/Pub/")
    async def list_publications():
        return JSONResponse(
            [
                {"id": p.id, "title": p.title, "authors": p.authors, "year": p.year}
                for p in store.list(PUBLICATION)
            ]
        )

    @app.get("/API/Obs/")
    async def list_observations():
        return JSONResponse([_observation_json(o) for o in store.list(OBSERVATION)])

    @app.get("/API/Indicator/")
    async def list_indicators():
        return JSONResponse([{"id": i.id, "name": i.name} for i in store.list(INDICATOR)])

    @app.get("/API/VLM/")
    async def list_vlms():
        return JSONResponse([_vlm_json(v) for v in store.list(VLM)])

    # -- lookups ------------------------------------------------------

    @app.post("/API/GetName/")
    async def get_name(request: Request):
        data = await _json_object(request)
        kind = _get_enum(data, "kind", (AREA, PUBLICATION))
        entity_id = _get_int(data, "id")
        return JSONResponse({"name": store.get_name(kind, entity_id)})

    @app.post("/API/GetObservations/")
    async def get_observations(request: Request):
        data = await _json_object(request)
        filter_kind = _get_enum(data, "filter", (AREA, PUBLICATION))
        entity_id = _get_int(data, "id")
        rows = store.observations_by(filter_kind, entity_id)
        return JSONResponse([_observation_json(o) for o in rows])

    # -- creates -------------------------------------------------------

    @app.post("/API/AddArea/")
    async def add_area(request: Request):
        data = await _json_object(request)
        name = _get_str(data, "name")
        return JSONResponse({"id": store.add_area(name)}, status_code=201)

    @app.post("/API/AddPub/")
    async def add_publication(request: Request):
        data = await _json_object(request)
        title = _get_str(data, "title")
        authors = _get_str(data, "authors")
        year = _get_int(data, "year")
        return JSONResponse({"id": store.add_publication(title, authors, year)}, status_code=201)

    @app.post("/API/AddInd/")
    async def add_indicator(request: Request):
        data = await _json_object(request)
        name = _get_str(data, "name")
        return JSONResponse({"id": store.add_indicator(name)}, status_code=201)

    @app.post("/API/AddObs/")
    async def add_observation(request: Request):
        data = await _json_object(request)
        age = data.get("age")
        if not isinstance(age, dict):
            raise _malformed("'age' must be an object", "age")
        age_kind = _get_enum(age, "kind", (ABSOLUTE, RELATIVE), prefix="age.")
        age_inputs = {}
        if age_kind == ABSOLUTE:
            age_inputs["age_value"] = _get_number(age, "value", prefix="age.")
        else:
            age_inputs["age_lower"] = _get_number(age, "lower", prefix="age.")
            age_inputs["age_upper"] = _get_number(age, "upper", prefix="age.")
        draft = validate_observation(
            latitude=_get_number(data, "latitude"),
            longitude=_get_number(data, "longitude"),
            height=_get_number(data, "height"),
            error=_get_number(data, "error"),
            area_id=_get_int(data, "area_id"),
            publication_id=_get_int(data, "publication_id"),
            indicator_id=_get_int(data, "indicator_id"),
            age_scale=_get_enum(data, "age_scale", (SCALE_BP, SCALE_ADBC)),
            age_kind=age_kind,
            **age_inputs,
        )
        return JSONResponse({"id": store.add_observation(draft)}, status_code=201)

    @app.post("/API/AddVLM/")
    async def add_vlm(request: Request):
        data = await _json_object(request)
        draft = validate_vlm(
            latitude=_get_number(data, "latitude"),
            longitude=_get_number(data, "longitude"),
            age_start=_get_number(data, "age_start"),
            age_end=_get_number(data, "age_end"),
            velocity=_get_number(data, "velocity"),
            area_id=_get_int(data, "area_id"),
        )
        return JSONResponse({"id": store.add_vlm(draft)}, status_code=201)

    # -- chart ---------------------------------------------------------

    @app.post("/API/GetChart/")
    async def get_chart(request: Request):
        data = await _json_object(request)
        area_ids = data.get("area_ids")
        if area_ids is None or area_ids == []:
            series = chart.all_areas_chart(store)
        else:
            if not isinstance(area_ids, list) or any(
                isinstance(i, bool) or not isinstance(i, int) for i in area_ids
            ):
                raise _malformed("'area_ids' must be an array of integer area ids", "area_ids")
            series = chart.build_chart(store, area_ids)
        return JSONResponse([_series_json(s) for s in series])

    # -- downloads -------------------------------------------------------

    @app.get("/API/Download/{kind}")
    async def download(kind: str, request: Request):
        table = DOWNLOAD_KINDS.get(kind)
        if table is None:
            raise ApiError(404, "UnknownKind", f"no downloadable table named {kind!r}")
        if table == OBSERVATION:
            params = request.query_params
            if "filter" in params or "id" in params:
                filter_kind = params.get("filter")
                if filter_kind not in (AREA, PUBLICATION):
                    raise _malformed(f"'filter' must be {AREA!r} or {PUBLICATION!r}", "filter")
                try:
                    entity_id = int(params["id"])
                except KeyError:
                    raise _malformed("'id' is required when 'filter' is given", "id")
                except ValueError:
                    raise _malformed("'id' must be an integer", "id")
                rows = store.observations_by(filter_kind, entity_id)
            else:
                rows = store.list(OBSERVATION)
            names = {i.id: i.name for i in store.list(INDICATOR)}
            document = observations_to_csv(rows, names.__getitem__)
        else:
            document = entities_to_csv(table, store.list(table))
        return Response(
            document.text(),
            media_type="text/csv",
            headers={"Content-Disposition": f'attachment; filename="{kind}.csv"'},
        )

    # mounted last so the API routes win the match
    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
