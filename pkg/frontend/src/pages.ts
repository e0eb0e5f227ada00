// Page renderers. Every page is a function of (container, client); all
// server interaction goes through the typed client, and list pages end
// with the matching CSV download button.

import {
  ApiError,
  Client,
  type AreaRow,
  type DownloadKind,
  type IndicatorRow,
  type ObservationRow,
  type PublicationRow,
} from "./api.js";
import { describeAge, labelCalendarYear } from "./age.js";
import { renderChart } from "./chart.js";
import { banner, el } from "./dom.js";
import { renderMap } from "./map.js";
import {
  ageUpperLabel,
  bpPreview,
  canSubmit,
  clearForm,
  fieldFromServer,
  initialFormState,
  lowerLimitVisible,
  setAgeKind,
  setAgeScale,
  setField,
  toPayload,
  type AgeKind,
  type AgeScale,
  type FieldName,
  type FormState,
} from "./observation-form.js";

function downloadButton(
  client: Client,
  kind: DownloadKind,
  label: string,
  filter?: { kind: "area" | "publication"; id: number },
): HTMLElement {
  const wrap = el("p", {});
  const button = el("button", { type: "button", class: "download" }, [label]);
  button.addEventListener("click", () => {
    fetch(client.downloadUrl(kind, filter))
      .then(async (response) => {
        if (!response.ok) {
          throw new Error(`HTTP ${response.status}`);
        }
        const blob = await response.blob();
        const url = URL.createObjectURL(blob);
        const anchor = el("a", { href: url, download: `${kind}.csv` });
        document.body.appendChild(anchor);
        anchor.click();
        anchor.remove();
        URL.revokeObjectURL(url);
      })
      .catch(() => {
        wrap.appendChild(banner("error", "Download failed; please retry."));
      });
  });
  wrap.appendChild(button);
  return wrap;
}

function errorPanel(container: HTMLElement, retry: () => void, message: string): void {
  container.textContent = "";
  container.appendChild(banner("error", message));
  const button = el("button", { type: "button" }, ["Retry"]);
  button.addEventListener("click", retry);
  container.appendChild(button);
}

function table(headers: string[], rows: (string | Node)[][]): HTMLElement {
  const head = el("tr", {}, headers.map((h) => el("th", {}, [h])));
  const body = rows.map((cells) => el("tr", {}, cells.map((c) => el("td", {}, [c]))));
  return el("table", { class: "listing" }, [head, ...body]);
}

// -- home ---------------------------------------------------------------

export function renderHome(container: HTMLElement): void {
  container.textContent = "";
  container.append(
    el("h1", {}, ["Sea-level observation compilation"]),
    el("p", {}, [
      "Georeferenced, age-dated sea-level observations organized by area, " +
        "publication and indicator. Use the menu to add or list records, " +
        "see the global map, or compare areas on one chart.",
    ]),
    el("p", {}, [
      "Vertical land movement records: ",
      el("a", { href: "#/vlm/add" }, ["add"]),
      " | ",
      el("a", { href: "#/vlm/list" }, ["list all"]),
    ]),
  );
}

// -- simple add forms -----------------------------------------------------

function simpleAddForm(
  container: HTMLElement,
  title: string,
  fields: { name: string; label: string; type?: string }[],
  submit: (values: Record<string, string>) => Promise<{ id: number }>,
): void {
  container.textContent = "";
  container.appendChild(el("h1", {}, [title]));
  const status = el("div", {});
  const form = el("form", { class: "entry-form" });
  const inputs: Record<string, HTMLInputElement> = {};
  for (const field of fields) {
    const input = el("input", { name: field.name, type: field.type ?? "text" });
    inputs[field.name] = input;
    form.appendChild(el("label", {}, [field.label, input]));
  }
  const button = el("button", { type: "submit" }, ["Submit"]);
  form.appendChild(button);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const values: Record<string, string> = {};
    for (const [name, input] of Object.entries(inputs)) {
      values[name] = input.value;
    }
    submit(values)
      .then(({ id }) => {
        status.textContent = "";
        status.appendChild(banner("ok", `Saved with id ${id}`));
        for (const input of Object.values(inputs)) {
          input.value = "";
        }
      })
      .catch((err) => {
        status.textContent = "";
        const message = err instanceof ApiError ? err.message : "Network problem; please retry.";
        status.appendChild(banner("error", message));
      });
  });
  container.append(form, status);
}

export function renderAreaAdd(container: HTMLElement, client: Client): void {
  simpleAddForm(container, "Add area", [{ name: "name", label: "Area name" }], (v) =>
    client.addArea(v.name),
  );
}

export function renderPublicationAdd(container: HTMLElement, client: Client): void {
  simpleAddForm(
    container,
    "Add publication",
    [
      { name: "title", label: "Title" },
      { name: "authors", label: "Authors" },
      { name: "year", label: "Year", type: "number" },
    ],
    (v) => client.addPublication(v.title, v.authors, Number(v.year)),
  );
}

export function renderIndicatorAdd(container: HTMLElement, client: Client): void {
  simpleAddForm(container, "Add indicator", [{ name: "name", label: "Indicator name" }], (v) =>
    client.addIndicator(v.name),
  );
}

export function renderVlmAdd(container: HTMLElement, client: Client): void {
  simpleAddForm(
    container,
    "Add vertical land movement",
    [
      { name: "latitude", label: "Latitude (-90 to 90)", type: "number" },
      { name: "longitude", label: "Longitude (-180 to 180)", type: "number" },
      { name: "age_start", label: "Age start (calendar year)", type: "number" },
      { name: "age_end", label: "Age end (calendar year)", type: "number" },
      { name: "velocity", label: "Velocity (mm/yr, positive = uplift)", type: "number" },
      { name: "area_id", label: "Area id", type: "number" },
    ],
    (v) =>
      client.addVlm({
        latitude: Number(v.latitude),
        longitude: Number(v.longitude),
        age_start: Number(v.age_start),
        age_end: Number(v.age_end),
        velocity: Number(v.velocity),
        area_id: Number(v.area_id),
      }),
  );
}

// -- list pages -----------------------------------------------------------

export function renderAreaList(container: HTMLElement, client: Client): void {
  const draw = () =>
    client
      .listAreas()
      .then((areas: AreaRow[]) => {
        container.textContent = "";
        container.appendChild(el("h1", {}, ["Areas"]));
        container.appendChild(
          table(
            ["ID", "Name", "Observations"],
            areas.map((a) => [
              String(a.id),
              a.name,
              el("a", { href: `#/observation/list/area/${a.id}` }, ["list"]),
            ]),
          ),
        );
        container.appendChild(downloadButton(client, "areas", "Download areas.csv"));
      })
      .catch(() => errorPanel(container, draw, "Could not load areas."));
  draw();
}

export function renderPublicationList(container: HTMLElement, client: Client): void {
  const draw = () =>
    client
      .listPublications()
      .then((pubs: PublicationRow[]) => {
        container.textContent = "";
        container.appendChild(el("h1", {}, ["Publications"]));
        container.appendChild(
          table(
            ["ID", "Title", "Authors", "Year", "Map", "Observations"],
            pubs.map((p) => [
              String(p.id),
              p.title,
              p.authors,
              String(p.year),
              el("a", { href: `#/map/publication/${p.id}` }, ["view map"]),
              el("a", { href: `#/observation/list/publication/${p.id}` }, ["list"]),
            ]),
          ),
        );
        container.appendChild(downloadButton(client, "publications", "Download publications.csv"));
      })
      .catch(() => errorPanel(container, draw, "Could not load publications."));
  draw();
}

export function renderIndicatorList(container: HTMLElement, client: Client): void {
  const draw = () =>
    client
      .listIndicators()
      .then((rows: IndicatorRow[]) => {
        container.textContent = "";
        container.appendChild(el("h1", {}, ["Indicators"]));
        container.appendChild(table(["ID", "Name"], rows.map((i) => [String(i.id), i.name])));
        container.appendChild(downloadButton(client, "indicators", "Download indicators.csv"));
      })
      .catch(() => errorPanel(container, draw, "Could not load indicators."));
  draw();
}

export function renderObservationList(
  container: HTMLElement,
  client: Client,
  filter?: { kind: "area" | "publication"; id: number },
): void {
  const draw = () => {
    const fetchRows = filter
      ? client.getObservations(filter.kind, filter.id)
      : client.listObservations();
    fetchRows
      .then((rows: ObservationRow[]) => {
        container.textContent = "";
        const title = filter ? `Observations of ${filter.kind} ${filter.id}` : "Observations";
        container.appendChild(el("h1", {}, [title]));
        container.appendChild(
          table(
            ["ID", "Latitude", "Longitude", "Height (m)", "Error (m)", "Age", "Area", "Publication", "Indicator"],
            rows.map((o) => [
              String(o.id),
              String(o.latitude),
              String(o.longitude),
              String(o.height),
              String(o.error),
              describeAge(o.age),
              String(o.area_id),
              String(o.publication_id),
              String(o.indicator_id),
            ]),
          ),
        );
        container.appendChild(
          downloadButton(client, "observations", "Download observations.csv", filter),
        );
      })
      .catch(() => errorPanel(container, draw, "Could not load observations."));
  };
  draw();
}

export function renderVlmList(container: HTMLElement, client: Client): void {
  const draw = () =>
    client
      .listVlms()
      .then((rows) => {
        container.textContent = "";
        container.appendChild(el("h1", {}, ["Vertical land movement"]));
        container.appendChild(
          table(
            ["ID", "Latitude", "Longitude", "Age start", "Age end", "Velocity (mm/yr)", "Area"],
            rows.map((v) => [
              String(v.id),
              String(v.latitude),
              String(v.longitude),
              labelCalendarYear(v.age_start),
              labelCalendarYear(v.age_end),
              String(v.velocity),
              String(v.area_id),
            ]),
          ),
        );
        container.appendChild(downloadButton(client, "vlm", "Download vlm.csv"));
      })
      .catch(() => errorPanel(container, draw, "Could not load VLM records."));
  draw();
}

// -- observation entry form -------------------------------------------------

const NUMERIC_LABELS: Record<string, string> = {
  latitude: "Latitude (-90 to 90 degrees)",
  longitude: "Longitude (-180 to 180 degrees)",
  height: "Height (m relative to mean sea level)",
  error: "Error (m)",
};

export function renderObservationAdd(container: HTMLElement, client: Client): void {
  container.textContent = "";
  container.appendChild(el("h1", {}, ["Add observation"]));
  const status = el("div", {});
  const form = el("form", { class: "entry-form", "data-form": "observation" });
  let state: FormState = initialFormState();

  const inputs = new Map<FieldName, HTMLInputElement | HTMLSelectElement>();
  const errorSlots = new Map<FieldName, HTMLElement>();
  const rows = new Map<FieldName, HTMLElement>();

  function fieldRow(field: FieldName, label: string, input: HTMLInputElement | HTMLSelectElement): HTMLElement {
    const message = el("span", { class: "field-error" });
    const row = el("div", { class: "field-row", "data-field": field }, [
      el("label", {}, [label, input]),
      message,
    ]);
    inputs.set(field, input);
    errorSlots.set(field, message);
    rows.set(field, row);
    return row;
  }

  for (const field of ["latitude", "longitude", "height", "error"] as FieldName[]) {
    const input = el("input", { type: "text", inputmode: "decimal", name: field });
    input.addEventListener("input", () => {
      state = setField(state, field, input.value);
      sync();
    });
    form.appendChild(fieldRow(field, NUMERIC_LABELS[field], input));
  }

  const selects: [FieldName, string, Promise<{ id: number; label: string }[]>][] = [
    ["areaId", "Area", client.listAreas().then((rows) => rows.map((a) => ({ id: a.id, label: a.name })))],
    [
      "indicatorId",
      "Indicator",
      client.listIndicators().then((rows) => rows.map((i) => ({ id: i.id, label: i.name }))),
    ],
    [
      "publicationId",
      "Publication",
      client.listPublications().then((rows) => rows.map((p) => ({ id: p.id, label: p.title }))),
    ],
  ];
  for (const [field, label, options] of selects) {
    const select = el("select", { name: field });
    select.appendChild(el("option", { value: "" }, ["choose..."]));
    options
      .then((rows) => {
        for (const row of rows) {
          select.appendChild(el("option", { value: String(row.id) }, [row.label]));
        }
      })
      .catch(() => {
        status.appendChild(banner("error", `Could not load the ${label.toLowerCase()} list.`));
      });
    select.addEventListener("change", () => {
      state = setField(state, field, select.value);
      sync();
    });
    form.appendChild(fieldRow(field, label, select));
  }

  const kindSelect = el("select", { name: "ageKind" }, []);
  kindSelect.append(el("option", { value: "absolute" }, ["Absolute"]), el("option", { value: "relative" }, ["Relative"]));
  kindSelect.addEventListener("change", () => {
    state = setAgeKind(state, kindSelect.value as AgeKind);
    sync();
  });
  form.appendChild(el("div", { class: "field-row" }, [el("label", {}, ["Age type", kindSelect])]));

  const scaleSelect = el("select", { name: "ageScale" });
  scaleSelect.append(
    el("option", { value: "ADBC" }, ["AD/BC (calendar years)"]),
    el("option", { value: "BP" }, ["Before Present (converted to AD/BC)"]),
  );
  scaleSelect.addEventListener("change", () => {
    state = setAgeScale(state, scaleSelect.value as AgeScale);
    sync();
  });
  form.appendChild(el("div", { class: "field-row" }, [el("label", {}, ["Age scale", scaleSelect])]));

  const upperInput = el("input", { type: "text", inputmode: "decimal", name: "ageUpper" });
  upperInput.addEventListener("input", () => {
    state = setField(state, "ageUpper", upperInput.value);
    sync();
  });
  const upperLabelText = el("span", {}, [ageUpperLabel(state)]);
  const upperRow = el("div", { class: "field-row", "data-field": "ageUpper" }, [
    el("label", {}, [upperLabelText, upperInput]),
    el("span", { class: "field-error" }),
  ]);
  inputs.set("ageUpper", upperInput);
  errorSlots.set("ageUpper", upperRow.querySelector(".field-error") as HTMLElement);
  rows.set("ageUpper", upperRow);
  form.appendChild(upperRow);

  const lowerInput = el("input", { type: "text", inputmode: "decimal", name: "ageLower" });
  lowerInput.addEventListener("input", () => {
    state = setField(state, "ageLower", lowerInput.value);
    sync();
  });
  form.appendChild(fieldRow("ageLower", "Lower limit", lowerInput));

  const preview = el("p", { class: "bp-preview" });
  form.appendChild(preview);

  const submit = el("button", { type: "submit" }, ["Submit observation"]);
  form.appendChild(submit);

  function sync(): void {
    (rows.get("ageLower") as HTMLElement).hidden = !lowerLimitVisible(state);
    upperLabelText.textContent = ageUpperLabel(state);
    for (const [field, slot] of errorSlots.entries()) {
      slot.textContent = state.errors[field] ?? "";
    }
    submit.disabled = !canSubmit(state);
    const converted = bpPreview(state);
    if (!converted) {
      preview.textContent = "";
    } else {
      const parts: string[] = [];
      if (converted.upper !== null) {
        parts.push(`${ageUpperLabel(state)} → ${labelCalendarYear(converted.upper)}`);
      }
      if (converted.lower !== null) {
        parts.push(`Lower limit → ${labelCalendarYear(converted.lower)}`);
      }
      preview.textContent = parts.length ? `Converted to calendar scale: ${parts.join(", ")}` : "";
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const payload = toPayload(state);
    if (!payload) {
      return;
    }
    client
      .addObservation(payload)
      .then(({ id }) => {
        status.textContent = "";
        status.appendChild(banner("ok", `Observation saved with id ${id}`));
        state = clearForm(state);
        for (const input of inputs.values()) {
          input.value = "";
        }
        sync();
      })
      .catch((err) => {
        status.textContent = "";
        if (err instanceof ApiError) {
          status.appendChild(banner("error", err.message));
          const field = fieldFromServer(err.body.field);
          if (field) {
            const slot = errorSlots.get(field);
            if (slot) {
              slot.textContent = err.message;
            }
            rows.get(field)?.classList.add("highlight");
          }
        } else {
          // network failure: keep every entry so the user can retry
          status.appendChild(banner("error", "Network problem; your entries are kept. Retry submitting."));
        }
      });
  });

  sync();
  container.append(form, status);
}

// -- map and graphs ----------------------------------------------------------

export function renderMapPage(
  container: HTMLElement,
  client: Client,
  scope: { publicationId?: number } = {},
): void {
  const draw = () => {
    const fetchRows =
      scope.publicationId === undefined
        ? client.listObservations()
        : client.getObservations("publication", scope.publicationId);
    fetchRows
      .then((rows) => {
        container.textContent = "";
        const title =
          scope.publicationId === undefined
            ? "All observations"
            : `Observations of publication ${scope.publicationId}`;
        container.appendChild(el("h1", {}, [title]));
        const mapBox = el("div", { class: "map-box" });
        container.appendChild(mapBox);
        renderMap(mapBox, rows);
      })
      .catch(() => errorPanel(container, draw, "Could not load observations for the map."));
  };
  draw();
}

export function renderGraphsPage(container: HTMLElement, client: Client): void {
  const draw = () => {
    client
      .getChart()
      .then((series) => {
        container.textContent = "";
        container.appendChild(el("h1", {}, ["Sea-level comparison"]));
        container.appendChild(
          el("p", {}, ["Click legend entries to hide or unhide areas; drag to zoom; the toolbox saves an image."]),
        );
        const box = el("div", { class: "chart-box" });
        container.appendChild(box);
        renderChart(box, series);
      })
      .catch(() => errorPanel(container, draw, "Could not load the chart data."));
  };
  draw();
}
