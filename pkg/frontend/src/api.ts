// Typed client for the compilation service's JSON endpoints. All server
// writes in the app go through here; nothing else mutates server state.

export interface AreaRow {
  id: number;
  name: string;
}

export interface PublicationRow {
  id: number;
  title: string;
  authors: string;
  year: number;
}

export interface IndicatorRow {
  id: number;
  name: string;
}

export interface AgeJson {
  kind: "absolute" | "relative";
  value?: number;
  lower?: number;
  upper?: number;
}

export interface ObservationRow {
  id: number;
  latitude: number;
  longitude: number;
  height: number;
  error: number;
  area_id: number;
  publication_id: number;
  indicator_id: number;
  age: AgeJson;
}

export interface VlmRow {
  id: number;
  latitude: number;
  longitude: number;
  age_start: number;
  age_end: number;
  velocity: number;
  area_id: number;
}

export interface ChartPointJson {
  x: number;
  x_minus: number;
  x_plus: number;
  y: number;
  y_err: number;
  observation_id: number;
}

export interface ChartSeriesJson {
  area_id: number;
  area_name: string;
  points: ChartPointJson[];
}

export interface AddObservationBody {
  latitude: number;
  longitude: number;
  height: number;
  error: number;
  area_id: number;
  publication_id: number;
  indicator_id: number;
  age_scale: "BP" | "ADBC";
  age:
    | { kind: "absolute"; value: number }
    | { kind: "relative"; lower: number; upper: number };
}

export interface AddVlmBody {
  latitude: number;
  longitude: number;
  age_start: number;
  age_end: number;
  velocity: number;
  area_id: number;
}

export interface ErrorBody {
  code: string;
  message: string;
  field?: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ErrorBody,
  ) {
    super(body.message);
  }
}

export type DownloadKind = "areas" | "publications" | "indicators" | "observations" | "vlm";

async function unwrap<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let body: ErrorBody = { code: "Unknown", message: `HTTP ${response.status}` };
    try {
      body = (await response.json()) as ErrorBody;
    } catch {
      // non-JSON error body; keep the fallback
    }
    throw new ApiError(response.status, body);
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  private get<T>(path: string): Promise<T> {
    return fetch(this.base + path).then((r) => unwrap<T>(r));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return fetch(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  listAreas(): Promise<AreaRow[]> {
    return this.get("/API/Area/");
  }

  listPublications(): Promise<PublicationRow[]> {
    return this.get("/API/Pub/");
  }

  listObservations(): Promise<ObservationRow[]> {
    return this.get("/API/Obs/");
  }

  listIndicators(): Promise<IndicatorRow[]> {
    return this.get("/API/Indicator/");
  }

  listVlms(): Promise<VlmRow[]> {
    return this.get("/API/VLM/");
  }

  getName(kind: "area" | "publication", id: number): Promise<{ name: string }> {
    return this.post("/API/GetName/", { kind, id });
  }

  getObservations(filter: "area" | "publication", id: number): Promise<ObservationRow[]> {
    return this.post("/API/GetObservations/", { filter, id });
  }

  addArea(name: string): Promise<{ id: number }> {
    return this.post("/API/AddArea/", { name });
  }

  addPublication(title: string, authors: string, year: number): Promise<{ id: number }> {
    return this.post("/API/AddPub/", { title, authors, year });
  }

  addIndicator(name: string): Promise<{ id: number }> {
    return this.post("/API/AddInd/", { name });
  }

  addObservation(body: AddObservationBody): Promise<{ id: number }> {
    return this.post("/API/AddObs/", body);
  }

  addVlm(body: AddVlmBody): Promise<{ id: number }> {
    return this.post("/API/AddVLM/", body);
  }

  /** Empty (or omitted) id list asks the server for every area. */
  getChart(areaIds: number[] = []): Promise<ChartSeriesJson[]> {
    return this.post("/API/GetChart/", { area_ids: areaIds });
  }

  downloadUrl(kind: DownloadKind, filter?: { kind: "area" | "publication"; id: number }): string {
    const path = `${this.base}/API/Download/${kind}`;
    if (kind === "observations" && filter) {
      return `${path}?filter=${filter.kind}&id=${filter.id}`;
    }
    return path;
  }
}
