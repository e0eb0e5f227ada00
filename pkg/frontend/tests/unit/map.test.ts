import { describe, expect, it } from "vitest";

import type { ObservationRow } from "../../src/api.js";
import { MAP_HEIGHT, MAP_WIDTH, buildPins, describeObservation, project } from "../../src/map.js";

function observation(overrides: Partial<ObservationRow> = {}): ObservationRow {
  return {
    id: 1,
    latitude: 38.7,
    longitude: -9.1,
    height: 1.2,
    error: 0.3,
    area_id: 1,
    publication_id: 1,
    indicator_id: 1,
    age: { kind: "absolute", value: -550 },
    ...overrides,
  };
}

describe("projection", () => {
  it("centers the origin", () => {
    expect(project(0, 0)).toEqual({ x: MAP_WIDTH / 2, y: MAP_HEIGHT / 2 });
  });

  it("pins the corners", () => {
    expect(project(90, -180)).toEqual({ x: 0, y: 0 });
    expect(project(-90, 180)).toEqual({ x: MAP_WIDTH, y: MAP_HEIGHT });
  });

  it("grows x with longitude and y southward", () => {
    expect(project(0, 10).x).toBeGreaterThan(project(0, 0).x);
    expect(project(-10, 0).y).toBeGreaterThan(project(0, 0).y);
  });
});

describe("pins", () => {
  it("makes one pin per observation", () => {
    const rows = [observation({ id: 1 }), observation({ id: 2 }), observation({ id: 3 })];
    const pins = buildPins(rows);
    expect(pins).toHaveLength(rows.length);
    expect(pins.map((p) => p.observationId)).toEqual([1, 2, 3]);
  });

  it("is empty for no observations", () => {
    expect(buildPins([])).toEqual([]);
  });

  it("labels pins with id, height and age", () => {
    const label = describeObservation(observation());
    expect(label).toContain("Observation 1");
    expect(label).toContain("1.2 m");
    expect(label).toContain("551 BC"); // astronomical -550
  });

  it("labels relative ages as a range", () => {
    const label = describeObservation(
      observation({ age: { kind: "relative", lower: -1050, upper: -50 } }),
    );
    expect(label).toContain("1051 BC");
    expect(label).toContain("51 BC");
  });
});
