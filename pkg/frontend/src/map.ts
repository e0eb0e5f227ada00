// Flat 2D map of observation locations: an equirectangular SVG with a
// graticule and one pin per observation. No tile service is involved, so
// the map works offline; the pin contract (one per observation, popup
// with id, height and age) is what matters.

import type { ObservationRow } from "./api.js";
import { describeAge } from "./age.js";

export interface Pin {
  x: number;
  y: number;
  observationId: number;
  label: string;
}

export const MAP_WIDTH = 960;
export const MAP_HEIGHT = 480;

export function project(
  latitude: number,
  longitude: number,
  width: number = MAP_WIDTH,
  height: number = MAP_HEIGHT,
): { x: number; y: number } {
  return {
    x: ((longitude + 180) / 360) * width,
    y: ((90 - latitude) / 180) * height,
  };
}

export function describeObservation(o: ObservationRow): string {
  return `Observation ${o.id}: height ${o.height} m ± ${o.error} m, age ${describeAge(o.age)}`;
}

/** One pin per observation, in input order. */
export function buildPins(
  observations: ObservationRow[],
  width: number = MAP_WIDTH,
  height: number = MAP_HEIGHT,
): Pin[] {
  return observations.map((o) => ({
    ...project(o.latitude, o.longitude, width, height),
    observationId: o.id,
    label: describeObservation(o),
  }));
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

export function renderMap(container: HTMLElement, observations: ObservationRow[]): void {
  container.textContent = "";
  const svg = svgElement("svg", {
    viewBox: `0 0 ${MAP_WIDTH} ${MAP_HEIGHT}`,
    class: "world-map",
    role: "img",
  });

  svg.appendChild(
    svgElement("rect", {
      x: "0",
      y: "0",
      width: String(MAP_WIDTH),
      height: String(MAP_HEIGHT),
      class: "map-sea",
    }),
  );
  for (let lon = -150; lon <= 150; lon += 30) {
    const { x } = project(0, lon);
    svg.appendChild(
      svgElement("line", {
        x1: String(x), y1: "0", x2: String(x), y2: String(MAP_HEIGHT), class: "graticule",
      }),
    );
  }
  for (let lat = -60; lat <= 60; lat += 30) {
    const { y } = project(lat, 0);
    svg.appendChild(
      svgElement("line", {
        x1: "0", y1: String(y), x2: String(MAP_WIDTH), y2: String(y),
        class: lat === 0 ? "graticule equator" : "graticule",
      }),
    );
  }

  const popup = document.createElement("div");
  popup.className = "map-popup";
  popup.hidden = true;

  for (const pin of buildPins(observations)) {
    const dot = svgElement("circle", {
      cx: String(pin.x),
      cy: String(pin.y),
      r: "5",
      class: "map-pin",
      "data-observation-id": String(pin.observationId),
    });
    const title = svgElement("title", {});
    title.textContent = pin.label;
    dot.appendChild(title);
    dot.addEventListener("click", () => {
      popup.textContent = pin.label;
      popup.hidden = false;
    });
    svg.appendChild(dot);
  }

  container.appendChild(svg);
  container.appendChild(popup);
  if (observations.length === 0) {
    const note = document.createElement("p");
    note.className = "notice";
    note.textContent = "No observations to show yet.";
    container.appendChild(note);
  }
}
