// Age-scale helpers. The client-side conversion duplicates the server
// rule (1950 - BP) purely for instant preview; the server result is
// authoritative.

import type { AgeJson } from "./api.js";

export const BP_DATUM_YEAR = 1950;

export function bpToCalendar(ageBp: number): number {
  return BP_DATUM_YEAR - ageBp;
}

/** Astronomical year 0 is 1 BC, so year y <= 0 labels as (1 - y) BC. */
export function labelCalendarYear(year: number): string {
  const shown = (n: number) => (Number.isInteger(n) ? String(n) : n.toFixed(1));
  if (year <= 0) {
    return `${shown(1 - year)} BC`;
  }
  return `AD ${shown(year)}`;
}

export function describeAge(age: AgeJson): string {
  if (age.kind === "absolute") {
    return labelCalendarYear(age.value ?? 0);
  }
  return `${labelCalendarYear(age.lower ?? 0)} to ${labelCalendarYear(age.upper ?? 0)}`;
}
