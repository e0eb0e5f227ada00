// Pure state model for the observation entry form. The DOM layer renders
// from this and feeds events back in; keeping it pure makes the
// visibility and submit rules testable without a browser.
//
// Field layout follows the original entry form: the "upper limit" box is
// the only age box shown for absolute ages (it holds the value), and the
// "lower limit" box appears only for relative ages.

import type { AddObservationBody } from "./api.js";
import { bpToCalendar } from "./age.js";

export type AgeKind = "absolute" | "relative";
export type AgeScale = "BP" | "ADBC";

export const NUMERIC_FIELDS = [
  "latitude",
  "longitude",
  "height",
  "error",
  "ageUpper",
  "ageLower",
] as const;
export const SELECT_FIELDS = ["areaId", "publicationId", "indicatorId"] as const;

export type NumericField = (typeof NUMERIC_FIELDS)[number];
export type SelectField = (typeof SELECT_FIELDS)[number];
export type FieldName = NumericField | SelectField;

export interface FormState {
  values: Record<FieldName, string>;
  ageKind: AgeKind;
  ageScale: AgeScale;
  errors: Partial<Record<FieldName, string>>;
}

export function initialFormState(): FormState {
  const values = {} as Record<FieldName, string>;
  for (const field of [...NUMERIC_FIELDS, ...SELECT_FIELDS]) {
    values[field] = "";
  }
  return { values, ageKind: "absolute", ageScale: "ADBC", errors: {} };
}

export function lowerLimitVisible(state: FormState): boolean {
  return state.ageKind === "relative";
}

/** The age inputs shown in the current state, in display order. */
export function visibleAgeFields(state: FormState): NumericField[] {
  return state.ageKind === "absolute" ? ["ageUpper"] : ["ageUpper", "ageLower"];
}

export function ageUpperLabel(state: FormState): string {
  return state.ageKind === "absolute" ? "Age value" : "Upper limit";
}

function visibleFields(state: FormState): FieldName[] {
  const numeric = NUMERIC_FIELDS.filter(
    (f) => f !== "ageLower" || lowerLimitVisible(state),
  );
  return [...numeric, ...SELECT_FIELDS];
}

function checkField(state: FormState, field: FieldName, raw: string): string | null {
  if (raw.trim() === "") {
    return null; // emptiness blocks submit but is not an inline error
  }
  if ((SELECT_FIELDS as readonly string[]).includes(field)) {
    return null; // select options come from the server lists
  }
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    return "must be a number";
  }
  switch (field) {
    case "latitude":
      return value < -90 || value > 90 ? "must be between -90 and 90 degrees" : null;
    case "longitude":
      return value < -180 || value > 180 ? "must be between -180 and 180 degrees" : null;
    case "error":
      return value < 0 ? "must be zero or more meters" : null;
    default:
      return null;
  }
}

function revalidate(state: FormState): FormState {
  const errors: Partial<Record<FieldName, string>> = {};
  for (const field of visibleFields(state)) {
    const message = checkField(state, field, state.values[field]);
    if (message) {
      errors[field] = message;
    }
  }
  return { ...state, errors };
}

export function setField(state: FormState, field: FieldName, raw: string): FormState {
  return revalidate({ ...state, values: { ...state.values, [field]: raw } });
}

export function setAgeKind(state: FormState, kind: AgeKind): FormState {
  return revalidate({ ...state, ageKind: kind });
}

export function setAgeScale(state: FormState, scale: AgeScale): FormState {
  return revalidate({ ...state, ageScale: scale });
}

export function clearForm(state: FormState): FormState {
  return { ...initialFormState(), ageKind: state.ageKind, ageScale: state.ageScale };
}

export function hasErrors(state: FormState): boolean {
  return Object.keys(state.errors).length > 0;
}

function allRequiredFilled(state: FormState): boolean {
  return visibleFields(state).every((field) => state.values[field].trim() !== "");
}

/** Submit is enabled only with every visible field filled and no inline message. */
export function canSubmit(state: FormState): boolean {
  return allRequiredFilled(state) && !hasErrors(state);
}

export interface BpPreview {
  upper: number | null;
  lower: number | null;
}

/** Converted calendar values to show while the BP scale is selected. */
export function bpPreview(state: FormState): BpPreview | null {
  if (state.ageScale !== "BP") {
    return null;
  }
  const parse = (raw: string) => {
    const value = Number(raw);
    return raw.trim() !== "" && Number.isFinite(value) ? bpToCalendar(value) : null;
  };
  return {
    upper: parse(state.values.ageUpper),
    lower: lowerLimitVisible(state) ? parse(state.values.ageLower) : null,
  };
}

export function toPayload(state: FormState): AddObservationBody | null {
  if (!canSubmit(state)) {
    return null;
  }
  const num = (field: FieldName) => Number(state.values[field]);
  const age =
    state.ageKind === "absolute"
      ? ({ kind: "absolute", value: num("ageUpper") } as const)
      : ({ kind: "relative", lower: num("ageLower"), upper: num("ageUpper") } as const);
  return {
    latitude: num("latitude"),
    longitude: num("longitude"),
    height: num("height"),
    error: num("error"),
    area_id: num("areaId"),
    publication_id: num("publicationId"),
    indicator_id: num("indicatorId"),
    age_scale: state.ageScale,
    age,
  };
}

/** Map a server-reported field name onto the form field to highlight. */
export function fieldFromServer(name: string | undefined): FieldName | null {
  switch (name) {
    case "latitude":
    case "longitude":
    case "height":
    case "error":
      return name;
    case "age.value":
    case "age.upper":
      return "ageUpper";
    case "age.lower":
      return "ageLower";
    default:
      return null;
  }
}
