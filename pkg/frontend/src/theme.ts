// Fixed color mapping for highlighted span kinds. Keeping it in one
// place guarantees the four kinds stay visually distinct everywhere.

export type SpanKind = "subject" | "predicate" | "object" | "facet";

export const SPAN_COLORS: Record<SpanKind, string> = {
  subject: "#bfdbfe",
  predicate: "#fde68a",
  object: "#bbf7d0",
  facet: "#fbcfe8",
};

export const SPAN_CLASSES: Record<SpanKind, string> = {
  subject: "hl-subject",
  predicate: "hl-predicate",
  object: "hl-object",
  facet: "hl-facet",
};
