// Span offsets arriving from the API are byte positions in the UTF-8
// encoding of the sentence, not JavaScript string indices. Slicing is
// done on the encoded bytes so multibyte characters line up.

import type { Span } from "./api";
import type { SpanKind } from "./theme";

const encoder = new TextEncoder();
const decoder = new TextDecoder();

export function byteSlice(text: string, start: number, end: number): string {
  return decoder.decode(encoder.encode(text).slice(start, end));
}

export interface Segment {
  text: string;
  kind: SpanKind | null;
}

export interface KindedSpan extends Span {
  kind: SpanKind;
}

/** Split a sentence into plain and highlighted segments.
 *
 * Spans must not overlap (the extractor never emits overlapping
 * elements); any that do are dropped after the first.
 */
export function segmentSentence(sentence: string, spans: KindedSpan[]): Segment[] {
  const bytes = encoder.encode(sentence);
  const ordered = [...spans].sort((a, b) => a.start - b.start);
  const segments: Segment[] = [];
  let cursor = 0;
  for (const span of ordered) {
    if (span.start < cursor || span.end > bytes.length) {
      continue;
    }
    if (span.start > cursor) {
      segments.push({
        text: decoder.decode(bytes.slice(cursor, span.start)),
        kind: null,
      });
    }
    segments.push({
      text: decoder.decode(bytes.slice(span.start, span.end)),
      kind: span.kind,
    });
    cursor = span.end;
  }
  if (cursor < bytes.length) {
    segments.push({ text: decoder.decode(bytes.slice(cursor)), kind: null });
  }
  return segments;
}

export function provenanceSpans(spans: {
  subject?: Span;
  predicate?: Span;
  object?: Span;
  facets: (Span | null)[];
}): KindedSpan[] {
  const out: KindedSpan[] = [];
  if (spans.subject) out.push({ ...spans.subject, kind: "subject" });
  if (spans.predicate) out.push({ ...spans.predicate, kind: "predicate" });
  if (spans.object) out.push({ ...spans.object, kind: "object" });
  for (const slot of spans.facets) {
    if (slot) out.push({ ...slot, kind: "facet" });
  }
  return out;
}
