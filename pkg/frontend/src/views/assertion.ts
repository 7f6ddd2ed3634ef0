// Assertion page: the clustered triples with their frequencies, the
// facet table, and every source sentence with subject, predicate,
// object, and facet spans highlighted in the four theme colors.

import { ApiFailure, fetchAssertion } from "../api";
import type { AssertionDetail, ProvenanceRow } from "../api";
import { provenanceSpans, segmentSentence } from "../bytes";
import { clear, el } from "../dom";
import type { RenderContext } from "../router";
import { SPAN_CLASSES } from "../theme";

export function highlightSentence(row: ProvenanceRow): HTMLElement {
  const holder = el("p", { class: "provenance-sentence" });
  for (const segment of segmentSentence(row.sentence, provenanceSpans(row.spans))) {
    if (segment.kind === null) {
      holder.append(segment.text);
    } else {
      holder.append(el("mark", { class: SPAN_CLASSES[segment.kind] },
        segment.text));
    }
  }
  return holder;
}

function memberTable(detail: AssertionDetail): HTMLElement {
  const table = el("table", { class: "member-table" });
  table.append(el("thead", {}, el("tr", {},
    el("th", {}, "subject"), el("th", {}, "predicate"),
    el("th", {}, "object"), el("th", {}, "frequency"))));
  const body = el("tbody");
  for (const member of detail.cluster_members) {
    body.append(el("tr", {},
      el("td", {}, member.s), el("td", {}, member.p),
      el("td", {}, member.o),
      el("td", { class: "member-frequency" }, String(member.frequency))));
  }
  table.append(body);
  return table;
}

function facetTable(detail: AssertionDetail): HTMLElement {
  const table = el("table", { class: "facet-table" });
  table.append(el("thead", {}, el("tr", {},
    el("th", {}, "value"), el("th", {}, "type"),
    el("th", {}, "frequency"))));
  const body = el("tbody");
  for (const facet of detail.facets) {
    body.append(el("tr", {},
      el("td", {}, facet.value), el("td", {}, facet.label),
      el("td", { class: "facet-frequency" }, String(facet.frequency))));
  }
  table.append(body);
  return table;
}

function provenanceList(detail: AssertionDetail): HTMLElement {
  const section = el("section", { class: "provenance" },
    el("h2", {}, "Sources"));
  for (const row of detail.provenance) {
    const entry = el("div", { class: "provenance-row" });
    entry.append(highlightSentence(row));
    entry.append(el("a", {
      href: row.url, target: "_blank", rel: "noopener",
      class: "provenance-url",
    }, row.url));
    section.append(entry);
  }
  if (detail.provenance.length === 0) {
    section.append(el("p", { class: "empty" }, "No recorded sources."));
  }
  return section;
}

export async function renderAssertion(
  ctx: RenderContext,
  params: Record<string, string>,
): Promise<void> {
  let detail: AssertionDetail;
  try {
    detail = await fetchAssertion(params.id);
  } catch (error) {
    if (!ctx.current()) return;
    clear(ctx.outlet);
    if (error instanceof ApiFailure && error.body.status === 404) {
      ctx.outlet.append(el("div", { class: "not-found" },
        el("h1", {}, "Assertion not found"),
        el("p", {}, error.body.message)));
    } else {
      ctx.outlet.append(el("p", { class: "error" }, String(error)));
    }
    return;
  }
  if (!ctx.current()) return;
  clear(ctx.outlet);
  const title = `${detail.subject} ${detail.predicate} ${detail.object}`.trim();
  const view = el("article", { class: "assertion-page" },
    el("h1", {}, title,
      el("span", { class: "assertion-frequency" }, String(detail.frequency))),
    el("h2", {}, "Clustered triples"),
    memberTable(detail),
    el("h2", {}, "Facets"),
    detail.facets.length > 0
      ? facetTable(detail)
      : el("p", { class: "empty facet-table-empty" }, "No facets."),
    provenanceList(detail));
  ctx.outlet.append(view);
}
