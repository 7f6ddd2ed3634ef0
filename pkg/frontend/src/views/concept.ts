// Concept page: header panel, subgroup and aspect chips, assertions
// grouped by predicate, and a stats footer. Faceted assertions carry a
// marker and expand an inline diagram when clicked.

import { ApiFailure, fetchConcept } from "../api";
import type { AssertionSummary, ConceptPage } from "../api";
import { renderFacetDiagram } from "../diagram";
import { clear, el } from "../dom";
import type { RenderContext } from "../router";
import { renderNotFound } from "./notfound";

function headerPanel(page: ConceptPage): HTMLElement {
  const panel = el("header", { class: "concept-header" });
  if (page.image_url) {
    panel.append(el("img", {
      src: page.image_url, alt: page.name, class: "concept-image",
    }));
  }
  const title = el("div", { class: "concept-title" },
    el("h1", {}, page.name));
  const meta = el("dl", { class: "concept-meta" });
  if (page.wordnet_synset_id) {
    meta.append(el("dt", {}, "synset"),
      el("dd", {}, page.wordnet_synset_id));
  }
  if (page.wikipedia_title) {
    const link = el("a", {
      href: `https://en.wikipedia.org/wiki/${encodeURIComponent(page.wikipedia_title)}`,
      target: "_blank",
      rel: "noopener",
    }, page.wikipedia_title);
    meta.append(el("dt", {}, "wikipedia"), el("dd", {}, link));
  }
  if (page.alternative_lemmas.length > 0) {
    meta.append(el("dt", {}, "also called"),
      el("dd", {}, page.alternative_lemmas.join(", ")));
  }
  title.append(meta);
  panel.append(title);
  return panel;
}

function chipPanel(page: ConceptPage,
  navigate: (path: string) => void): HTMLElement | null {
  if (page.subgroups.length === 0 && page.aspects.length === 0) {
    return null;
  }
  const panel = el("section", { class: "chip-panel" });
  if (page.subgroups.length > 0) {
    const list = el("div", { class: "chips subgroup-chips" });
    for (const subgroup of page.subgroups) {
      const chip = el("button", { class: "chip chip-subgroup" },
        subgroup.name, el("span", { class: "chip-frequency" },
          String(subgroup.frequency)));
      chip.addEventListener("click", () => {
        navigate(`/concepts/${encodeURIComponent(subgroup.name)}`);
      });
      list.append(chip);
    }
    panel.append(el("h2", {}, "Subgroups"), list);
  }
  if (page.aspects.length > 0) {
    const list = el("div", { class: "chips aspect-chips" });
    for (const aspect of page.aspects) {
      const chip = el("button", { class: "chip chip-aspect" },
        aspect.name, el("span", { class: "chip-frequency" },
          String(aspect.frequency)));
      chip.addEventListener("click", () => {
        navigate(`/concepts/${encodeURIComponent(aspect.name)}`);
      });
      list.append(chip);
    }
    panel.append(el("h2", {}, "Aspects"), list);
  }
  return panel;
}

function assertionRow(assertion: AssertionSummary,
  navigate: (path: string) => void): HTMLElement {
  const row = el("li", { class: "assertion-row", "data-id": assertion.id });
  const link = el("a", {
    href: `#/assertions/${assertion.id}`,
    class: "assertion-text",
  }, `${assertion.subject} ${assertion.predicate} ${assertion.object}`.trim());
  row.append(link);
  row.append(el("span", { class: "assertion-frequency" },
    String(assertion.frequency)));
  if (assertion.has_facets) {
    const marker = el("button", {
      class: "facet-marker",
      title: "has facets; click to toggle the diagram",
      "aria-label": "toggle facet diagram",
    }, "*");
    let open: SVGSVGElement | null = null;
    marker.addEventListener("click", () => {
      if (open) {
        open.remove();
        open = null;
      } else {
        open = renderFacetDiagram(assertion);
        row.append(open);
      }
    });
    row.append(marker);
  }
  link.addEventListener("click", (event) => {
    event.preventDefault();
    navigate(`/assertions/${assertion.id}`);
  });
  return row;
}

function assertionBody(page: ConceptPage,
  navigate: (path: string) => void): HTMLElement {
  const body = el("section", { class: "assertion-body" });
  let group: HTMLUListElement | null = null;
  let currentPredicate: string | null = null;
  for (const assertion of page.assertions) {
    if (assertion.predicate !== currentPredicate) {
      currentPredicate = assertion.predicate;
      body.append(el("h3", { class: "predicate-group" }, currentPredicate));
      group = el("ul", { class: "assertion-group" });
      body.append(group);
    }
    group!.append(assertionRow(assertion, navigate));
  }
  if (page.assertions.length === 0) {
    body.append(el("p", { class: "empty" }, "No assertions."));
  }
  return body;
}

export async function renderConcept(
  ctx: RenderContext,
  params: Record<string, string>,
  navigate: (path: string) => void,
): Promise<void> {
  let page: ConceptPage;
  try {
    page = await fetchConcept(params.name);
  } catch (error) {
    if (!ctx.current()) return;
    if (error instanceof ApiFailure && error.body.status === 404) {
      renderNotFound(ctx, { q: params.name }, navigate);
      return;
    }
    clear(ctx.outlet);
    ctx.outlet.append(el("p", { class: "error" }, String(error)));
    return;
  }
  if (!ctx.current()) return;
  clear(ctx.outlet);
  const view = el("article", { class: "concept-page" });
  view.append(headerPanel(page));
  const chips = chipPanel(page, navigate);
  if (chips) view.append(chips);
  view.append(assertionBody(page, navigate));
  view.append(el("footer", { class: "stats-footer" }, page.stats.summary));
  ctx.outlet.append(view);
}
