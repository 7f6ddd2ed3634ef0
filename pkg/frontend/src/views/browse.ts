// Browse page: filter assertions by subject, predicate, and object
// substrings.

import { ApiFailure, searchAssertions } from "../api";
import type { AssertionSummary } from "../api";
import { clear, el } from "../dom";
import type { RenderContext } from "../router";

function resultTable(results: AssertionSummary[],
  navigate: (path: string) => void): HTMLElement {
  if (results.length === 0) {
    return el("p", { class: "empty" }, "No matching assertions.");
  }
  const table = el("table", { class: "search-results" });
  table.append(el("thead", {}, el("tr", {},
    el("th", {}, "subject"), el("th", {}, "predicate"),
    el("th", {}, "object"), el("th", {}, "frequency"))));
  const body = el("tbody");
  for (const hit of results) {
    const row = el("tr", { class: "search-hit", "data-id": hit.id },
      el("td", {}, el("a", {
        href: `#/concepts/${encodeURIComponent(hit.subject)}`,
      }, hit.subject)),
      el("td", {}, hit.predicate),
      el("td", {}, hit.object),
      el("td", { class: "hit-frequency" }, String(hit.frequency)));
    row.addEventListener("click", (event) => {
      if ((event.target as HTMLElement).tagName === "A") return;
      navigate(`/assertions/${hit.id}`);
    });
    body.append(row);
  }
  table.append(body);
  return table;
}

export function renderBrowse(
  ctx: RenderContext,
  _params: Record<string, string>,
  navigate: (path: string) => void,
): void {
  clear(ctx.outlet);
  const fields = {
    s: el("input", { name: "s", placeholder: "subject contains..." }),
    p: el("input", { name: "p", placeholder: "predicate contains..." }),
    o: el("input", { name: "o", placeholder: "object contains..." }),
  };
  const form = el("form", { class: "browse-form" },
    fields.s, fields.p, fields.o,
    el("button", { type: "submit" }, "Search"));
  const status = el("div", { class: "browse-status" });
  const results = el("div", { class: "browse-results" });

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    clear(status);
    clear(results);
    try {
      const found = await searchAssertions(
        fields.s.value, fields.p.value, fields.o.value);
      if (!ctx.current()) return;
      results.append(resultTable(found.results, navigate));
    } catch (error) {
      if (!ctx.current()) return;
      const message = error instanceof ApiFailure
        ? error.body.message : String(error);
      status.append(el("p", { class: "error" }, message));
    }
  });

  ctx.outlet.append(el("article", { class: "browse-page" },
    el("h1", {}, "Browse assertions"), form, status, results));
}
