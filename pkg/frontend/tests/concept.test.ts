import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import { renderConcept } from "../src/views/concept";
import { flush, installFetch, makeContext, texts } from "./helpers";
import elephant from "./fixtures/concept_elephant.json";
import bartender from "./fixtures/concept_bartender.json";
import notFound from "./fixtures/error_not_found.json";

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

describe("concept page", () => {
  const navigate = vi.fn();

  beforeEach(() => navigate.mockClear());

  async function renderElephant(): Promise<HTMLElement> {
    installFetch({
      "GET /api/concepts/elephant": { status: 200, body: elephant },
    });
    const { ctx, outlet } = makeContext();
    await renderConcept(ctx, { name: "elephant" }, navigate);
    return outlet;
  }

  it("shows the header panel with name, synset, wiki link, and lemmas", async () => {
    const outlet = await renderElephant();
    expect(outlet.querySelector("h1")?.textContent).toBe("elephant");
    const image = outlet.querySelector<HTMLImageElement>(".concept-image");
    expect(image?.getAttribute("src")).toBe(elephant.image_url);
    const meta = outlet.querySelector(".concept-meta")!;
    expect(meta.textContent).toContain(elephant.wordnet_synset_id);
    const wiki = meta.querySelector("a")!;
    expect(wiki.getAttribute("href")).toBe("https://en.wikipedia.org/wiki/Elephant");
    expect(meta.textContent).toContain("pachyderm");
  });

  it("shows the stats footer summary verbatim", async () => {
    const outlet = await renderElephant();
    expect(outlet.querySelector(".stats-footer")?.textContent)
      .toBe(elephant.stats.summary);
  });

  it("lists subgroup chips whose frequencies match the payload", async () => {
    const outlet = await renderElephant();
    const chips = outlet.querySelectorAll(".chip-subgroup");
    expect(chips.length).toBe(elephant.subgroups.length);
    elephant.subgroups.forEach((subgroup, i) => {
      expect(chips[i].textContent).toContain(subgroup.name);
      expect(chips[i].querySelector(".chip-frequency")?.textContent)
        .toBe(String(subgroup.frequency));
    });
  });

  it("lists aspect chips whose frequencies match the payload", async () => {
    const outlet = await renderElephant();
    const chips = outlet.querySelectorAll(".chip-aspect");
    expect(chips.length).toBe(elephant.aspects.length);
    elephant.aspects.forEach((aspect, i) => {
      expect(chips[i].textContent).toContain(aspect.name);
      expect(chips[i].querySelector(".chip-frequency")?.textContent)
        .toBe(String(aspect.frequency));
    });
  });

  it("navigates to the subgroup concept when its chip is clicked", async () => {
    const outlet = await renderElephant();
    const chip = outlet.querySelector<HTMLButtonElement>(".chip-subgroup")!;
    chip.click();
    expect(navigate).toHaveBeenCalledWith("/concepts/asian%20elephant");
  });

  it("groups assertions under one heading per predicate run", async () => {
    const outlet = await renderElephant();
    const expected: string[] = [];
    for (const assertion of elephant.assertions) {
      if (expected[expected.length - 1] !== assertion.predicate) {
        expected.push(assertion.predicate);
      }
    }
    expect(texts(outlet, ".predicate-group")).toEqual(expected);
  });

  it("renders every assertion with its payload frequency", async () => {
    const outlet = await renderElephant();
    for (const assertion of elephant.assertions) {
      const row = outlet.querySelector(`[data-id="${assertion.id}"]`)!;
      expect(row.querySelector(".assertion-text")?.textContent).toBe(
        `${assertion.subject} ${assertion.predicate} ${assertion.object}`.trim());
      expect(row.querySelector(".assertion-frequency")?.textContent)
        .toBe(String(assertion.frequency));
    }
  });

  it("marks exactly the faceted assertions", async () => {
    const outlet = await renderElephant();
    for (const assertion of elephant.assertions) {
      const row = outlet.querySelector(`[data-id="${assertion.id}"]`)!;
      const marker = row.querySelector(".facet-marker");
      if (assertion.has_facets) {
        expect(marker).not.toBeNull();
      } else {
        expect(marker).toBeNull();
      }
    }
  });

  it("toggles the facet diagram when the marker is clicked", async () => {
    const outlet = await renderElephant();
    const row = outlet.querySelector('[data-id="4340afb6fa7be107"]')!;
    const marker = row.querySelector<HTMLButtonElement>(".facet-marker")!;
    expect(row.querySelector("svg.facet-diagram")).toBeNull();
    marker.click();
    expect(row.querySelector("svg.facet-diagram")).not.toBeNull();
    marker.click();
    expect(row.querySelector("svg.facet-diagram")).toBeNull();
  });

  it("hides the aspect chip list when the payload has no aspects", async () => {
    installFetch({
      "GET /api/concepts/bartender": { status: 200, body: bartender },
    });
    const { ctx, outlet } = makeContext();
    await renderConcept(ctx, { name: "bartender" }, navigate);
    expect(outlet.querySelector(".aspect-chips")).toBeNull();
    expect(outlet.querySelectorAll(".chip-subgroup").length).toBe(1);
  });

  it("shows the not-found screen with a search box for unknown concepts", async () => {
    installFetch({
      "GET /api/concepts/unicorn": { status: 404, body: notFound },
    });
    const { ctx, outlet } = makeContext();
    await renderConcept(ctx, { name: "unicorn" }, navigate);
    expect(outlet.querySelector(".not-found")).not.toBeNull();
    expect(outlet.textContent).toContain("unicorn");
    expect(outlet.querySelector("input.concept-search")).not.toBeNull();
  });

  it("leaves the outlet alone when the navigation is stale", async () => {
    installFetch({
      "GET /api/concepts/elephant": { status: 200, body: elephant },
    });
    const outlet = document.createElement("main");
    outlet.append(document.createTextNode("newer page"));
    await renderConcept(
      { current: () => false, outlet }, { name: "elephant" }, navigate);
    await flush();
    expect(outlet.textContent).toBe("newer page");
  });
});
