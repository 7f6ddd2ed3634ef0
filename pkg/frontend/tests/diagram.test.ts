import { describe, expect, it } from "vitest";
import { renderFacetDiagram } from "../src/diagram";
import type { AssertionSummary } from "../src/api";
import bartender from "./fixtures/concept_bartender.json";

const MULTI_FACET: AssertionSummary = {
  id: "0011223344556677",
  subject: "elephant",
  predicate: "use",
  object: "their trunk",
  frequency: 4,
  facets: [
    { label: "purpose", value: "to suck up water", frequency: 2 },
    { label: "manner", value: "carefully", frequency: 1 },
    { label: "temporal", value: "during day", frequency: 1 },
  ],
  has_facets: true,
};

describe("facet diagram", () => {
  it("draws the three triple nodes on the spine", () => {
    const svg = renderFacetDiagram(MULTI_FACET);
    expect(svg.querySelector(".diagram-subject text")?.textContent)
      .toBe("elephant");
    expect(svg.querySelector(".diagram-predicate text")?.textContent)
      .toBe("use");
    expect(svg.querySelector(".diagram-object text")?.textContent)
      .toBe("their trunk");
    expect(svg.querySelectorAll(".diagram-spine").length).toBe(2);
  });

  it("falls back to a placeholder for an empty object", () => {
    const svg = renderFacetDiagram({ ...MULTI_FACET, object: "", facets: [] });
    expect(svg.querySelector(".diagram-object text")?.textContent)
      .toBe("(none)");
  });

  it("draws every facet exactly once with its label", () => {
    const svg = renderFacetDiagram(MULTI_FACET);
    const nodes = svg.querySelectorAll(".diagram-facet");
    expect(nodes.length).toBe(MULTI_FACET.facets.length);
    const values = Array.from(nodes).map(
      (node) => node.querySelector("text")?.textContent);
    expect(values).toEqual(["to suck up water", "carefully", "during day"]);
    const labels = Array.from(svg.querySelectorAll(".diagram-edge-label"))
      .map((node) => node.textContent);
    expect(labels).toEqual(["purpose", "manner", "temporal"]);
    expect(svg.querySelectorAll(".diagram-edge").length)
      .toBe(MULTI_FACET.facets.length);
  });

  it("badges the assertion and every facet with payload frequencies", () => {
    const svg = renderFacetDiagram(MULTI_FACET);
    const badges = Array.from(svg.querySelectorAll(".diagram-badge text"))
      .map((node) => node.textContent);
    expect(badges).toEqual(["4", "2", "1", "1"]);
  });

  it("renders the recorded faceted assertion without an extra facet", () => {
    const assertion = bartender.assertions.find(
      (a) => a.id === "f608a4a3d86ba270")! as AssertionSummary;
    const svg = renderFacetDiagram(assertion);
    const nodes = svg.querySelectorAll(".diagram-facet");
    expect(nodes.length).toBe(1);
    expect(nodes[0].querySelector("text")?.textContent).toBe("quickly");
    const badges = Array.from(svg.querySelectorAll(".diagram-badge text"))
      .map((node) => node.textContent);
    expect(badges).toEqual([String(assertion.frequency), "1"]);
  });
});
