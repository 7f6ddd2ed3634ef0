// SVG rendering of one assertion: subject, predicate, and object as
// nodes on a spine, one labeled edge per facet fanning out underneath,
// and frequency badges on the assertion and on every facet.

import type { AssertionSummary } from "./api";
import { svgEl } from "./dom";

const NODE_W = 150;
const NODE_H = 38;
const GAP = 60;
const FACET_W = 170;
const FACET_H = 30;
const ROW_GAP = 44;

function node(
  x: number, y: number, w: number, h: number,
  text: string, cls: string,
): SVGGElement {
  const group = svgEl("g", { class: cls });
  group.append(
    svgEl("rect", {
      x: String(x), y: String(y), width: String(w), height: String(h),
      rx: "6",
    }),
    svgEl(
      "text",
      {
        x: String(x + w / 2), y: String(y + h / 2 + 4),
        "text-anchor": "middle",
      },
      text,
    ),
  );
  return group;
}

function badge(x: number, y: number, frequency: number): SVGGElement {
  const group = svgEl("g", { class: "diagram-badge" });
  group.append(
    svgEl("circle", { cx: String(x), cy: String(y), r: "12" }),
    svgEl(
      "text",
      { x: String(x), y: String(y + 4), "text-anchor": "middle" },
      String(frequency),
    ),
  );
  return group;
}

export function renderFacetDiagram(assertion: AssertionSummary): SVGSVGElement {
  const spineY = 20;
  const facetTop = spineY + NODE_H + 50;
  const width = 3 * NODE_W + 2 * GAP + 40;
  const height =
    assertion.facets.length > 0
      ? facetTop + assertion.facets.length * ROW_GAP + 10
      : spineY + NODE_H + 30;

  const svg = svgEl("svg", {
    class: "facet-diagram",
    viewBox: `0 0 ${width} ${height}`,
    role: "img",
    "aria-label": `diagram of ${assertion.subject} ${assertion.predicate}`,
  });

  const sX = 20;
  const pX = sX + NODE_W + GAP;
  const oX = pX + NODE_W + GAP;
  const midY = spineY + NODE_H / 2;

  svg.append(
    svgEl("line", {
      x1: String(sX + NODE_W), y1: String(midY),
      x2: String(pX), y2: String(midY), class: "diagram-spine",
    }),
    svgEl("line", {
      x1: String(pX + NODE_W), y1: String(midY),
      x2: String(oX), y2: String(midY), class: "diagram-spine",
    }),
    node(sX, spineY, NODE_W, NODE_H, assertion.subject, "diagram-subject"),
    node(pX, spineY, NODE_W, NODE_H, assertion.predicate, "diagram-predicate"),
    node(oX, spineY, NODE_W, NODE_H,
      assertion.object || "(none)", "diagram-object"),
    badge(pX + NODE_W, spineY, assertion.frequency),
  );

  assertion.facets.forEach((facet, index) => {
    const y = facetTop + index * ROW_GAP;
    const x = pX + NODE_W / 2 - FACET_W / 2;
    const edge = svgEl("line", {
      x1: String(pX + NODE_W / 2), y1: String(spineY + NODE_H),
      x2: String(x + FACET_W / 2), y2: String(y),
      class: "diagram-edge",
    });
    const label = svgEl(
      "text",
      {
        x: String(x + FACET_W / 2 + 14),
        y: String((spineY + NODE_H + y) / 2),
        class: "diagram-edge-label",
      },
      facet.label,
    );
    svg.append(
      edge,
      label,
      node(x, y, FACET_W, FACET_H, facet.value, "diagram-facet"),
      badge(x + FACET_W, y, facet.frequency),
    );
  });

  return svg;
}
