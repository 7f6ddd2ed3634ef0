// Not-found screen with its own search box so a dead end is one
// keystroke from a fresh start.

import { clear, el } from "../dom";
import type { RenderContext } from "../router";
import { createSearchBox } from "../search";

export function renderNotFound(
  ctx: RenderContext,
  params: Record<string, string>,
  navigate: (path: string) => void,
): void {
  clear(ctx.outlet);
  const screen = el("div", { class: "not-found" },
    el("h1", {}, "Concept not found"));
  if (params.q) {
    screen.append(el("p", {},
      `Nothing is stored under "${params.q}". Try another concept:`));
  } else {
    screen.append(el("p", {}, "Try another concept:"));
  }
  screen.append(createSearchBox(navigate));
  ctx.outlet.append(screen);
}
