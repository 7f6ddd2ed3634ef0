// Topbar concept search with debounced autocompletion. Enter goes to
// the top suggestion; with no suggestions the router shows the
// not-found screen so the user can try again.

import { autocomplete } from "./api";
import { clear, el } from "./dom";

const DEBOUNCE_MS = 250;

export function createSearchBox(
  navigate: (path: string) => void,
): HTMLElement {
  const input = el("input", {
    type: "search",
    class: "concept-search",
    placeholder: "Find a concept...",
    autocomplete: "off",
  });
  const dropdown = el("ul", { class: "search-dropdown", hidden: "" });
  const wrap = el("div", { class: "search-wrap" }, input, dropdown);

  let timer: ReturnType<typeof setTimeout> | null = null;
  let generation = 0;
  let names: string[] = [];

  function hide(): void {
    names = [];
    dropdown.hidden = true;
    clear(dropdown);
  }

  function show(suggestions: string[]): void {
    names = suggestions;
    clear(dropdown);
    if (suggestions.length === 0) {
      dropdown.hidden = true;
      return;
    }
    for (const name of suggestions) {
      const item = el("li", {}, name);
      item.addEventListener("mousedown", () => {
        input.value = "";
        hide();
        navigate(`/concepts/${encodeURIComponent(name)}`);
      });
      dropdown.append(item);
    }
    dropdown.hidden = false;
  }

  input.addEventListener("input", () => {
    const value = input.value.trim();
    if (timer) clearTimeout(timer);
    if (!value) {
      hide();
      return;
    }
    timer = setTimeout(async () => {
      generation += 1;
      const mine = generation;
      try {
        const result = await autocomplete(value);
        if (mine === generation) show(result.names);
      } catch {
        if (mine === generation) hide();
      }
    }, DEBOUNCE_MS);
  });

  input.addEventListener("keydown", (event) => {
    if (event.key !== "Enter") return;
    const term = input.value.trim();
    if (!term) return;
    const target = names[0];
    input.value = "";
    hide();
    if (target) {
      navigate(`/concepts/${encodeURIComponent(target)}`);
    } else {
      navigate(`/not-found?q=${encodeURIComponent(term)}`);
    }
  });

  return wrap;
}
