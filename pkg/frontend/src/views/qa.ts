// QA console: setup, question, retrieval options, and context sources
// go in; one result row per context source comes out. Span answers are
// highlighted inside their context cell. The form keeps its state
// between submissions so settings can be tweaked run over run.

import { ApiFailure, postQA } from "../api";
import type { QARequestBody, QAResultRow, QASourceInput } from "../api";
import { byteSlice } from "../bytes";
import { clear, el } from "../dom";
import type { RenderContext } from "../router";

const SETUPS = [
  ["masked_prediction", "Masked prediction"],
  ["free_generation", "Free generation"],
  ["guided_generation", "Guided generation"],
  ["span_prediction", "Span prediction"],
] as const;

export function formatConfidence(confidence: number): string {
  return `${(confidence * 100).toFixed(2)}%`;
}

function contextCell(row: QAResultRow): HTMLElement {
  const cell = el("td", { class: "qa-context" });
  if (row.span && row.context) {
    const [start, end] = row.span;
    const before = byteSlice(row.context, 0, start);
    const inside = byteSlice(row.context, start, end);
    const after = byteSlice(
      row.context, end, new TextEncoder().encode(row.context).length);
    cell.append(before, el("mark", { class: "qa-span" }, inside), after);
  } else {
    cell.append(row.context);
  }
  return cell;
}

function answerCell(row: QAResultRow): HTMLElement {
  const cell = el("td", { class: "qa-answers" });
  if (row.error) {
    cell.append(el("span", { class: "qa-row-error" }, row.error));
    return cell;
  }
  const list = el("ul");
  for (const answer of row.answers) {
    const item = el("li", {}, answer.text);
    if (answer.confidence !== undefined) {
      item.append(" ", el("span", { class: "qa-confidence" },
        `(${formatConfidence(answer.confidence)})`));
    }
    list.append(item);
  }
  cell.append(list);
  return cell;
}

function resultTable(rows: QAResultRow[]): HTMLElement {
  const table = el("table", { class: "qa-results" });
  table.append(el("thead", {}, el("tr", {},
    el("th", {}, "Source"), el("th", {}, "Answer(s)"),
    el("th", {}, "Context"))));
  const body = el("tbody");
  for (const row of rows) {
    body.append(el("tr", { class: "qa-row" },
      el("td", { class: "qa-source" }, row.source),
      answerCell(row),
      contextCell(row)));
  }
  table.append(body);
  return table;
}

export function renderQA(ctx: RenderContext): void {
  clear(ctx.outlet);

  const setup = el("select", { name: "setup", class: "qa-setup" });
  for (const [value, label] of SETUPS) {
    setup.append(el("option", { value }, label));
  }
  const question = el("input", {
    name: "question", class: "qa-question",
    placeholder: "Elephants eat [MASK].",
  });
  const method = el("select", { name: "method" },
    el("option", { value: "tfidf" }, "tf-idf"),
    el("option", { value: "overlap" }, "overlap"));
  const k = el("input", { name: "k", type: "number", value: "5", min: "1" });
  const numAnswers = el("input", {
    name: "num_answers", type: "number", value: "3", min: "1",
  });
  const numAnswersField = el("label", { class: "qa-field qa-num-answers" },
    "answers ", numAnswers);
  const prefix = el("input", {
    name: "answer_prefix", placeholder: "Elephants eat",
  });
  const prefixField = el("label", { class: "qa-field qa-prefix", hidden: "" },
    "answer prefix ", prefix);

  const noContext = el("input", {
    type: "checkbox", name: "no_context", class: "qa-no-context",
  });
  noContext.checked = true;
  const noContextField = el("label", { class: "qa-field" },
    noContext, " no context");
  const kbNames = el("input", {
    name: "kbs", class: "qa-kbs",
    placeholder: "knowledge base names, comma separated",
  });
  const custom = el("textarea", {
    name: "custom", class: "qa-custom",
    placeholder: "custom context (optional)",
  });

  const errorBox = el("div", { class: "qa-error", hidden: "" });
  const results = el("div", { class: "qa-results-holder" });

  function applySetupRules(): void {
    const value = setup.value;
    numAnswersField.hidden = value !== "masked_prediction";
    prefixField.hidden = value !== "guided_generation";
    if (value === "span_prediction") {
      noContext.checked = false;
      noContext.disabled = true;
      noContextField.classList.add("disabled");
    } else {
      noContext.disabled = false;
      noContextField.classList.remove("disabled");
    }
  }
  setup.addEventListener("change", applySetupRules);
  applySetupRules();

  const form = el("form", { class: "qa-form" },
    el("fieldset", { class: "qa-part" },
      el("legend", {}, "QA setup"), setup),
    el("fieldset", { class: "qa-part" },
      el("legend", {}, "Question"), question,
      prefixField),
    el("fieldset", { class: "qa-part" },
      el("legend", {}, "Retrieval"),
      el("label", { class: "qa-field" }, "method ", method),
      el("label", { class: "qa-field" }, "top k ", k),
      numAnswersField),
    el("fieldset", { class: "qa-part" },
      el("legend", {}, "Context sources"),
      noContextField, kbNames, custom),
    el("button", { type: "submit", class: "qa-submit" }, "Ask"));

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    errorBox.hidden = true;
    clear(errorBox);

    const sources: QASourceInput[] = [];
    if (noContext.checked && !noContext.disabled) {
      sources.push("no_context");
    }
    for (const name of kbNames.value.split(",")) {
      const trimmed = name.trim();
      if (trimmed) sources.push(`kb:${trimmed}`);
    }
    if (custom.value.trim()) {
      sources.push({ custom: custom.value });
    }

    const body: QARequestBody = {
      setup: setup.value,
      question: question.value,
      sources,
      retrieval_method: method.value,
      k: Number(k.value),
      num_answers: Number(numAnswers.value),
    };
    if (setup.value === "guided_generation") {
      body.answer_prefix = prefix.value;
    }

    try {
      const result = await postQA(body);
      if (!ctx.current()) return;
      clear(results);
      results.append(resultTable(result.rows));
    } catch (error) {
      if (!ctx.current()) return;
      const message = error instanceof ApiFailure
        ? error.body.message : String(error);
      errorBox.append(message);
      errorBox.hidden = false;
    }
  });

  ctx.outlet.append(el("article", { class: "qa-page" },
    el("h1", {}, "Question answering"), form, errorBox, results));
}
