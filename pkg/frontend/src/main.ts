import { el } from "./dom";
import { Router } from "./router";
import { createSearchBox } from "./search";
import { renderAssertion } from "./views/assertion";
import { renderBrowse } from "./views/browse";
import { renderConcept } from "./views/concept";
import { renderNotFound } from "./views/notfound";
import { renderQA } from "./views/qa";
import "./style.css";

export function boot(root: HTMLElement): Router {
  const outlet = el("main", { id: "outlet" });
  const router = new Router(outlet);
  const navigate = (path: string) => router.navigate(path);

  const nav = el("nav", { class: "topbar" },
    el("a", { href: "#/browse", class: "brand" }, "facetforge"),
    el("a", { href: "#/browse" }, "Browse"),
    el("a", { href: "#/qa" }, "QA console"),
    createSearchBox(navigate));

  root.append(nav, outlet);

  router
    .on("/", (ctx, params) => renderBrowse(ctx, params, navigate))
    .on("/browse", (ctx, params) => renderBrowse(ctx, params, navigate))
    .on("/concepts/:name", (ctx, params) => renderConcept(ctx, params, navigate))
    .on("/assertions/:id", (ctx, params) => renderAssertion(ctx, params))
    .on("/qa", (ctx) => renderQA(ctx))
    .on("/not-found", (ctx, params) => renderNotFound(ctx, params, navigate))
    .otherwise((ctx, params) => renderNotFound(ctx, params, navigate));
  router.start();
  return router;
}

const root = document.getElementById("app");
if (root) {
  boot(root);
}
