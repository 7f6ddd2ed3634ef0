// Shared test scaffolding: a fetch stub that serves recorded API
// fixtures and a render context wired to a detached DOM node.

import { vi } from "vitest";
import type { RenderContext } from "../src/router";

export interface StubResponse {
  status: number;
  body: unknown;
}

export type RouteTable = Record<string, StubResponse | ((init?: RequestInit) => StubResponse)>;

export interface FetchLog {
  url: string;
  body?: unknown;
}

/** Install a fetch stub keyed by "METHOD path". Returns the call log. */
export function installFetch(routes: RouteTable): FetchLog[] {
  const log: FetchLog[] = [];
  vi.stubGlobal("fetch", vi.fn(async (url: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const key = `${method} ${url}`;
    const entry: FetchLog = { url: key };
    if (init?.body) {
      entry.body = JSON.parse(init.body as string);
    }
    log.push(entry);
    const route = routes[key];
    if (!route) {
      throw new Error(`no stub for ${key}`);
    }
    const reply = typeof route === "function" ? route(init) : route;
    return {
      ok: reply.status >= 200 && reply.status < 300,
      status: reply.status,
      json: async () => reply.body,
    };
  }));
  return log;
}

export function makeContext(): { ctx: RenderContext; outlet: HTMLElement } {
  const outlet = document.createElement("main");
  document.body.append(outlet);
  return { ctx: { current: () => true, outlet }, outlet };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

export function texts(root: Element, selector: string): string[] {
  return Array.from(root.querySelectorAll(selector)).map(
    (node) => node.textContent ?? "");
}
