// Hash router with a latest-wins guard: every navigation bumps a
// token, and async view renders check the token before touching the
// DOM, so a slow response for a page the user already left is dropped.

export interface RenderContext {
  /** True while this render is still the most recent navigation. */
  current(): boolean;
  outlet: HTMLElement;
}

export type ViewRenderer = (
  ctx: RenderContext,
  params: Record<string, string>,
) => void | Promise<void>;

interface Route {
  pattern: RegExp;
  names: string[];
  render: ViewRenderer;
}

export class Router {
  private routes: Route[] = [];
  private fallback: ViewRenderer | null = null;
  private token = 0;

  constructor(private outlet: HTMLElement) {}

  /** Register a route like "/concepts/:name". */
  on(path: string, render: ViewRenderer): this {
    const names: string[] = [];
    const pattern = path.replace(/:([a-z_]+)/g, (_, name: string) => {
      names.push(name);
      return "([^/]+)";
    });
    this.routes.push({ pattern: new RegExp(`^${pattern}$`), names, render });
    return this;
  }

  otherwise(render: ViewRenderer): this {
    this.fallback = render;
    return this;
  }

  start(): void {
    window.addEventListener("hashchange", () => this.dispatch());
    this.dispatch();
  }

  navigate(path: string): void {
    if (window.location.hash === `#${path}`) {
      this.dispatch();
    } else {
      window.location.hash = path;
    }
  }

  dispatch(): void {
    const raw = window.location.hash.replace(/^#/, "") || "/";
    const [path, query = ""] = raw.split("?");
    this.token += 1;
    const token = this.token;
    const ctx: RenderContext = {
      current: () => token === this.token,
      outlet: this.outlet,
    };
    for (const route of this.routes) {
      const match = path.match(route.pattern);
      if (!match) continue;
      const params: Record<string, string> = {};
      route.names.forEach((name, i) => {
        params[name] = decodeURIComponent(match[i + 1]);
      });
      for (const [key, value] of new URLSearchParams(query)) {
        params[key] = value;
      }
      void route.render(ctx, params);
      return;
    }
    if (this.fallback) {
      const params: Record<string, string> = {};
      for (const [key, value] of new URLSearchParams(query)) {
        params[key] = value;
      }
      void this.fallback(ctx, params);
    }
  }
}
