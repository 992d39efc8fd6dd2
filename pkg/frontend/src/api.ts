// Thin typed client over the tdkit HTTP API. Every number the dashboard
// displays comes out of these calls; there is no domain math on this side.

import type {
  ComponentsPayload,
  ConfigPayload,
  DuePayload,
  ItemPayload,
  LhfPayload,
  LintPayload,
  PlanPayload,
  PrioritizeResponse,
  QualityAttributesPayload,
  SeriesPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public field: string | null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface ItemFilter {
  effort?: number;
  priority?: number;
  component?: string;
  qa?: string;
  open?: boolean;
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "unknown";
  let message = `${response.status} ${response.statusText}`;
  let field: string | null = null;
  try {
    const body = (await response.json()) as {
      error?: { code?: string; message?: string; field?: string | null };
    };
    if (body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
      field = body.error.field ?? null;
    }
  } catch {
    // non-JSON error body, keep the status line
  }
  throw new ApiError(response.status, code, message, field);
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private url(path: string, params?: Record<string, string>): string {
    const url = new URL(path, this.baseUrl);
    for (const [key, value] of Object.entries(params ?? {})) {
      url.searchParams.set(key, value);
    }
    return url.toString();
  }

  private get<T>(path: string, params?: Record<string, string>): Promise<T> {
    return fetch(this.url(path, params)).then((r) => unwrap<T>(r));
  }

  private send<T>(method: string, path: string, body: unknown): Promise<T> {
    return fetch(this.url(path), {
      method,
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  listItems(filter: ItemFilter = {}): Promise<ItemPayload[]> {
    const params: Record<string, string> = {};
    if (filter.effort !== undefined) params.effort = String(filter.effort);
    if (filter.priority !== undefined) params.priority = String(filter.priority);
    if (filter.component !== undefined) params.component = filter.component;
    if (filter.qa !== undefined) params.qa = filter.qa;
    if (filter.open !== undefined) params.open = String(filter.open);
    return this.get<{ items: ItemPayload[] }>("/items", params).then(
      (data) => data.items,
    );
  }

  getItem(id: string): Promise<ItemPayload> {
    return this.get<{ item: ItemPayload }>(
      `/items/${encodeURIComponent(id)}`,
    ).then((data) => data.item);
  }

  createItem(payload: Record<string, unknown>): Promise<ItemPayload> {
    return this.send<{ item: ItemPayload }>("POST", "/items", payload).then(
      (data) => data.item,
    );
  }

  patchItem(
    id: string,
    version: number,
    changes: Record<string, unknown>,
  ): Promise<ItemPayload> {
    return this.send<{ item: ItemPayload }>(
      "PATCH",
      `/items/${encodeURIComponent(id)}`,
      { version, ...changes },
    ).then((data) => data.item);
  }

  prioritize(
    id: string,
    body: Record<string, unknown>,
  ): Promise<PrioritizeResponse> {
    return this.send<PrioritizeResponse>(
      "POST",
      `/items/${encodeURIComponent(id)}/prioritize`,
      body,
    );
  }

  previewRoi(
    id: string,
    overrides: Record<string, unknown>,
  ): Promise<PrioritizeResponse> {
    return this.prioritize(id, {
      method: "roi",
      persist: false,
      overrides,
    });
  }

  due(): Promise<DuePayload> {
    return this.get<DuePayload>("/due");
  }

  lhf(): Promise<LhfPayload> {
    return this.get<LhfPayload>("/analytics/lhf");
  }

  components(depth: number): Promise<ComponentsPayload> {
    return this.get<ComponentsPayload>("/analytics/components", {
      depth: String(depth),
    });
  }

  qualityAttributes(): Promise<QualityAttributesPayload> {
    return this.get<QualityAttributesPayload>("/analytics/quality-attributes");
  }

  series(from: string, to: string): Promise<SeriesPayload> {
    return this.get<SeriesPayload>("/analytics/series", { from, to });
  }

  plan(body: Record<string, unknown> = {}): Promise<PlanPayload> {
    return this.send<PlanPayload>("POST", "/plan", body);
  }

  lint(): Promise<LintPayload> {
    return this.get<LintPayload>("/lint");
  }

  config(): Promise<ConfigPayload> {
    return this.get<ConfigPayload>("/config");
  }
}
