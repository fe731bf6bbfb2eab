// Thin client over the query service. The fetch function is injectable so
// component tests can stub the service and instrument its payloads.

import type { SearchHit, ViewJson } from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path);
    if (!response.ok) {
      throw new ApiError(response.status, `${path} -> ${response.status}`);
    }
    return (await response.json()) as T;
  }

  async search(query: string, limit = 20): Promise<SearchHit[]> {
    const q = encodeURIComponent(query);
    const body = await this.get<{ hits: SearchHit[] }>(
      `/api/researchers?q=${q}&limit=${limit}`,
    );
    return body.hits;
  }

  async tree(nodeId: number, up: number, down: number): Promise<ViewJson> {
    return this.get<ViewJson>(`/api/researchers/${nodeId}/tree?up=${up}&down=${down}`);
  }
}
