// Typed client for the backend REST endpoints, plus the stale-response
// guard every control uses (latest request wins).

export interface CatalogEntry {
  series_id: string;
  title: string;
  survey: string;
  measure: string;
  modifier: string | null;
  adjusted: boolean;
  fips: string | null;
  geo_name: string | null;
  unit: string;
  dataset: string | null;
}

export interface Observation {
  period: string;
  value: number | null;
}

export interface SeriesBody {
  series_id: string;
  title: string;
  kind: string;
  unit: string;
  observations: Observation[];
}

export interface HeadlineBody {
  period: string;
  unemployment_rate: number | null;
  rate_delta: number | null;
  nonfarm_level: number | null;
  nonfarm_delta: number | null;
}

export interface GeoBody {
  dataset: string;
  period: string;
  adjusted: boolean;
  delta: boolean;
  values: Record<string, number | null>;
}

export interface TreeBody {
  label: string;
  color_class: string;
  series_id?: string;
  children?: TreeBody[];
}

export interface StatusBody {
  status: {
    color: "GREEN" | "YELLOW" | "RED";
    last_ingest: string | null;
    series_count: number;
    record_count: number;
    app_version: string;
  };
  log: {
    started_at: string;
    duration: number;
    series_count: number;
    record_count: number;
    outcome: string;
    detail: string;
  }[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    detail: string
  ) {
    super(detail);
    this.name = kind;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  if (!response.ok) {
    let kind = "HttpError";
    let detail = `${response.status} ${response.statusText}`;
    try {
      const body = await response.json();
      if (body && typeof body.error === "string") {
        kind = body.error;
        detail = String(body.detail ?? detail);
      }
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(response.status, kind, detail);
  }
  return (await response.json()) as T;
}

export function exportUrl(
  ids: string[],
  format: "csv" | "json",
  start?: number,
  end?: number
): string {
  const params = new URLSearchParams({ ids: ids.join(","), format });
  if (start !== undefined) params.set("start", String(start));
  if (end !== undefined) params.set("end", String(end));
  return `/api/export?${params}`;
}

export const api = {
  catalog(survey?: string): Promise<{ catalog: CatalogEntry[] }> {
    const query = survey ? `?survey=${encodeURIComponent(survey)}` : "";
    return request(`/api/catalog${query}`);
  },
  series(
    id: string,
    kind: "raw" | "pct" = "raw",
    start?: number,
    end?: number
  ): Promise<SeriesBody> {
    const params = new URLSearchParams({ kind });
    if (start !== undefined) params.set("start", String(start));
    if (end !== undefined) params.set("end", String(end));
    return request(`/api/series/${encodeURIComponent(id)}?${params}`);
  },
  headline(period?: string): Promise<HeadlineBody> {
    const query = period ? `?period=${encodeURIComponent(period)}` : "";
    return request(`/api/headline${query}`);
  },
  geo(
    dataset: string,
    period: string,
    adjusted: boolean,
    delta: boolean
  ): Promise<GeoBody> {
    const params = new URLSearchParams({
      dataset,
      period,
      adjusted: String(adjusted),
      delta: String(delta),
    });
    return request(`/api/geo?${params}`);
  },
  tree(): Promise<TreeBody> {
    return request("/api/tree");
  },
  status(): Promise<StatusBody> {
    return request("/api/admin/status");
  },
  ingest(): Promise<unknown> {
    return request("/api/admin/ingest", { method: "POST" });
  },
  exportText(url: string): Promise<string> {
    return fetch(url).then(async (response) => {
      if (!response.ok) throw new ApiError(response.status, "HttpError", url);
      return response.text();
    });
  },
};

// Serializes overlapping async requests from one control: only the result
// of the most recently started call is delivered; stale ones resolve to
// undefined so callers can simply return.
export class LatestWins {
  private token = 0;

  async run<T>(task: () => Promise<T>): Promise<T | undefined> {
    const mine = ++this.token;
    const result = await task();
    return mine === this.token ? result : undefined;
  }
}
