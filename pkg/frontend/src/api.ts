/**
 * Typed HTTP client for the playbench service.
 *
 * Every method is a thin wrapper over `fetch`; the implementation can be
 * injected so tests run without a network. The client never recomputes any
 * model quantity — payload numbers travel through untouched.
 */

export interface NetSessionConfig {
  model: "perceptron" | "mlp";
  gate: string;
  mode?: string | null;
  lr?: number | null;
  init?: string;
  init_values?: number[] | null;
  seed?: number;
  include_zero_row?: boolean;
  shuffle?: boolean;
  max_epochs?: number;
}

export interface KmeansSessionConfig {
  model: "kmeans";
  n: number;
  k: number;
  seed?: number;
  bounds?: {
    x_min: number;
    x_max: number;
    y_min: number;
    y_max: number;
  } | null;
}

export type SessionConfig = NetSessionConfig | KmeansSessionConfig;

/** One presentation of one sample, exactly as the service reports it. */
export interface IterationRecord {
  step: number;
  epoch: number;
  sample: number;
  inputs: number[];
  desired: number;
  n1: number;
  n2?: number;
  n3?: number;
  output: number;
  error: number;
  weights: number[];
  biases?: number[];
}

export interface NetState {
  weights: number[];
  biases?: number[];
}

export type Pair = [number, number];

export interface CloudState {
  points: Pair[];
  centers: Pair[];
  clusters: number[];
  colors: string[];
}

export interface CreateResponse {
  id: string;
  state: NetState | CloudState;
  status: string;
}

export interface SessionView {
  id: string;
  status: string;
  config: Record<string, unknown>;
  state: NetState | CloudState;
  steps: number;
  epochs_used: number;
}

export interface RunResult {
  converged: boolean;
  epochs_used: number;
}

export interface StatusEvent {
  status: string;
  converged: boolean;
  epochs_used: number;
}

export interface ErrorBody {
  code: string;
  message: string;
  fields: string[];
}

export function isCloudState(state: NetState | CloudState): state is CloudState {
  return "points" in state;
}

/** Error raised when the service answers with a non-2xx status. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly fields: string[];

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code;
    this.fields = body.fields;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class PlaybenchClient {
  readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = "", fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private url(path: string): string {
    return `${this.baseUrl}/api/v1${path}`;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.url(path), init);
    if (response.status === 204) {
      return undefined as T;
    }
    if (!response.ok) {
      let body: ErrorBody;
      try {
        body = (await response.json()) as ErrorBody;
      } catch {
        body = { code: "error", message: response.statusText, fields: [] };
      }
      throw new ApiError(response.status, body);
    }
    return (await response.json()) as T;
  }

  createSession(config: SessionConfig): Promise<CreateResponse> {
    return this.request<CreateResponse>("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(config),
    });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/sessions/${id}`);
  }

  step(id: string, count = 1): Promise<IterationRecord[]> {
    return this.request<IterationRecord[]>(`/sessions/${id}/step`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ count }),
    });
  }

  run(id: string): Promise<RunResult> {
    return this.request<RunResult>(`/sessions/${id}/run`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({}),
    });
  }

  deleteSession(id: string): Promise<void> {
    return this.request<void>(`/sessions/${id}`, { method: "DELETE" });
  }

  async fetchTrace(id: string, format: "json" | "csv"): Promise<string> {
    const response = await this.fetchImpl(this.traceUrl(id, format));
    if (!response.ok) {
      let body: ErrorBody;
      try {
        body = (await response.json()) as ErrorBody;
      } catch {
        body = { code: "error", message: response.statusText, fields: [] };
      }
      throw new ApiError(response.status, body);
    }
    return response.text();
  }

  traceUrl(id: string, format: "json" | "csv"): string {
    return this.url(`/sessions/${id}/trace?format=${format}`);
  }

  streamUrl(id: string): string {
    return this.url(`/sessions/${id}/stream`);
  }
}
