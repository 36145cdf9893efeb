// Thin typed client for the analysis service.  The fetch function is
// injectable so tests can run against a scripted fake.

import type { AnalyzeResponse, BoardGraph, SolveResponse, WhatifResponse } from "./model.js";

export interface HttpResponse {
    ok: boolean;
    status: number;
    json(): Promise<unknown>;
}

export type FetchLike = (
    url: string,
    init: { method: string; headers: Record<string, string>; body: string },
) => Promise<HttpResponse>;

export class ApiError extends Error {
    constructor(
        readonly code: string,
        message: string,
        readonly status: number,
    ) {
        super(message);
    }
}

interface ErrorBody {
    error?: { code?: string; message?: string };
}

export class ApiClient {
    constructor(
        private readonly baseUrl: string = "",
        private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
    ) {}

    analyze(graph: BoardGraph): Promise<AnalyzeResponse> {
        return this.post<AnalyzeResponse>("/api/analyze", { graph });
    }

    whatif(graph: BoardGraph, u: number, v: number): Promise<WhatifResponse> {
        return this.post<WhatifResponse>("/api/whatif", { graph, u, v });
    }

    solve(graph: BoardGraph, config: string): Promise<SolveResponse> {
        return this.post<SolveResponse>("/api/solve", { graph, config });
    }

    private async post<T>(path: string, body: unknown): Promise<T> {
        let response: HttpResponse;
        try {
            response = await this.fetchFn(this.baseUrl + path, {
                method: "POST",
                headers: { "content-type": "application/json" },
                body: JSON.stringify(body),
            });
        } catch (err) {
            throw new ApiError("network", `service unreachable: ${String(err)}`, 0);
        }
        if (!response.ok) {
            const doc = (await response.json().catch(() => ({}))) as ErrorBody;
            throw new ApiError(
                doc.error?.code ?? "http_error",
                doc.error?.message ?? `request failed with status ${response.status}`,
                response.status,
            );
        }
        return (await response.json()) as T;
    }
}
