// Thin client for the query service; no state beyond the base URL.

import type { QueryResponse, SchemaInventory } from './types.js';

export class ApiError extends Error {
    constructor(message: string, readonly status?: number) {
        super(message);
        this.name = 'ApiError';
    }
}

export class ApiClient {
    constructor(readonly baseUrl: string = '') {}

    async submitQuestion(question: string): Promise<QueryResponse> {
        let res: Response;
        try {
            res = await fetch(`${this.baseUrl}/api/query`, {
                method: 'POST',
                headers: { 'content-type': 'application/json' },
                body: JSON.stringify({ question }),
            });
        } catch (err) {
            throw new ApiError(`cannot reach the query service: ${String(err)}`);
        }
        if (!res.ok) {
            throw new ApiError(`query service returned HTTP ${res.status}`, res.status);
        }
        return (await res.json()) as QueryResponse;
    }

    async fetchSchema(): Promise<SchemaInventory> {
        const res = await fetch(`${this.baseUrl}/api/schema`);
        if (!res.ok) {
            throw new ApiError(`schema endpoint returned HTTP ${res.status}`, res.status);
        }
        return (await res.json()) as SchemaInventory;
    }
}
