// Wire types for the query service HTTP API.

export type QueryStatus = 'answered' | 'cannot_answer' | 'error';

export interface TraceEntry {
    phrase: string;
    kind: string;
    mapped_to: string;
    source: string;
    table?: string;
    attribute?: string;
    value?: string;
    consumed_by?: string;
}

export interface QueryResponse {
    question: string;
    status: QueryStatus;
    sql?: string;
    columns?: string[];
    rows?: unknown[][];
    trace?: TraceEntry[];
    message?: string;
}

export interface SchemaColumn {
    name: string;
    type: string;
}

export interface SchemaTable {
    name: string;
    display_attribute: string;
    columns: SchemaColumn[];
}

export interface SchemaSynonym {
    word: string;
    target: string;
}

export interface SchemaInventory {
    tables: SchemaTable[];
    synonyms: SchemaSynonym[];
}

export interface ChatEntry {
    question: string;
    response: QueryResponse;
    timestamp: Date;
}
