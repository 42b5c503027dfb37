// Pure HTML renderers for chat entries and the schema sidebar.
// Everything here is a string-in/string-out function so it can be unit
// tested without a DOM.

import type { ChatEntry, SchemaInventory, TraceEntry } from './types.js';

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;')
        .replace(/'/g, '&#39;');
}

export function renderResultTable(columns: string[], rows: unknown[][]): string {
    const head = columns.map((c) => `<th>${escapeHtml(c)}</th>`).join('');
    const body = rows
        .map((row) =>
            `<tr>${row.map((v) => `<td>${escapeHtml(String(v))}</td>`).join('')}</tr>`)
        .join('');
    return `<div class="result-scroll"><table class="result-table">` +
        `<thead><tr>${head}</tr></thead><tbody>${body}</tbody></table></div>`;
}

function renderTrace(trace: TraceEntry[]): string {
    const items = trace.map((t) => {
        let detail: string;
        if (t.consumed_by !== undefined) {
            detail = `absorbed by "${escapeHtml(t.consumed_by)}"`;
        } else if (t.mapped_to === 'unmapped') {
            detail = 'no match';
        } else {
            const target = t.attribute ? `${t.table}.${t.attribute}` : t.table ?? '';
            const value = t.value !== undefined ? ` = '${escapeHtml(t.value)}'` : '';
            detail = `${t.mapped_to} ${escapeHtml(target)}${value} (${t.source})`;
        }
        return `<li><code>${escapeHtml(t.phrase)}</code> &rarr; ${detail}</li>`;
    });
    return `<details class="trace"><summary>mapping trace</summary>` +
        `<ul>${items.join('')}</ul></details>`;
}

export function renderResponse(entry: ChatEntry): string {
    const r = entry.response;
    if (r.status === 'answered' && r.sql && r.columns && r.rows) {
        // the SQL text is shown exactly as received, only HTML-escaped
        const parts = [
            `<details class="sql" open><summary>generated SQL</summary>` +
            `<pre class="sql-text">${escapeHtml(r.sql)}</pre></details>`,
            renderResultTable(r.columns, r.rows),
            `<div class="row-count">${r.rows.length} row(s)</div>`,
        ];
        if (r.trace) parts.push(renderTrace(r.trace));
        return `<div class="bubble answered">${parts.join('')}</div>`;
    }
    const cls = r.status === 'cannot_answer' ? 'cannot-answer' : 'error';
    const message = escapeHtml(r.message ?? 'something went wrong');
    const trace = r.trace ? renderTrace(r.trace) : '';
    return `<div class="bubble ${cls}"><p>${message}</p>${trace}</div>`;
}

export function renderQuestion(question: string): string {
    return `<div class="bubble question">${escapeHtml(question)}</div>`;
}

export function renderRetryBubble(message: string): string {
    return `<div class="bubble error network">` +
        `<p>${escapeHtml(message)}</p>` +
        `<button class="retry">retry</button></div>`;
}

export function renderSchemaSidebar(schema: SchemaInventory): string {
    const tables = schema.tables.map((t) => {
        const cols = t.columns
            .map((c) => `<li>${escapeHtml(c.name)} <span class="type">${escapeHtml(c.type)}</span></li>`)
            .join('');
        return `<div class="schema-table"><h3>${escapeHtml(t.name)}</h3><ul>${cols}</ul></div>`;
    });
    const synonyms = schema.synonyms
        .map((s) => `<li>${escapeHtml(s.word)} &rarr; ${escapeHtml(s.target)}</li>`)
        .join('');
    return tables.join('') +
        `<div class="schema-synonyms"><h3>synonyms</h3><ul>${synonyms}</ul></div>`;
}

export function renderSchemaUnavailable(): string {
    return `<p class="schema-offline">schema unavailable</p>`;
}
