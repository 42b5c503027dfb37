import { describe, expect, it } from 'vitest';

import {
    escapeHtml,
    renderResponse,
    renderResultTable,
    renderRetryBubble,
    renderSchemaSidebar,
} from '../src/render.js';
import type { ChatEntry, QueryResponse } from '../src/types.js';

function entry(response: QueryResponse): ChatEntry {
    return { question: response.question, response, timestamp: new Date(0) };
}

const answered: QueryResponse = {
    question: 'which restaurants have an excellent rating?',
    status: 'answered',
    sql: "SELECT DISTINCT aggregate_rating, restaurant_name FROM restaurants WHERE rating_text='excellent'",
    columns: ['aggregate_rating', 'restaurant_name'],
    rows: [
        [4.6, 'Lunch Basics'],
        [4.7, 'Northern Buffet'],
        [4.8, 'Atlantic Dishes'],
    ],
    trace: [
        { phrase: 'restaurant', kind: 'noun', mapped_to: 'table', source: 'graph_direct', table: 'restaurants' },
        { phrase: 'excellent', kind: 'adjective', mapped_to: 'predicate', source: 'value_index', table: 'restaurants', attribute: 'rating_text', value: 'excellent' },
    ],
};

describe('escapeHtml', () => {
    it('escapes markup characters', () => {
        expect(escapeHtml(`<b>&"'`)).toBe('&lt;b&gt;&amp;&quot;&#39;');
    });
});

describe('renderResponse (answered)', () => {
    const html = renderResponse(entry(answered));

    it('contains the SQL verbatim apart from HTML escaping', () => {
        expect(html).toContain(escapeHtml(answered.sql!));
    });

    it('renders a table with all columns and rows', () => {
        expect(html).toContain('<th>aggregate_rating</th>');
        expect(html).toContain('<th>restaurant_name</th>');
        for (const row of answered.rows!) {
            expect(html).toContain(`<td>${String(row[1])}</td>`);
        }
    });

    it('shows the row count', () => {
        expect(html).toContain('3 row(s)');
    });

    it('includes a collapsed-able trace panel', () => {
        expect(html).toContain('<details class="trace">');
        expect(html).toContain('value_index');
    });
});

describe('renderResponse (cannot_answer)', () => {
    const html = renderResponse(entry({
        question: 'sing me a song',
        status: 'cannot_answer',
        message: 'no candidate matched a table, attribute, or value',
    }));

    it('uses the cannot-answer styling and shows the message', () => {
        expect(html).toContain('cannot-answer');
        expect(html).toContain('no candidate matched');
    });

    it('renders no result table', () => {
        expect(html).not.toContain('<table');
    });
});

describe('renderResponse (error)', () => {
    it('uses distinct error styling', () => {
        const html = renderResponse(entry({
            question: 'x', status: 'error', message: 'internal error',
        }));
        expect(html).toContain('class="bubble error"');
    });
});

describe('renderResultTable', () => {
    it('keeps every row of a large result', () => {
        const rows = Array.from({ length: 100 }, (_, i) => [i, `name ${i}`]);
        const html = renderResultTable(['id', 'name'], rows);
        for (let i = 0; i < 100; i++) {
            expect(html).toContain(`<td>name ${i}</td>`);
        }
        expect(html).toContain('result-scroll');
    });

    it('escapes cell content', () => {
        const html = renderResultTable(['c'], [['<script>']]);
        expect(html).not.toContain('<script>');
    });
});

describe('renderRetryBubble', () => {
    it('offers a retry button', () => {
        const html = renderRetryBubble('cannot reach the query service');
        expect(html).toContain('class="retry"');
        expect(html).toContain('cannot reach the query service');
    });
});

describe('renderSchemaSidebar', () => {
    it('lists tables, columns, and synonyms', () => {
        const html = renderSchemaSidebar({
            tables: [
                {
                    name: 'restaurants',
                    display_attribute: 'restaurant_name',
                    columns: [{ name: 'restaurant_name', type: 'text' }],
                },
                {
                    name: 'cuisines',
                    display_attribute: 'cuisine',
                    columns: [{ name: 'cuisine', type: 'text' }],
                },
            ],
            synonyms: [{ word: 'rating', target: 'restaurants.aggregate_rating' }],
        });
        expect(html).toContain('restaurants');
        expect(html).toContain('cuisines');
        expect(html).toContain('rating');
        expect(html).toContain('restaurants.aggregate_rating');
    });
});
