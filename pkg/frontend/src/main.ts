// Chat console wiring: one in-flight request at a time, append-only history.

import { ApiClient } from './api.js';
import {
    renderQuestion,
    renderResponse,
    renderRetryBubble,
    renderSchemaSidebar,
    renderSchemaUnavailable,
} from './render.js';
import type { ChatEntry } from './types.js';

const params = new URLSearchParams(window.location.search);
const client = new ApiClient(params.get('api') ?? '');

const history: ChatEntry[] = [];
const chatLog = document.getElementById('chat-log') as HTMLDivElement;
const form = document.getElementById('chat-form') as HTMLFormElement;
const input = document.getElementById('question-input') as HTMLInputElement;
const submit = document.getElementById('submit-button') as HTMLButtonElement;
const sidebar = document.getElementById('schema-sidebar') as HTMLDivElement;

function appendHtml(html: string): HTMLElement {
    const wrapper = document.createElement('div');
    wrapper.innerHTML = html;
    const node = wrapper.firstElementChild as HTMLElement;
    chatLog.appendChild(node);
    chatLog.scrollTop = chatLog.scrollHeight;
    return node;
}

function setBusy(busy: boolean): void {
    input.disabled = busy;
    submit.disabled = busy || input.value.trim() === '';
}

async function ask(question: string): Promise<void> {
    appendHtml(renderQuestion(question));
    setBusy(true);
    try {
        const response = await client.submitQuestion(question);
        const entry: ChatEntry = { question, response, timestamp: new Date() };
        history.push(entry);
        appendHtml(renderResponse(entry));
    } catch (err) {
        const bubble = appendHtml(renderRetryBubble(String(err)));
        bubble.querySelector('.retry')?.addEventListener('click', () => {
            bubble.remove();
            void ask(question);
        });
    } finally {
        setBusy(false);
        input.focus();
    }
}

form.addEventListener('submit', (event) => {
    event.preventDefault();
    const question = input.value.trim();
    if (!question || input.disabled) return;
    input.value = '';
    void ask(question);
});

input.addEventListener('input', () => {
    submit.disabled = input.disabled || input.value.trim() === '';
});

async function loadSchema(): Promise<void> {
    try {
        sidebar.innerHTML = renderSchemaSidebar(await client.fetchSchema());
    } catch {
        sidebar.innerHTML = renderSchemaUnavailable();
    }
}

setBusy(false);
void loadSchema();
input.focus();
