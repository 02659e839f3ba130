// Browser bootstrap: wires the pure state machine and the renderer to the
// page. Engine calls go through the HTTP bridge with latest-wins
// coalescing (at most one request in flight; only the newest queued drag
// is sent when it returns).

import { HttpEngineClient } from './engine.js';
import {
  breakpointMarkers,
  checkSpecDoc,
  dragResize,
  loadSpec,
  setAnchor,
  type PlaygroundState,
} from './playground.js';
import type { Anchor, SpecDoc } from './types.js';
import { renderBadge, renderLayout, renderRuler } from './view.js';

const engine = new HttpEngineClient();

const stage = document.getElementById('stage') as HTMLElement;
const canvas = document.getElementById('canvas') as HTMLElement;
const badge = document.getElementById('badge') as HTMLElement;
const ruler = document.getElementById('ruler-track') as HTMLElement;
const log = document.getElementById('log') as HTMLElement;
const errors = document.getElementById('errors') as HTMLElement;
const hint = document.getElementById('hint') as HTMLElement;
const sizeLabel = document.getElementById('size-label') as HTMLElement;
const filePicker = document.getElementById('spec-file') as HTMLInputElement;
const anchorSelect = document.getElementById('anchor') as HTMLSelectElement;
const grip = document.getElementById('grip') as HTMLElement;

let state: PlaygroundState | null = null;
let inFlight = false;
let queued: { w: number; h: number } | null = null;

function showErrors(messages: string[]): void {
  errors.textContent = '';
  for (const message of messages) {
    const li = document.createElement('li');
    li.textContent = message;
    errors.appendChild(li);
  }
}

function render(): void {
  if (!state) return;
  renderLayout(canvas, state.layout);
  stage.style.width = `${state.window.w}px`;
  stage.style.height = `${state.window.h}px`;
  renderBadge(badge, state.layout.class);
  renderRuler(ruler, breakpointMarkers(state.spec), state.layout.window.r);
  sizeLabel.textContent =
    `${state.window.w.toFixed(0)} x ${state.window.h.toFixed(0)}  ` +
    `(R = ${state.layout.window.r.toFixed(3)})`;
  log.textContent = '';
  for (const entry of [...state.log].reverse().slice(0, 12)) {
    const li = document.createElement('li');
    li.textContent =
      `${entry.kind}  ${entry.class}  ${entry.w.toFixed(0)}x${entry.h.toFixed(0)}` +
      `  R=${entry.r.toFixed(3)}`;
    li.className = `log-${entry.kind}`;
    log.appendChild(li);
  }
}

async function load(doc: unknown): Promise<void> {
  const problems = checkSpecDoc(doc);
  if (problems.length > 0) {
    showErrors(problems);
    return;
  }
  try {
    state = await loadSpec(engine, doc as SpecDoc);
    showErrors([]);
    render();
  } catch (exc) {
    showErrors([String(exc)]);
  }
}

async function applyDrag(w: number, h: number): Promise<void> {
  if (!state) return;
  if (inFlight) {
    queued = { w, h }; // latest wins; everything in between is dropped
    return;
  }
  inFlight = true;
  try {
    const result = await dragResize(engine, state, w, h);
    state = result.state;
    hint.textContent = result.clamped ? 'window clamped to 1px minimum' : '';
    render();
  } catch (exc) {
    showErrors([String(exc)]);
  } finally {
    inFlight = false;
    if (queued) {
      const next = queued;
      queued = null;
      void applyDrag(next.w, next.h);
    }
  }
}

grip.addEventListener('pointerdown', (down: PointerEvent) => {
  if (!state) return;
  down.preventDefault();
  grip.setPointerCapture(down.pointerId);
  const startW = state.window.w;
  const startH = state.window.h;
  const move = (ev: PointerEvent) => {
    void applyDrag(startW + (ev.clientX - down.clientX), startH + (ev.clientY - down.clientY));
  };
  const up = () => {
    grip.removeEventListener('pointermove', move);
    grip.removeEventListener('pointerup', up);
  };
  grip.addEventListener('pointermove', move);
  grip.addEventListener('pointerup', up);
});

anchorSelect.addEventListener('change', async () => {
  if (!state) return;
  const result = await setAnchor(engine, state, anchorSelect.value as Anchor);
  state = result.state;
  render();
});

filePicker.addEventListener('change', async () => {
  const file = filePicker.files?.[0];
  if (!file) return;
  try {
    await load(JSON.parse(await file.text()));
  } catch (exc) {
    showErrors([`unparseable document: ${exc}`]);
  }
});

async function boot(): Promise<void> {
  const param = new URLSearchParams(window.location.search).get('spec');
  const url = param ?? '/fixtures/teachlcge.regui.json';
  try {
    const response = await fetch(url);
    if (!response.ok) throw new Error(`${url}: HTTP ${response.status}`);
    await load(await response.json());
  } catch (exc) {
    showErrors([`could not load ${url}: ${exc}`, 'pick a spec file below instead']);
  }
}

void boot();
