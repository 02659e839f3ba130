// @vitest-environment jsdom
//
// Playground fidelity against the real engine: drags cross the 0.75
// breakpoint and the class badge must flip exactly once per crossing,
// while every rendered rectangle equals the engine's layout document
// after the documented origin conversion. The engine runs as the actual
// CLI process; no layout math exists on this side.

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { beforeAll, describe, expect, it } from 'vitest';

import { CliEngineClient } from './engine-node.js';
import { dragResize, loadSpec, type PlaygroundState } from './playground.js';
import type { ResolvedLayoutDoc, SpecDoc } from './types.js';
import { renderBadge, renderLayout } from './view.js';

const HERE = dirname(fileURLToPath(import.meta.url));
const FIXTURE = join(HERE, '..', '..', 'fixtures', 'teachlcge.regui.json');

const engine = new CliEngineClient();
let fixture: SpecDoc;

beforeAll(() => {
  fixture = JSON.parse(readFileSync(FIXTURE, 'utf-8')) as SpecDoc;
});

function assertRenderMatchesEngine(container: HTMLElement, layout: ResolvedLayoutDoc): void {
  const drawn = [...container.querySelectorAll<HTMLElement>('.block')];
  const visible = layout.blocks.filter((b) => b.visible);
  expect(drawn.map((el) => el.dataset.blockId)).toEqual(visible.map((b) => b.id));
  for (const [i, el] of drawn.entries()) {
    const [x, y, w, h] = visible[i]!.rect;
    expect(Number.parseFloat(el.style.left)).toBe(x);
    expect(Number.parseFloat(el.style.top)).toBe(layout.window.h - y - h);
    expect(Number.parseFloat(el.style.width)).toBe(w);
    expect(Number.parseFloat(el.style.height)).toBe(h);
  }
}

describe('playground fidelity (real engine over its CLI interface)', () => {
  it('loads the fixture at 1024x768 with the classic badge', async () => {
    const badge = document.createElement('span');
    const state = await loadSpec(engine, fixture);
    renderBadge(badge, state.layout.class);
    expect(badge.textContent).toBe('classic');
    expect(state.layout.window).toMatchObject({ w: 1024, h: 768 });
  });

  it('flips the badge exactly once per crossing of R = 0.75', async () => {
    const badge = document.createElement('span');
    const container = document.createElement('div');
    document.body.appendChild(container);

    let state: PlaygroundState = await loadSpec(engine, fixture);
    renderBadge(badge, state.layout.class);
    renderLayout(container, state.layout);
    assertRenderMatchesEngine(container, state.layout);

    // Height fixed at 800; widths walk down through the breakpoint
    // (crossing #1: 610 -> 590 passes R = 0.75), then back up (crossing #2).
    const widths = [1000, 900, 700, 650, 610, 590, 570, 610, 800];
    let flips = 0;
    const classes: string[] = [];
    for (const w of widths) {
      const result = await dragResize(engine, state, w, 800);
      state = result.state;
      if (renderBadge(badge, state.layout.class)) flips += 1;
      renderLayout(container, state.layout);
      assertRenderMatchesEngine(container, state.layout);
      classes.push(state.layout.class);
    }

    // Engine-reported classes confirm exactly two crossings happened...
    const crossings = classes.filter((cls, i) => i > 0 && cls !== classes[i - 1]).length +
      (classes[0] !== 'classic' ? 1 : 0);
    expect(crossings).toBe(2);
    // ...and the badge flipped once per crossing, never in between.
    expect(flips).toBe(2);
    expect(state.layout.class).toBe('classic');
  });

  it('keeps the classic badge at exactly R = 1.5', async () => {
    let state = await loadSpec(engine, fixture);
    const badge = document.createElement('span');
    renderBadge(badge, state.layout.class);
    const result = await dragResize(engine, state, 1200, 800); // R = 1.5 exactly
    state = result.state;
    expect(renderBadge(badge, state.layout.class)).toBe(false);
    expect(state.layout.class).toBe('classic');
    expect(result.action.kind).toBe('rescale');
  });

  it('treats a micro-drag as a rescale with the badge unchanged', async () => {
    let state = await loadSpec(engine, fixture);
    const badge = document.createElement('span');
    renderBadge(badge, state.layout.class);
    const result = await dragResize(engine, state, 1025, 768);
    expect(result.action.kind).toBe('rescale');
    expect(renderBadge(badge, result.state.layout.class)).toBe(false);
  });

  it('renders the hidden-in-classic block only in the classes that place it', async () => {
    let state = await loadSpec(engine, fixture);
    const container = document.createElement('div');
    renderLayout(container, state.layout);
    expect(container.querySelector('[data-block-id="white"]')).toBeNull();

    state = (await dragResize(engine, state, 500, 800)).state; // portrait
    renderLayout(container, state.layout);
    expect(container.querySelector('[data-block-id="white"]')).not.toBeNull();
    assertRenderMatchesEngine(container, state.layout);
  });
});
