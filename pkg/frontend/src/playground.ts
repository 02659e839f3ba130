// The playground's state machine. Deliberately free of layout math: every
// rectangle and every class name comes from an engine-produced
// ResolvedLayoutDoc, and update kinds are derived by diffing two engine
// outputs (class changed = reflow).

import type { EngineClient } from './engine.js';
import type { Anchor, ResolvedLayoutDoc, SpecDoc } from './types.js';

export const DEFAULT_WINDOW = { w: 1024, h: 768 };
export const LOG_LIMIT = 50;

export type ActionKind = 'reflow' | 'rescale' | 'anchor_change' | 'none';

export interface ActionSummary {
  kind: ActionKind;
  class: string;
  w: number;
  h: number;
  r: number;
}

export interface PlaygroundState {
  spec: SpecDoc;
  window: { w: number; h: number };
  anchor: Anchor;
  layout: ResolvedLayoutDoc;
  log: ActionSummary[];
}

/** Structural check of a spec document, reporting field paths for inline
 * display. This mirrors the engine parser's schema only far enough to give
 * friendly errors before a document ever reaches the engine. */
export function checkSpecDoc(doc: unknown): string[] {
  const errors: string[] = [];
  if (typeof doc !== 'object' || doc === null || Array.isArray(doc)) {
    return ['(root): expected an object'];
  }
  const root = doc as Record<string, unknown>;
  for (const field of ['name', 'classes', 'blocks']) {
    if (!(field in root)) errors.push(`(root): missing required field ${field}`);
  }
  if ('classes' in root) {
    if (!Array.isArray(root.classes)) {
      errors.push('classes: expected an array');
    } else {
      root.classes.forEach((cls, i) => {
        if (typeof cls !== 'object' || cls === null) {
          errors.push(`classes[${i}]: expected an object`);
          return;
        }
        const c = cls as Record<string, unknown>;
        if (typeof c.name !== 'string') errors.push(`classes[${i}].name: expected a string`);
        if (typeof c.lo !== 'number') errors.push(`classes[${i}].lo: expected a number`);
        if (typeof c.hi !== 'number' && c.hi !== 'inf') {
          errors.push(`classes[${i}].hi: expected a number or "inf"`);
        }
      });
    }
  }
  if ('blocks' in root) {
    if (!Array.isArray(root.blocks)) {
      errors.push('blocks: expected an array');
    } else {
      root.blocks.forEach((block, i) => {
        if (typeof block !== 'object' || block === null) {
          errors.push(`blocks[${i}]: expected an object`);
          return;
        }
        const b = block as Record<string, unknown>;
        if (typeof b.id !== 'string') errors.push(`blocks[${i}].id: expected a string`);
        if (typeof b.placements !== 'object' || b.placements === null) {
          errors.push(`blocks[${i}].placements: expected an object`);
          return;
        }
        for (const [cls, placement] of Object.entries(b.placements as Record<string, unknown>)) {
          const p = placement as Record<string, unknown> | null;
          const rect = p && typeof p === 'object' ? p.rect : undefined;
          if (!Array.isArray(rect) || rect.length !== 4 || rect.some((v) => typeof v !== 'number')) {
            errors.push(`blocks[${i}].placements.${cls}.rect: expected [x, y, w, h]`);
          }
        }
      });
    }
  }
  return errors;
}

/** Breakpoint positions for the ruler: every finite interior interval
 * endpoint, sorted and deduplicated. A one-class spec has none. */
export function breakpointMarkers(spec: SpecDoc): number[] {
  const values = new Set<number>();
  for (const cls of spec.classes) {
    if (cls.lo > 0) values.add(cls.lo);
    if (cls.hi !== 'inf') values.add(cls.hi);
  }
  return [...values].sort((a, b) => a - b);
}

/** What kind of update one engine output represents relative to the
 * previous one. Purely a diff of engine results. */
export function deriveAction(
  prev: ResolvedLayoutDoc | null,
  next: ResolvedLayoutDoc,
  anchorChanged = false,
): ActionKind {
  if (prev === null || next.class !== prev.class) return 'reflow';
  if (anchorChanged) return 'anchor_change';
  if (next.window.w !== prev.window.w || next.window.h !== prev.window.h) return 'rescale';
  return 'none';
}

function summarize(kind: ActionKind, layout: ResolvedLayoutDoc): ActionSummary {
  return {
    kind,
    class: layout.class,
    w: layout.window.w,
    h: layout.window.h,
    r: layout.window.r,
  };
}

function pushLog(log: ActionSummary[], entry: ActionSummary): ActionSummary[] {
  const next = [...log, entry];
  return next.length > LOG_LIMIT ? next.slice(next.length - LOG_LIMIT) : next;
}

export async function loadSpec(
  engine: EngineClient,
  doc: SpecDoc,
): Promise<PlaygroundState> {
  const layout = await engine.resolve(doc, DEFAULT_WINDOW.w, DEFAULT_WINDOW.h, 'none');
  return {
    spec: doc,
    window: { ...DEFAULT_WINDOW },
    anchor: 'none',
    layout,
    log: [summarize('reflow', layout)],
  };
}

export interface DragResult {
  state: PlaygroundState;
  action: ActionSummary;
  /** true when a degenerate drag (w or h <= 0) was clamped to 1 */
  clamped: boolean;
}

export async function dragResize(
  engine: EngineClient,
  state: PlaygroundState,
  width: number,
  height: number,
): Promise<DragResult> {
  const clamped = width <= 0 || height <= 0;
  const w = Math.max(1, width);
  const h = Math.max(1, height);
  const layout = await engine.resolve(state.spec, w, h, state.anchor);
  const kind = deriveAction(state.layout, layout);
  const action = summarize(kind, layout);
  return {
    state: {
      ...state,
      window: { w, h },
      layout,
      log: pushLog(state.log, action),
    },
    action,
    clamped,
  };
}

export async function setAnchor(
  engine: EngineClient,
  state: PlaygroundState,
  anchor: Anchor,
): Promise<{ state: PlaygroundState; action: ActionSummary }> {
  const layout = await engine.resolve(state.spec, state.window.w, state.window.h, anchor);
  const kind = deriveAction(state.layout, layout, anchor !== state.anchor);
  const action = summarize(kind, layout);
  return {
    state: { ...state, anchor, layout, log: pushLog(state.log, action) },
    action,
  };
}
