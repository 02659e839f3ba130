// Rendering: engine documents in, DOM out. The single piece of geometry
// here is the documented origin conversion, engine bottom-left to screen
// top-left: yTop = window.h - y - h.

import type { ResolvedLayoutDoc } from './types.js';

export interface ScreenRect {
  id: string;
  x: number;
  yTop: number;
  w: number;
  h: number;
  fontPx?: number;
  style?: Record<string, string>;
}

export function toScreenRects(layout: ResolvedLayoutDoc): ScreenRect[] {
  return layout.blocks
    .filter((b) => b.visible)
    .map((b) => {
      const [x, y, w, h] = b.rect;
      const rect: ScreenRect = { id: b.id, x, yTop: layout.window.h - y - h, w, h };
      if (b.font_px !== undefined) rect.fontPx = b.font_px;
      if (b.style !== undefined) rect.style = b.style;
      return rect;
    });
}

/** Draw every visible block as an absolutely positioned element. The
 * element geometry is exactly the engine's, after the origin conversion;
 * nothing is recomputed. */
export function renderLayout(container: HTMLElement, layout: ResolvedLayoutDoc): void {
  container.textContent = '';
  container.style.width = `${layout.window.w}px`;
  container.style.height = `${layout.window.h}px`;
  for (const rect of toScreenRects(layout)) {
    const el = container.ownerDocument.createElement('div');
    el.className = 'block';
    el.dataset.blockId = rect.id;
    el.style.position = 'absolute';
    el.style.left = `${rect.x}px`;
    el.style.top = `${rect.yTop}px`;
    el.style.width = `${rect.w}px`;
    el.style.height = `${rect.h}px`;
    if (rect.fontPx !== undefined) el.style.fontSize = `${rect.fontPx}px`;
    el.textContent = rect.id;
    container.appendChild(el);
  }
}

export function renderRuler(
  track: HTMLElement,
  markers: number[],
  current: number,
  maxRatio = 3,
): void {
  track.textContent = '';
  const place = (ratio: number) => `${Math.min(100, (ratio / maxRatio) * 100)}%`;
  for (const marker of markers) {
    const el = track.ownerDocument.createElement('div');
    el.className = 'ruler-marker';
    el.dataset.ratio = String(marker);
    el.style.left = place(marker);
    el.title = `breakpoint ${marker}`;
    track.appendChild(el);
  }
  const cursor = track.ownerDocument.createElement('div');
  cursor.className = 'ruler-cursor';
  cursor.style.left = place(current);
  cursor.title = `R = ${current.toFixed(3)}`;
  track.appendChild(cursor);
}

/** Update the class badge; returns true when this render flipped it (the
 * visual cue for a reflow). */
export function renderBadge(badge: HTMLElement, className: string): boolean {
  const flipped = badge.textContent !== '' && badge.textContent !== className;
  badge.textContent = className;
  badge.classList.remove('flash');
  if (flipped) {
    // retrigger the CSS animation
    void badge.offsetWidth;
    badge.classList.add('flash');
  }
  return flipped;
}
