import type { Anchor, ResolvedLayoutDoc, SpecDoc } from './types.js';

/** Anything that can resolve a spec against a window through the engine's
 * documented JSON interface: the HTTP bridge in the browser, the CLI in
 * tests. */
export interface EngineClient {
  resolve(
    spec: SpecDoc,
    width: number,
    height: number,
    anchor: Anchor,
  ): Promise<ResolvedLayoutDoc>;
}

export class EngineError extends Error {
  constructor(
    message: string,
    readonly path?: string,
  ) {
    super(message);
    this.name = 'EngineError';
  }
}

/** Talks to the no-persistence bridge (frontend/bridge.py), which wraps the
 * engine's resolve interface behind POST /api/resolve. */
export class HttpEngineClient implements EngineClient {
  constructor(private readonly baseUrl: string = '') {}

  async resolve(
    spec: SpecDoc,
    width: number,
    height: number,
    anchor: Anchor,
  ): Promise<ResolvedLayoutDoc> {
    const response = await fetch(`${this.baseUrl}/api/resolve`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ spec, width, height, anchor }),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new EngineError(payload.error ?? `engine returned ${response.status}`, payload.path);
    }
    return payload as ResolvedLayoutDoc;
  }
}
