// Node-only engine client: spawns the real CLI per request. Used by the
// automated tests so they exercise the same external interface the
// playground's bridge wraps. Excluded from the browser build.

import { spawnSync } from 'node:child_process';
import { mkdtempSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { EngineError, type EngineClient } from './engine.js';
import type { Anchor, ResolvedLayoutDoc, SpecDoc } from './types.js';

export class CliEngineClient implements EngineClient {
  private readonly dir = mkdtempSync(join(tmpdir(), 'regui-playground-'));
  private lastSpecText = '';
  private specPath = '';

  constructor(private readonly python: string = 'python3') {}

  async resolve(
    spec: SpecDoc,
    width: number,
    height: number,
    anchor: Anchor,
  ): Promise<ResolvedLayoutDoc> {
    const specText = JSON.stringify(spec);
    if (specText !== this.lastSpecText) {
      this.specPath = join(this.dir, 'spec.regui.json');
      writeFileSync(this.specPath, specText, 'utf-8');
      this.lastSpecText = specText;
    }
    const proc = spawnSync(
      this.python,
      [
        '-m', 'regui.cli', 'resolve',
        '--spec', this.specPath,
        '--width', String(width),
        '--height', String(height),
        '--anchor', anchor,
      ],
      { encoding: 'utf-8' },
    );
    if (proc.error) {
      throw new EngineError(`failed to start engine CLI: ${proc.error.message}`);
    }
    if (proc.status !== 0) {
      throw new EngineError(proc.stderr.trim() || `engine CLI exited ${proc.status}`);
    }
    return JSON.parse(proc.stdout) as ResolvedLayoutDoc;
  }
}
