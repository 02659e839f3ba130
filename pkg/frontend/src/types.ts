// Document shapes of the engine's JSON interfaces. The playground consumes
// these verbatim; it never computes layout geometry itself.

export type Anchor = 'none' | 'left' | 'right';

export interface ClassRuleDoc {
  name: string;
  lo: number;
  lo_inclusive: boolean;
  hi: number | 'inf';
  hi_inclusive: boolean;
}

export interface PlacementDoc {
  rect: [number, number, number, number];
  visible?: boolean;
  font?: number;
  style?: Record<string, string>;
  mirror_on_anchor?: Anchor;
}

export interface BlockDoc {
  id: string;
  label?: string;
  placements: Record<string, PlacementDoc>;
}

export interface SpecDoc {
  name: string;
  notes?: string;
  classes: ClassRuleDoc[];
  blocks: BlockDoc[];
}

export interface ResolvedBlockDoc {
  id: string;
  rect: [number, number, number, number]; // engine pixels, bottom-left origin
  visible: boolean;
  font_px?: number;
  style?: Record<string, string>;
}

export interface ResolvedLayoutDoc {
  window: { w: number; h: number; r: number };
  class: string;
  blocks: ResolvedBlockDoc[];
}
