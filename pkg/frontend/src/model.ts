// Pure view-model layer: everything the renderer shows is computed here,
// so the fixture contract tests run without a DOM.

import type { GameJson, ResultJson, SegmentJson, SweepJson } from './api.js';
import {
  Rat,
  cmp,
  cmpExact,
  evalPoly,
  exactNum,
  parseRat,
  ratNum,
  ratStr,
} from './rational.js';

export interface AnalysisToggles {
  ne: boolean;
  maximin: boolean;
  dominated: boolean;
}

export interface Highlights {
  blue: Set<string>; // "i,j" cells, 1-based
  greenRows: Set<number>;
  greenCols: Set<number>;
  redRows: Set<number>;
  redCols: Set<number>;
}

export const cellKey = (i: number, j: number) => `${i},${j}`;

export function highlightsFromResult(result: ResultJson, toggles: AnalysisToggles): Highlights {
  const h: Highlights = {
    blue: new Set(),
    greenRows: new Set(),
    greenCols: new Set(),
    redRows: new Set(),
    redCols: new Set(),
  };
  if (toggles.ne && result.ne) {
    for (const [i, j] of result.ne) h.blue.add(cellKey(i, j));
  }
  if (toggles.maximin) {
    for (const i of result.maximinRows ?? []) h.greenRows.add(i);
    for (const j of result.maximinCols ?? []) h.greenCols.add(j);
  }
  if (toggles.dominated) {
    for (const i of result.dominatedRows ?? []) h.redRows.add(i);
    for (const j of result.dominatedCols ?? []) h.redCols.add(j);
  }
  return h;
}

/** The segment whose region contains x; exact comparisons, no rounding. */
export function segmentAt(sweep: SweepJson, x: Rat): SegmentJson | null {
  for (const seg of sweep.segments) {
    if (seg.kind === 'point') {
      if (cmpExact(x, seg.at!) === 0) return seg;
      continue;
    }
    const lo = cmpExact(x, seg.lo!);
    const hi = cmpExact(x, seg.hi!);
    if ((seg.loOpen ? lo > 0 : lo >= 0) && (seg.hiOpen ? hi < 0 : hi <= 0)) return seg;
  }
  return null;
}

/** Tick pixel offsets for the breakpoints on a track of the given width. */
export function tickPositions(sweep: SweepJson, widthPx: number): number[] {
  const lo = ratNum(parseRat(sweep.domain[0]));
  const hi = ratNum(parseRat(sweep.domain[1]));
  return sweep.breakpoints.map((bp) => ((exactNum(bp) - lo) / (hi - lo)) * widthPx);
}

export interface CellView {
  text: string; // exact fraction pair "(p, q)"
  tooltip: string; // decimal approximation
}

function payoffCoeffs(p: string | { coeffs: string[] }): Rat[] {
  if (typeof p === 'string') return [parseRat(p)];
  return p.coeffs.map(parseRat);
}

const approx = (x: Rat) => {
  const v = ratNum(x);
  return Number.isInteger(v) ? v.toString() : v.toFixed(4);
};

/** Evaluate a (possibly parametric) game's cells at x for display. */
export function gameCells(game: GameJson, x: Rat | null): CellView[][] {
  return game.payoffs.map((row) =>
    row.map(([p1, p2]) => {
      const c1 = payoffCoeffs(p1);
      const c2 = payoffCoeffs(p2);
      if ((c1.length > 1 || c2.length > 1) && x === null) {
        throw new Error('parametric game needs a parameter value');
      }
      const v1 = c1.length > 1 ? evalPoly(c1, x!) : c1[0];
      const v2 = c2.length > 1 ? evalPoly(c2, x!) : c2[0];
      return {
        text: `(${ratStr(v1)}, ${ratStr(v2)})`,
        tooltip: `(${approx(v1)}, ${approx(v2)})`,
      };
    })
  );
}

export function labels(game: GameJson): { rows: string[]; cols: string[] } {
  const rows = game.rowLabels ?? Array.from({ length: game.rows }, (_, i) => `R${i + 1}`);
  const cols = game.colLabels ?? Array.from({ length: game.cols }, (_, j) => `C${j + 1}`);
  return { rows, cols };
}

/** Clamp a typed rational to the sweep domain. */
export function clampToDomain(sweep: SweepJson, x: Rat): Rat {
  const lo = parseRat(sweep.domain[0]);
  const hi = parseRat(sweep.domain[1]);
  if (cmp(x, lo) < 0) return lo;
  if (cmp(x, hi) > 0) return hi;
  return x;
}
