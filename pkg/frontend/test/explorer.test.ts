// Contract tests against fixtures recorded from the live service: the
// explorer must highlight exactly what the engine reports, both through
// direct solve responses and through the sweep-cache path the slider uses.

import { readFileSync } from 'node:fs';

import { describe, expect, it } from 'vitest';

import type { GameJson, ResultJson, SweepJson } from '../src/api.js';
import {
  cellKey,
  gameCells,
  highlightsFromResult,
  segmentAt,
  tickPositions,
} from '../src/model.js';
import { exactNum, parseRat } from '../src/rational.js';

const fixture = <T>(name: string): T =>
  JSON.parse(readFileSync(new URL(`./fixtures/${name}`, import.meta.url), 'utf-8')) as T;

const ALL_ON = { ne: true, maximin: true, dominated: true };

const blueSet = (result: ResultJson) =>
  new Set([...highlightsFromResult(result, ALL_ON).blue]);

describe('highlight contract at the anchor parameters (solve fixtures)', () => {
  it('D1 at t=24/100 renders cell (2,2) blue', () => {
    const result = fixture<ResultJson>('d1_t024_solve.json');
    expect(blueSet(result)).toEqual(new Set([cellKey(2, 2)]));
  });

  it('A1 at a=28/100 renders no blue cells', () => {
    const result = fixture<ResultJson>('a1_a028_solve.json');
    expect(blueSet(result)).toEqual(new Set());
  });

  it('A1 at a=65/100 renders cells (2,3) and (3,2) blue', () => {
    const result = fixture<ResultJson>('a1_a065_solve.json');
    expect(blueSet(result)).toEqual(new Set([cellKey(2, 3), cellKey(3, 2)]));
  });

  it('toggles hide their highlight groups', () => {
    const result = fixture<ResultJson>('d1_t024_solve.json');
    const off = highlightsFromResult(result, { ne: false, maximin: true, dominated: true });
    expect(off.blue.size).toBe(0);
    expect(off.greenRows.size).toBeGreaterThan(0);
  });
});

describe('sweep cache drives the slider without round trips', () => {
  const a1 = fixture<SweepJson>('a1_sweep.json');
  const d1 = fixture<SweepJson>('d1_sweep.json');

  it('segment lookup reproduces the three anchor highlight sets', () => {
    const at = (sweep: SweepJson, x: string) => {
      const seg = segmentAt(sweep, parseRat(x));
      expect(seg).not.toBeNull();
      return blueSet(seg!.result);
    };
    expect(at(d1, '24/100')).toEqual(new Set([cellKey(2, 2)]));
    expect(at(a1, '28/100')).toEqual(new Set());
    expect(at(a1, '65/100')).toEqual(new Set([cellKey(2, 3), cellKey(3, 2)]));
  });

  it('every slider step lands in exactly one segment', () => {
    for (let k = 0; k <= 1000; k++) {
      const hits = a1.segments.filter((seg) => {
        const probe = segmentAt({ ...a1, segments: [seg] }, parseRat(`${k}/1000`));
        return probe !== null;
      });
      expect(hits.length).toBe(1);
    }
  });

  it('breakpoints straddle different highlight sets around them', () => {
    // the recorded sweep's neighbouring segments must actually differ
    for (let i = 1; i < a1.segments.length - 1; i++) {
      const seg = a1.segments[i];
      if (seg.kind !== 'point') continue;
      const json = (r: ResultJson) => JSON.stringify(r);
      const left = a1.segments[i - 1].result;
      const right = a1.segments[i + 1].result;
      expect(
        json(left) !== json(seg.result) ||
          json(seg.result) !== json(right) ||
          json(left) !== json(right)
      ).toBe(true);
    }
  });
});

describe('slider breakpoint ticks', () => {
  it('match the sweep breakpoints to pixel resolution', () => {
    const sweep = fixture<SweepJson>('a1_sweep.json');
    const width = 420;
    const ticks = tickPositions(sweep, width);
    expect(ticks.length).toBe(sweep.breakpoints.length);
    const expected = sweep.breakpoints.map((bp) => exactNum(bp) * width);
    ticks.forEach((px, i) => {
      expect(Math.abs(px - expected[i])).toBeLessThan(0.5);
    });
    // the exact surd endpoint 1/2 - sqrt(3)/6 lands where it should
    expect(ticks[0]).toBeCloseTo((0.5 - Math.sqrt(3) / 6) * width, 6);
  });
});

describe('local evaluation of the symbolic extension', () => {
  it('reproduces the engine values at t=24/100', () => {
    const game = fixture<GameJson>('d1_symbolic.json');
    const cells = gameCells(game, parseRat('24/100'));
    expect(cells[1][1].text).toBe('(1, 1)');
    expect(cells[2][1].text).toBe('(19/25, 49/25)');
    expect(cells[2][1].tooltip).toBe('(0.7600, 1.9600)');
  });

  it('refuses a parametric game without a value', () => {
    const game = fixture<GameJson>('a1_symbolic.json');
    expect(() => gameCells(game, null)).toThrow();
  });
});
