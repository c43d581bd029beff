// Typed client for the /api/v1 endpoints, plus a latest-only guard that
// discards stale responses by sequence number.

import type { ExactValue } from './rational.js';

export type PayoffJson = string | { coeffs: string[] };

export interface GameJson {
  rows: number;
  cols: number;
  parameter: string | null;
  rowLabels?: string[];
  colLabels?: string[];
  payoffs: [PayoffJson, PayoffJson][][];
}

export interface ResultJson {
  ne?: number[][];
  dominatedRows?: number[];
  dominatedCols?: number[];
  maximinRows?: number[];
  maximinCols?: number[];
  securityLevels?: string[];
}

export interface SegmentJson {
  kind: 'interval' | 'point';
  lo?: ExactValue;
  hi?: ExactValue;
  loOpen?: boolean;
  hiOpen?: boolean;
  sample?: string;
  at?: ExactValue;
  result: ResultJson;
}

export interface SweepJson {
  parameter: string;
  domain: [string, string];
  exact: boolean;
  analyses: string[];
  breakpoints: ExactValue[];
  segments: SegmentJson[];
}

export interface ApiError {
  code: string;
  message: string;
}

export class ServiceError extends Error {
  code: string;

  constructor(err: ApiError) {
    super(err.message);
    this.code = err.code;
  }
}

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const response = await fetch(base + path, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  });
  const doc = await response.json();
  if (!doc.ok) throw new ServiceError(doc.error ?? { code: 'INTERNAL', message: 'unknown' });
  return doc.result as T;
}

export class ApiClient {
  constructor(private base: string = '') {}

  solve(game: GameJson, analysis: string, param?: string): Promise<ResultJson> {
    const options: Record<string, unknown> = { analysis };
    if (param !== undefined) options.param = param;
    return post<ResultJson>(this.base, '/api/v1/solve', { game, options });
  }

  extend(game: GameJson, cls: string, symbolic: boolean, param?: string): Promise<GameJson> {
    const options: Record<string, unknown> = { class: cls, symbolic };
    if (param !== undefined) options.param = param;
    return post<GameJson>(this.base, '/api/v1/extend', { game, options });
  }

  sweep(game: GameJson, min: string, max: string, analysis: string): Promise<SweepJson> {
    return post<SweepJson>(this.base, '/api/v1/sweep', { game, options: { min, max, analysis } });
  }

  health(): Promise<{ ok: boolean; version: string }> {
    return fetch(this.base + '/api/v1/health').then((r) => r.json());
  }
}

/**
 * Runs async lookups so that only the newest one can deliver: anything that
 * resolves after a newer call started is reported as stale (null).
 */
export class LatestOnly {
  private seq = 0;

  async run<T>(job: () => Promise<T>): Promise<T | null> {
    const ticket = ++this.seq;
    const value = await job();
    return ticket === this.seq ? value : null;
  }
}
