// Wiring: a 2x2 editable base game, an extension class picker, a parameter
// slider backed by one upfront sweep (segment lookup per move, no round
// trips), analysis toggles, and Game File Format upload for n x m games.

import { ApiClient, GameJson, LatestOnly, ResultJson, ServiceError, SweepJson } from './api.js';
import {
  AnalysisToggles,
  clampToDomain,
  gameCells,
  highlightsFromResult,
  labels,
  segmentAt,
} from './model.js';
import { renderError, renderMatrix, renderSummary, renderTicks } from './render.js';
import { Rat, parseRat, rat, ratNum, ratStr } from './rational.js';

const SLIDER_STEPS = 1000n;
const CLASSES = ['none', 'A0', 'B0', 'C0', 'A1', 'A2', 'B1', 'C1', 'D1', 'D2', 'E1', 'E2'];
const PARAMETRIC = new Set(['A1', 'A2', 'C1', 'D1', 'D2', 'E1', 'E2']);

interface ExplorerState {
  baseGame: string[][][]; // 2x2 grid of [u1, u2] rational strings
  uploaded: GameJson | null;
  selectedClass: string;
  paramValue: Rat;
  toggles: AnalysisToggles;
  extension: GameJson | null; // symbolic extension of the base game
  sweepCache: SweepJson | null;
  lastResult: ResultJson | null;
}

const state: ExplorerState = {
  baseGame: [
    [['3', '3'], ['0', '5']],
    [['5', '0'], ['1', '1']],
  ],
  uploaded: null,
  selectedClass: 'none',
  paramValue: rat(1n, 2n),
  toggles: { ne: true, maximin: true, dominated: true },
  extension: null,
  sweepCache: null,
  lastResult: null,
};

const api = new ApiClient('');
const latest = new LatestOnly();

const el = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

function baseGameJson(): GameJson {
  return {
    rows: 2,
    cols: 2,
    parameter: null,
    payoffs: state.baseGame.map((row) => row.map(([a, b]) => [a, b])) as GameJson['payoffs'],
  };
}

function currentConstantGame(): GameJson | null {
  if (state.uploaded) return state.uploaded;
  if (state.selectedClass === 'none') return baseGameJson();
  return null;
}

function paramString(): string {
  return ratStr(state.paramValue);
}

function showError(err: unknown): void {
  if (err instanceof ServiceError) {
    renderError(el('banner'), err.code, err.message);
  } else {
    renderError(el('banner'), 'NETWORK', String(err));
  }
}

function clearError(): void {
  renderError(el('banner'), null);
}

function repaint(): void {
  const toggles = state.toggles;
  const highlights = highlightsFromResult(state.lastResult ?? {}, toggles);
  let game: GameJson;
  let x: Rat | null = null;
  let editable = false;
  if (state.uploaded) {
    game = state.uploaded;
  } else if (state.selectedClass === 'none') {
    game = baseGameJson();
    editable = true;
  } else if (state.extension) {
    game = state.extension;
    x = game.parameter ? state.paramValue : null;
  } else {
    return;
  }
  const { rows, cols } = labels(game);
  renderMatrix(
    el('matrix'),
    gameCells(game, x),
    rows,
    cols,
    highlights,
    editable,
    editable ? state.baseGame : undefined
  );
  renderSummary(el('summary'), state.lastResult);
  const sliderBox = el('slider-box');
  sliderBox.hidden = !(state.selectedClass !== 'none' && PARAMETRIC.has(state.selectedClass));
  el<HTMLSpanElement>('param-name').textContent = state.sweepCache?.parameter ?? 'x';
  el<HTMLSpanElement>('param-value').textContent = paramString();
  renderTicks(el('ticks'), state.sweepCache);
}

async function solveConstant(): Promise<void> {
  const game = currentConstantGame();
  if (!game) return;
  try {
    const result = await latest.run(() => api.solve(game, 'all'));
    if (result === null) return; // stale
    state.lastResult = result;
    clearError();
  } catch (err) {
    state.lastResult = null;
    showError(err);
  }
  repaint();
}

async function selectClass(name: string): Promise<void> {
  state.selectedClass = name;
  state.uploaded = null;
  state.extension = null;
  state.sweepCache = null;
  if (name === 'none') {
    await solveConstant();
    return;
  }
  try {
    const symbolic = PARAMETRIC.has(name);
    const extension = await api.extend(baseGameJson(), name, symbolic);
    state.extension = extension;
    if (symbolic) {
      try {
        state.sweepCache = await api.sweep(extension, '0', '1', 'all');
      } catch {
        state.sweepCache = null; // slider falls back to per-change solve
      }
      await onParamChanged(state.paramValue, false);
    } else {
      const result = await latest.run(() => api.solve(extension, 'all'));
      if (result !== null) state.lastResult = result;
      clearError();
      repaint();
    }
  } catch (err) {
    showError(err);
    repaint();
  }
}

async function onParamChanged(value: Rat, exactRequested: boolean): Promise<void> {
  if (!state.extension) return;
  state.paramValue = state.sweepCache ? clampToDomain(state.sweepCache, value) : value;
  if (state.sweepCache && !exactRequested) {
    // no round trip: the upfront sweep already knows this segment
    const segment = segmentAt(state.sweepCache, state.paramValue);
    if (segment) {
      state.lastResult = segment.result;
      clearError();
      repaint();
      return;
    }
  }
  try {
    const result = await latest.run(() =>
      api.solve(state.extension!, 'all', paramString())
    );
    if (result === null) return;
    state.lastResult = result;
    clearError();
  } catch (err) {
    showError(err);
  }
  repaint();
}

function wire(): void {
  const classSelect = el<HTMLSelectElement>('class-select');
  for (const name of CLASSES) {
    const option = document.createElement('option');
    option.value = name;
    option.textContent = name === 'none' ? 'none (solve input game)' : name;
    classSelect.appendChild(option);
  }
  classSelect.addEventListener('change', () => void selectClass(classSelect.value));

  const slider = el<HTMLInputElement>('param-slider');
  slider.addEventListener('input', () => {
    const k = BigInt(slider.value);
    void onParamChanged(rat(k, SLIDER_STEPS), false);
  });

  const exactInput = el<HTMLInputElement>('param-exact');
  exactInput.addEventListener('change', () => {
    try {
      const value = parseRat(exactInput.value);
      slider.value = String(Math.round(ratNum(value) * Number(SLIDER_STEPS)));
      void onParamChanged(value, true); // typed rationals re-solve exactly
    } catch {
      renderError(el('banner'), 'PARSE_ERROR', `not a rational: ${exactInput.value}`);
    }
  });

  for (const key of ['ne', 'maximin', 'dominated'] as const) {
    const box = el<HTMLInputElement>(`toggle-${key}`);
    box.checked = true;
    box.addEventListener('change', () => {
      state.toggles[key] = box.checked;
      repaint();
    });
  }

  el('matrix').addEventListener('change', (event) => {
    const input = event.target as HTMLInputElement;
    if (!input.classList.contains('payoff')) return;
    try {
      parseRat(input.value);
    } catch {
      renderError(el('banner'), 'PARSE_ERROR', `not a rational: ${input.value}`);
      return;
    }
    const { i, j, side } = input.dataset;
    state.baseGame[Number(i)][Number(j)][Number(side)] = input.value.trim();
    if (state.selectedClass === 'none') {
      void solveConstant();
    } else {
      void selectClass(state.selectedClass); // refresh extension + sweep
    }
  });

  const upload = el<HTMLInputElement>('upload');
  upload.addEventListener('change', async () => {
    const file = upload.files?.[0];
    if (!file) return;
    try {
      const game = JSON.parse(await file.text()) as GameJson;
      state.uploaded = game;
      state.selectedClass = 'none';
      classSelect.value = 'none';
      await solveConstant();
    } catch (err) {
      showError(err);
    }
  });

  el('reset').addEventListener('click', () => {
    state.uploaded = null;
    classSelect.value = 'none';
    void selectClass('none');
  });
}

wire();
void selectClass('none');
