// DOM layer: paints the matrix with highlight classes, the slider ticks,
// summary lines and the error banner. All decisions come from model.ts.

import type { ResultJson, SweepJson } from './api.js';
import type { CellView, Highlights } from './model.js';
import { cellKey, tickPositions } from './model.js';

export function renderMatrix(
  host: HTMLElement,
  cells: CellView[][],
  rowLabels: string[],
  colLabels: string[],
  highlights: Highlights,
  editable: boolean,
  rawValues?: string[][][]
): void {
  const table = document.createElement('table');
  table.className = 'game';
  const head = table.insertRow();
  head.insertCell();
  colLabels.forEach((label, j) => {
    const th = document.createElement('th');
    th.textContent = label;
    if (highlights.greenCols.has(j + 1)) th.classList.add('maximin');
    if (highlights.redCols.has(j + 1)) th.classList.add('dominated');
    head.appendChild(th);
  });
  cells.forEach((row, i) => {
    const tr = table.insertRow();
    const th = document.createElement('th');
    th.textContent = rowLabels[i];
    if (highlights.greenRows.has(i + 1)) th.classList.add('maximin');
    if (highlights.redRows.has(i + 1)) th.classList.add('dominated');
    tr.appendChild(th);
    row.forEach((cell, j) => {
      const td = tr.insertCell();
      if (highlights.blue.has(cellKey(i + 1, j + 1))) td.classList.add('nash');
      if (editable && rawValues) {
        for (const side of [0, 1]) {
          const input = document.createElement('input');
          input.value = rawValues[i][j][side];
          input.dataset.i = String(i);
          input.dataset.j = String(j);
          input.dataset.side = String(side);
          input.className = 'payoff';
          td.appendChild(input);
        }
      } else {
        td.textContent = cell.text;
        td.title = cell.tooltip;
      }
    });
  });
  host.replaceChildren(table);
}

export function renderTicks(track: HTMLElement, sweep: SweepJson | null): void {
  track.replaceChildren();
  if (!sweep) return;
  const width = track.clientWidth || 1;
  for (const px of tickPositions(sweep, width)) {
    const tick = document.createElement('div');
    tick.className = 'tick';
    tick.style.left = `${px}px`;
    track.appendChild(tick);
  }
}

export function renderSummary(host: HTMLElement, result: ResultJson | null): void {
  if (!result) {
    host.textContent = '';
    return;
  }
  const lines: string[] = [];
  if (result.ne) {
    const text = result.ne.map(([i, j]) => `(${i}, ${j})`).join(', ') || 'none';
    lines.push(`Pure NE: ${text}`);
  }
  if (result.maximinRows) {
    lines.push(
      `Maximin rows {${result.maximinRows.join(', ')}}, cols {${result.maximinCols!.join(', ')}}` +
        (result.securityLevels ? `, security levels (${result.securityLevels.join(', ')})` : '')
    );
  }
  if (result.dominatedRows) {
    lines.push(
      `Dominated rows {${result.dominatedRows.join(', ')}}, cols {${result.dominatedCols!.join(', ')}}`
    );
  }
  host.replaceChildren(...lines.map((text) => {
    const p = document.createElement('div');
    p.textContent = text;
    return p;
  }));
}

export function renderError(banner: HTMLElement, code: string | null, message?: string): void {
  if (!code) {
    banner.hidden = true;
    banner.textContent = '';
    return;
  }
  banner.hidden = false;
  banner.textContent = `${code}: ${message ?? ''}`;
}
