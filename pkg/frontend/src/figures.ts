/**
 * Turn parsed CSV rows into figure specifications: panels of x/y series
 * keyed by pair kind or by individual pair.
 */

import { InputError, numberCell, parseCsv, requireColumns, Row } from './csv';

export type FigureKind = 'fig1' | 'fig2' | 'fig3' | 'fig4';

export interface Series {
  label: string;
  marker: 'circle' | 'square' | 'triangle' | 'diamond';
  points: Array<{ x: number; y: number }>;
}

export interface Panel {
  title: string;
  xLabel: string;
  yLabel: string;
  logX: boolean;
  series: Series[];
}

export interface Figure {
  kind: FigureKind;
  panels: Panel[];
}

const KIND_MARKERS = {
  N: 'circle',
  NN: 'square',
  NNN: 'triangle',
} as const;

const PAIR_KINDS = ['N', 'NN', 'NNN'] as const;
type PairKind = (typeof PAIR_KINDS)[number];

function isPairKind(value: string): value is PairKind {
  return (PAIR_KINDS as readonly string[]).includes(value);
}

function sortedByX(points: Array<{ x: number; y: number }>): Array<{ x: number; y: number }> {
  return [...points].sort((a, b) => a.x - b.x);
}

function mean(values: number[]): number {
  return values.reduce((acc, v) => acc + v, 0) / values.length;
}

/** Same-splitting scan: max concurrence vs pair position, one series per kind. */
export function buildFig1(text: string): Figure {
  const { header, rows } = parseCsv(text);
  requireColumns(header, ['j_z_over_j_xy', 'pair_kind', 'pair_p', 'pair_q', 'c_max']);
  const panels: Panel[] = [];
  const jzValues = [...new Set(rows.map((row) => row['j_z_over_j_xy']))];
  for (const jz of jzValues) {
    const panelRows = rows.filter((row) => row['j_z_over_j_xy'] === jz);
    const series: Series[] = [];
    for (const kind of PAIR_KINDS) {
      const points = panelRows
        .filter((row) => row['pair_kind'] === kind)
        .map((row) => ({
          x: numberCell(row, 'pair_p') as number,
          y: numberCell(row, 'c_max') as number,
        }));
      if (points.length > 0) {
        series.push({ label: kind, marker: KIND_MARKERS[kind], points: sortedByX(points) });
      }
    }
    panels.push({
      title: `J_Z = ${Number(jz)} J_XY`,
      xLabel: 'pair position n',
      yLabel: 'C_max',
      logX: false,
      series,
    });
  }
  return { kind: 'fig1', panels };
}

interface SweepTables {
  spectrum: Array<{ d: number; npc: number; eta: number }>;
  byKind: Map<PairKind, Map<string, Array<{ d: number; cMax: number; cBar: number }>>>;
}

function readSweep(text: string): SweepTables {
  const { header, rows } = parseCsv(text);
  requireColumns(header, [
    'd_over_J',
    'pair_kind',
    'pair_p',
    'pair_q',
    'mean_c_max',
    'mean_c_bar',
    'mean_npc',
    'mean_eta',
  ]);
  const spectrum: SweepTables['spectrum'] = [];
  const byKind: SweepTables['byKind'] = new Map();
  for (const row of rows) {
    const d = numberCell(row, 'd_over_J') as number;
    const kind = row['pair_kind'];
    if (kind === '') {
      spectrum.push({
        d,
        npc: numberCell(row, 'mean_npc') as number,
        eta: numberCell(row, 'mean_eta') as number,
      });
      continue;
    }
    if (!isPairKind(kind)) {
      throw new InputError(`unknown pair kind "${kind}"`);
    }
    const pair = `${row['pair_p']}-${row['pair_q']}`;
    if (!byKind.has(kind)) {
      byKind.set(kind, new Map());
    }
    const pairs = byKind.get(kind) as Map<string, Array<{ d: number; cMax: number; cBar: number }>>;
    if (!pairs.has(pair)) {
      pairs.set(pair, []);
    }
    pairs.get(pair)!.push({
      d,
      cMax: numberCell(row, 'mean_c_max') as number,
      cBar: numberCell(row, 'mean_c_bar') as number,
    });
  }
  if (spectrum.length === 0) {
    throw new InputError('sweep CSV has no spectrum rows (empty pair_kind)');
  }
  return { spectrum, byKind };
}

/** Sweep summary: mean npc on top, eta below, both against d/J on log x. */
export function buildFig2(text: string): Figure {
  const { spectrum } = readSweep(text);
  const npcSeries: Series = {
    label: 'mean npc',
    marker: 'circle',
    points: sortedByX(spectrum.map(({ d, npc }) => ({ x: d, y: npc }))),
  };
  const etaSeries: Series = {
    label: 'eta',
    marker: 'square',
    points: sortedByX(spectrum.map(({ d, eta }) => ({ x: d, y: eta }))),
  };
  return {
    kind: 'fig2',
    panels: [
      { title: 'eigenstate spread', xLabel: 'd/J', yLabel: '<npc>', logX: true, series: [npcSeries] },
      { title: 'chaos indicator', xLabel: 'd/J', yLabel: '<eta>', logX: true, series: [etaSeries] },
    ],
  };
}

function kindAverage(
  tables: SweepTables,
  kind: PairKind,
  pick: (entry: { cMax: number; cBar: number }) => number,
): Series {
  const pairs = tables.byKind.get(kind);
  if (!pairs) {
    throw new InputError(`sweep CSV has no rows for pair kind "${kind}"`);
  }
  const byD = new Map<number, number[]>();
  for (const entries of pairs.values()) {
    for (const entry of entries) {
      if (!byD.has(entry.d)) {
        byD.set(entry.d, []);
      }
      byD.get(entry.d)!.push(pick(entry));
    }
  }
  const points = sortedByX([...byD.entries()].map(([x, values]) => ({ x, y: mean(values) })));
  return { label: kind, marker: KIND_MARKERS[kind], points };
}

/** Concurrence means vs d/J: C_max on top, C_bar below, one series per kind. */
export function buildFig3(text: string): Figure {
  const tables = readSweep(text);
  const maxSeries = PAIR_KINDS.map((kind) => kindAverage(tables, kind, (e) => e.cMax));
  const barSeries = PAIR_KINDS.map((kind) => kindAverage(tables, kind, (e) => e.cBar));
  return {
    kind: 'fig3',
    panels: [
      { title: 'maximum concurrence', xLabel: 'd/J', yLabel: '<C_max>', logX: true, series: maxSeries },
      { title: 'mean concurrence', xLabel: 'd/J', yLabel: '<C_bar>', logX: true, series: barSeries },
    ],
  };
}

/** Per-pair maximum concurrence: NN pairs on top, NNN pairs below. */
export function buildFig4(text: string): Figure {
  const tables = readSweep(text);
  const markers: Series['marker'][] = ['circle', 'square', 'triangle', 'diamond'];
  const panelFor = (kind: PairKind, title: string): Panel => {
    const pairs = tables.byKind.get(kind);
    if (!pairs) {
      throw new InputError(`sweep CSV has no rows for pair kind "${kind}"`);
    }
    const series = [...pairs.entries()].map(([label, entries], index) => ({
      label,
      marker: markers[index % markers.length],
      points: sortedByX(entries.map(({ d, cMax }) => ({ x: d, y: cMax }))),
    }));
    return { title, xLabel: 'd/J', yLabel: '<C_max>', logX: true, series };
  };
  return {
    kind: 'fig4',
    panels: [panelFor('NN', 'next-nearest pairs'), panelFor('NNN', 'next-next-nearest pairs')],
  };
}

export function buildFigure(kind: FigureKind, text: string): Figure {
  switch (kind) {
    case 'fig1':
      return buildFig1(text);
    case 'fig2':
      return buildFig2(text);
    case 'fig3':
      return buildFig3(text);
    case 'fig4':
      return buildFig4(text);
  }
}
