/**
 * Minimal deterministic SVG chart renderer: fixed styles, no
 * timestamps, no randomness, so identical inputs give identical bytes.
 */

import { Figure, Panel, Series } from './figures';
import { InputError } from './csv';

const WIDTH = 640;
const PANEL_HEIGHT = 300;
const MARGIN = { left: 64, right: 18, top: 30, bottom: 44 };
const COLORS = ['#1b1b1b', '#c0392b', '#2e6da4', '#1e8449', '#8e44ad', '#b7950b'];

type Scale = (value: number) => number;

function fmt(value: number): string {
  return Number(value.toFixed(2)).toString();
}

function tickLabel(value: number): string {
  if (value !== 0 && (Math.abs(value) >= 1e4 || Math.abs(value) < 1e-3)) {
    return value.toExponential(0).replace('+', '');
  }
  return Number(value.toPrecision(6)).toString();
}

function linearTicks(lo: number, hi: number, target = 6): number[] {
  const span = hi - lo || 1;
  const rawStep = span / target;
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const step = [1, 2, 5, 10].map((m) => m * power).find((s) => span / s <= target) ?? power * 10;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function decadeTicks(lo: number, hi: number): number[] {
  if (!(lo > 0) || !Number.isFinite(lo) || !Number.isFinite(hi)) {
    throw new InputError(`log axis needs positive finite bounds, got [${lo}, ${hi}]`);
  }
  const ticks: number[] = [];
  for (let k = Math.ceil(Math.log10(lo) - 1e-9); Math.pow(10, k) <= hi * (1 + 1e-9); k++) {
    ticks.push(Math.pow(10, k));
  }
  return ticks.length > 0 ? ticks : [lo, hi];
}

function markerShape(series: Series, x: number, y: number, color: string): string {
  const r = 3.2;
  switch (series.marker) {
    case 'circle':
      return `<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${r}" fill="${color}"/>`;
    case 'square':
      return `<rect x="${fmt(x - r)}" y="${fmt(y - r)}" width="${fmt(2 * r)}" height="${fmt(2 * r)}" fill="${color}"/>`;
    case 'triangle':
      return `<polygon points="${fmt(x)},${fmt(y - r - 1)} ${fmt(x - r - 1)},${fmt(y + r)} ${fmt(x + r + 1)},${fmt(y + r)}" fill="${color}"/>`;
    case 'diamond':
      return `<polygon points="${fmt(x)},${fmt(y - r - 1)} ${fmt(x + r + 1)},${fmt(y)} ${fmt(x)},${fmt(y + r + 1)} ${fmt(x - r - 1)},${fmt(y)}" fill="${color}"/>`;
  }
}

function renderPanel(panel: Panel, offsetY: number, warnings: string[]): string {
  const plotLeft = MARGIN.left;
  const plotRight = WIDTH - MARGIN.right;
  const plotTop = offsetY + MARGIN.top;
  const plotBottom = offsetY + PANEL_HEIGHT - MARGIN.bottom;

  const visible = panel.series.map((series) => {
    if (!panel.logX) {
      return series;
    }
    const kept = series.points.filter((point) => point.x > 0);
    const dropped = series.points.length - kept.length;
    if (dropped > 0) {
      warnings.push(
        `${panel.title}: dropped ${dropped} non-positive x value(s) from "${series.label}" for the log axis`,
      );
    }
    return { ...series, points: kept };
  });

  const points = visible.flatMap((series) => series.points);
  if (points.length === 0) {
    throw new InputError(`panel "${panel.title}" has no plottable points`);
  }
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  let xLo = Math.min(...xs);
  let xHi = Math.max(...xs);
  let yLo = Math.min(...ys, 0);
  let yHi = Math.max(...ys);
  if (xLo === xHi) {
    if (panel.logX) {
      xLo /= 2;
      xHi *= 2;
    } else {
      xLo -= 0.5;
      xHi += 0.5;
    }
  }
  if (yLo === yHi) {
    yHi += 1;
  }
  yHi += (yHi - yLo) * 0.06;

  const xScale: Scale = panel.logX
    ? (v) => plotLeft + ((Math.log10(v) - Math.log10(xLo)) / (Math.log10(xHi) - Math.log10(xLo))) * (plotRight - plotLeft)
    : (v) => plotLeft + ((v - xLo) / (xHi - xLo)) * (plotRight - plotLeft);
  const yScale: Scale = (v) => plotBottom - ((v - yLo) / (yHi - yLo)) * (plotBottom - plotTop);

  const parts: string[] = [];
  parts.push(`<text x="${fmt(plotLeft)}" y="${fmt(offsetY + 18)}" font-size="13" font-weight="bold">${panel.title}</text>`);
  parts.push(`<rect x="${fmt(plotLeft)}" y="${fmt(plotTop)}" width="${fmt(plotRight - plotLeft)}" height="${fmt(plotBottom - plotTop)}" fill="none" stroke="#444"/>`);

  const xTicks = panel.logX ? decadeTicks(xLo, xHi) : linearTicks(xLo, xHi);
  for (const tick of xTicks) {
    const x = xScale(tick);
    parts.push(`<line x1="${fmt(x)}" y1="${fmt(plotBottom)}" x2="${fmt(x)}" y2="${fmt(plotBottom + 5)}" stroke="#444"/>`);
    parts.push(`<text x="${fmt(x)}" y="${fmt(plotBottom + 18)}" font-size="11" text-anchor="middle">${tickLabel(tick)}</text>`);
  }
  for (const tick of linearTicks(yLo, yHi, 5)) {
    const y = yScale(tick);
    parts.push(`<line x1="${fmt(plotLeft - 5)}" y1="${fmt(y)}" x2="${fmt(plotLeft)}" y2="${fmt(y)}" stroke="#444"/>`);
    parts.push(`<text x="${fmt(plotLeft - 8)}" y="${fmt(y + 4)}" font-size="11" text-anchor="end">${tickLabel(tick)}</text>`);
  }
  parts.push(`<text x="${fmt((plotLeft + plotRight) / 2)}" y="${fmt(plotBottom + 36)}" font-size="12" text-anchor="middle">${panel.xLabel}</text>`);
  parts.push(`<text x="16" y="${fmt((plotTop + plotBottom) / 2)}" font-size="12" text-anchor="middle" transform="rotate(-90 16 ${fmt((plotTop + plotBottom) / 2)})">${panel.yLabel}</text>`);

  visible.forEach((series, index) => {
    const color = COLORS[index % COLORS.length];
    if (series.points.length > 1) {
      const path = series.points.map((p) => `${fmt(xScale(p.x))},${fmt(yScale(p.y))}`).join(' ');
      parts.push(`<polyline points="${path}" fill="none" stroke="${color}" stroke-width="1.4"/>`);
    }
    for (const point of series.points) {
      parts.push(markerShape(series, xScale(point.x), yScale(point.y), color));
    }
    const legendY = plotTop + 14 + index * 16;
    parts.push(markerShape(series, plotRight - 86, legendY - 4, color));
    parts.push(`<text x="${fmt(plotRight - 76)}" y="${fmt(legendY)}" font-size="11">${series.label}</text>`);
  });

  return parts.join('\n');
}

export function renderFigure(figure: Figure): { svg: string; warnings: string[] } {
  const warnings: string[] = [];
  const height = PANEL_HEIGHT * figure.panels.length;
  const body = figure.panels
    .map((panel, index) => renderPanel(panel, index * PANEL_HEIGHT, warnings))
    .join('\n');
  const svg =
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${height}" ` +
    `viewBox="0 0 ${WIDTH} ${height}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${WIDTH}" height="${height}" fill="white"/>\n${body}\n</svg>\n`;
  return { svg, warnings };
}
