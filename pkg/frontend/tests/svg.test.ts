import { readFileSync } from 'fs';
import { join } from 'path';
import { describe, expect, it } from 'vitest';
import { buildFig1, buildFig2 } from '../src/figures';
import { renderFigure } from '../src/svg';

const fixture = (name: string) => readFileSync(join(__dirname, '..', 'fixtures', name), 'utf8');

describe('renderFigure', () => {
  it('is deterministic for identical inputs', () => {
    const figure = buildFig2(fixture('sweep_small.csv'));
    expect(renderFigure(figure).svg).toBe(renderFigure(figure).svg);
  });

  it('drops non-positive x values on log axes with a note', () => {
    const { svg, warnings } = renderFigure(buildFig2(fixture('sweep_small.csv')));
    expect(warnings.length).toBeGreaterThan(0);
    expect(warnings[0]).toMatch(/non-positive/);
    expect(svg).toContain('<svg');
    expect(svg).toContain('</svg>');
  });

  it('renders a single-gridpoint sweep without error', () => {
    const { svg } = renderFigure(buildFig2(fixture('sweep_single_point.csv')));
    expect(svg).toContain('<circle');
  });

  it('draws markers per pair kind for the scan figure', () => {
    const { svg, warnings } = renderFigure(buildFig1(fixture('fig1_small.csv')));
    expect(warnings).toEqual([]);
    expect(svg).toContain('<circle');
    expect(svg).toContain('<rect');
    expect(svg).toContain('<polygon');
    // two panels stacked
    expect(svg).toContain('J_Z = 0 J_XY');
    expect(svg).toContain('J_Z = 1 J_XY');
  });

  it('never embeds timestamps', () => {
    const { svg } = renderFigure(buildFig1(fixture('fig1_small.csv')));
    expect(svg).not.toMatch(/\d{4}-\d{2}-\d{2}/);
  });
});
