#!/usr/bin/env node
/**
 * render-fig --kind fig1|fig2|fig3|fig4 --input <csv> --output <svg>
 *
 * Reads one simulation CSV and writes one SVG figure. Exit codes:
 * 0 success, 2 usage error, 1 input/schema error.
 */

import { readFileSync, writeFileSync } from 'fs';
import { InputError, SchemaError } from './csv';
import { buildFigure, FigureKind } from './figures';
import { renderFigure } from './svg';

const KINDS: FigureKind[] = ['fig1', 'fig2', 'fig3', 'fig4'];

function parseArgs(argv: string[]): { kind: FigureKind; input: string; output: string } {
  const values: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!['--kind', '--input', '--output'].includes(flag) || value === undefined) {
      throw new UsageError(`unexpected argument "${flag}"`);
    }
    values[flag.slice(2)] = value;
  }
  for (const required of ['kind', 'input', 'output']) {
    if (!(required in values)) {
      throw new UsageError(`missing --${required}`);
    }
  }
  if (!KINDS.includes(values['kind'] as FigureKind)) {
    throw new UsageError(`--kind must be one of ${KINDS.join(', ')}, got "${values['kind']}"`);
  }
  return { kind: values['kind'] as FigureKind, input: values['input'], output: values['output'] };
}

class UsageError extends Error {}

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
  } catch (error) {
    if (error instanceof UsageError) {
      console.error(`usage error: ${error.message}`);
      console.error('usage: render-fig --kind fig1|fig2|fig3|fig4 --input <csv> --output <svg>');
      return 2;
    }
    throw error;
  }
  try {
    const text = readFileSync(args.input, 'utf8');
    const figure = buildFigure(args.kind, text);
    const { svg, warnings } = renderFigure(figure);
    for (const warning of warnings) {
      console.error(`note: ${warning}`);
    }
    writeFileSync(args.output, svg, 'utf8');
    console.log(`wrote ${args.output}`);
    return 0;
  } catch (error) {
    if (error instanceof SchemaError || error instanceof InputError) {
      console.error(`error: ${error.message}`);
      return 1;
    }
    if (error instanceof Error && 'code' in error) {
      console.error(`error: ${error.message}`);
      return 1;
    }
    throw error;
  }
}

if (typeof require !== 'undefined' && require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
