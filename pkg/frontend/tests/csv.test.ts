import { describe, expect, it } from 'vitest';
import { InputError, numberCell, parseCsv, requireColumns, SchemaError } from '../src/csv';

describe('parseCsv', () => {
  it('parses header and rows', () => {
    const { header, rows } = parseCsv('a,b,c\n1,2,3\n4,,6\n');
    expect(header).toEqual(['a', 'b', 'c']);
    expect(rows).toHaveLength(2);
    expect(rows[0]).toEqual({ a: '1', b: '2', c: '3' });
    expect(rows[1].b).toBe('');
  });

  it('rejects empty input', () => {
    expect(() => parseCsv('')).toThrow(InputError);
  });

  it('rejects header-only input', () => {
    expect(() => parseCsv('a,b\n')).toThrow(InputError);
  });

  it('rejects ragged rows', () => {
    expect(() => parseCsv('a,b\n1,2,3\n')).toThrow(InputError);
  });
});

describe('requireColumns', () => {
  it('names the missing column', () => {
    expect(() => requireColumns(['a', 'b'], ['a', 'mean_eta'])).toThrow(/mean_eta/);
    expect(() => requireColumns(['a', 'b'], ['a', 'mean_eta'])).toThrow(SchemaError);
  });

  it('accepts a complete header', () => {
    expect(() => requireColumns(['a', 'b'], ['b'])).not.toThrow();
  });
});

describe('numberCell', () => {
  it('returns undefined for empty cells', () => {
    expect(numberCell({ x: '' }, 'x')).toBeUndefined();
  });

  it('parses 17-digit floats', () => {
    expect(numberCell({ x: '0.050000000000000003' }, 'x')).toBeCloseTo(0.05, 15);
  });

  it('rejects junk', () => {
    expect(() => numberCell({ x: 'abc' }, 'x')).toThrow(InputError);
  });
});
