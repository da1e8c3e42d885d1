/**
 * Reader for the simulation CSVs: comma-separated, '\n' line endings,
 * no quoting, '.' decimal point, empty cells for absent values.
 */

export type Row = Record<string, string>;

export class SchemaError extends Error {}
export class InputError extends Error {}

export function parseCsv(text: string): { header: string[]; rows: Row[] } {
  const lines = text.split('\n').filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new InputError('CSV is empty');
  }
  const header = lines[0].split(',');
  const rows: Row[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(',');
    if (cells.length !== header.length) {
      throw new InputError(`row ${i + 1} has ${cells.length} cells, header has ${header.length}`);
    }
    const row: Row = {};
    for (let c = 0; c < header.length; c++) {
      row[header[c]] = cells[c];
    }
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new InputError('CSV has a header but no data rows');
  }
  return { header, rows };
}

export function requireColumns(header: string[], required: string[]): void {
  for (const column of required) {
    if (!header.includes(column)) {
      throw new SchemaError(`missing required column "${column}"`);
    }
  }
}

/** Numeric cell accessor; undefined for empty cells, InputError for junk. */
export function numberCell(row: Row, column: string): number | undefined {
  const raw = row[column];
  if (raw === undefined || raw === '') {
    return undefined;
  }
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    throw new InputError(`cell "${raw}" in column "${column}" is not a finite number`);
  }
  return value;
}
