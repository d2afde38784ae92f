// Static keyboard geometry. Keys never move: positions are a pure function
// of the layout rows, assigned once and reused for every render.

import { UNDO_KEY } from "./protocol.js";

export interface Layout {
  rows: string[][];
}

// Alphabetical grid; space, apostrophe and UNDO live in a fixed bottom row.
export const DEFAULT_LAYOUT: Layout = {
  rows: [
    ["a", "b", "c", "d", "e", "f", "g"],
    ["h", "i", "j", "k", "l", "m", "n"],
    ["o", "p", "q", "r", "s", "t", "u"],
    ["v", "w", "x", "y", "z", "'"],
    [" ", UNDO_KEY],
  ],
};

export interface Position {
  row: number;
  col: number;
}

export function layoutPositions(layout: Layout): Map<string, Position> {
  const positions = new Map<string, Position>();
  layout.rows.forEach((row, r) => {
    row.forEach((key, c) => {
      if (positions.has(key)) {
        throw new Error(`layout places key ${JSON.stringify(key)} twice`);
      }
      positions.set(key, { row: r, col: c });
    });
  });
  return positions;
}

/**
 * Positions for every key the server knows. Layout keys keep their grid
 * slots; any server key missing from the layout gets a stable slot in an
 * overflow row (sorted, so the result never depends on message order).
 */
export function positionsFor(layout: Layout, serverKeys: string[]): Map<string, Position> {
  const positions = layoutPositions(layout);
  const extras = serverKeys.filter((k) => !positions.has(k)).sort();
  const overflowRow = layout.rows.length;
  extras.forEach((key, i) => positions.set(key, { row: overflowRow, col: i }));
  return positions;
}
